// Command-line front end: per-tuple invariant reports, pairwise isomorphism
// decisions, the two published rank tables with recomputed columns, boundary
// star export, and class listings.
//
// Exit codes: 0 success (decide: Isomorphic), 1 decide: NotIsomorphic,
// 2 usage error, 3 internal inconsistency.

#include "pbsurf/classify.hpp"

#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace pbsurf;
using nlohmann::ordered_json;

namespace {

int usage(const std::string& msg) {
    if (!msg.empty()) std::cerr << "error: " << msg << "\n";
    std::cerr << "usage: pbsurf <command> [args]\n"
                 "  invariants a1 a2 a3 [--format text|json]\n"
                 "  decide a1 a2 a3 -- b1 b2 b3 [--format text|json]\n"
                 "  table rat|k3 [--format text|json]\n"
                 "  graph a1 a2 a3 [--central-weight w] [--format dot|json]\n"
                 "  scan --max N [--class S0|S++|S+0|S+-]\n";
    return 2;
}

long long parse_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not an integer: " + s);
    } catch (const std::out_of_range&) {
        throw std::out_of_range("integer out of range: " + s);
    }
    if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
    return v;
}

std::string tuple_string(const ExponentTuple& t) {
    std::ostringstream os;
    os << t;
    return os.str();
}

std::string class_tag(const PartitionClass& pc) {
    switch (pc.major) {
        case PartitionMajor::S0:
            return pc.s0 == S0Subclass::T1 ? "S0(T1)" : "S0(T2)";
        case PartitionMajor::SPlusPlus:
            return "S++";
        case PartitionMajor::SPlusZero:
            return "S+0";
        case PartitionMajor::SPlusMinus:
            return "S+-";
    }
    throw internal_error("unknown partition major");
}

int cmd_invariants(const std::vector<std::string>& args) {
    std::vector<long long> nums;
    std::string format = "text";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format") {
            if (++i == args.size()) throw std::invalid_argument("--format needs a value");
            format = args[i];
        } else {
            nums.push_back(parse_int(args[i]));
        }
    }
    if (nums.size() != 3) throw std::invalid_argument("invariants needs three exponents");
    if (format != "text" && format != "json")
        throw std::invalid_argument("bad format: " + format);
    ExponentTuple t(nums[0], nums[1], nums[2]);
    InvariantReport r = report(t);
    std::cout << (format == "json" ? report_json(r) : report_text(r));
    return 0;
}

int cmd_decide(const std::vector<std::string>& args) {
    std::vector<long long> left, right;
    std::string format = "text";
    bool after = false;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--") {
            if (after) throw std::invalid_argument("duplicate --");
            after = true;
        } else if (args[i] == "--format") {
            if (++i == args.size()) throw std::invalid_argument("--format needs a value");
            format = args[i];
        } else {
            (after ? right : left).push_back(parse_int(args[i]));
        }
    }
    if (left.size() != 3 || right.size() != 3)
        throw std::invalid_argument("decide needs a1 a2 a3 -- b1 b2 b3");
    if (format != "text" && format != "json")
        throw std::invalid_argument("bad format: " + format);
    ExponentTuple a(left[0], left[1], left[2]);
    ExponentTuple b(right[0], right[1], right[2]);
    IsoDecision d = decide(a, b);
    if (!verify_certificate(d, a, b)) throw internal_error("decision failed self-verification");
    std::cout << (format == "json" ? decision_json(d, a, b) : decision_text(d, a, b));
    return d.isomorphic ? 0 : 1;
}

long long rank_of(const std::array<long long, 3>& key) {
    std::optional<Int> r = class_group_rank(ExponentTuple(key[0], key[1], key[2]));
    if (!r) throw internal_error("table tuple without a tabulated rank");
    return r->convert_to<long long>();
}

void print_aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c + 1 < row.size())
                std::cout << std::left << std::setw(static_cast<int>(width[c])) << row[c] << "  ";
            else
                std::cout << row[c];
        }
        std::cout << "\n";
    }
}

ordered_json rank_cell(const ordered_json& value) {
    ordered_json j;
    j["value"] = value;
    j["source"] = "paper-table";
    return j;
}

int cmd_table(const std::vector<std::string>& args) {
    std::string sel, format = "text";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format") {
            if (++i == args.size()) throw std::invalid_argument("--format needs a value");
            format = args[i];
        } else if (sel.empty()) {
            sel = args[i];
        } else {
            throw std::invalid_argument("unexpected argument: " + args[i]);
        }
    }
    if (sel != "rat" && sel != "k3")
        throw std::invalid_argument("table selector must be rat or k3");
    if (format != "text" && format != "json")
        throw std::invalid_argument("bad format: " + format);

    if (sel == "rat") {
        // Columns: rank of the boundary curve's class group (= class_rank),
        // rank of the compactification's (one more), tabulated class_rank,
        // recomputed boundary genus.  The (2,2,a3) family is symbolic.
        ordered_json rows = ordered_json::array();
        std::vector<std::vector<std::string>> text;
        text.push_back({"tuple", "cl_curve_rank", "cl_compactified_rank", "class_rank",
                        "boundary_genus"});
        ordered_json fam;
        fam["tuple"] = nullptr;
        fam["family"] = "(2,2,a3)";
        fam["cl_curve_rank"] = "a3-1";
        fam["cl_compactified_rank"] = "a3";
        fam["class_rank"] = rank_cell("a3-1");
        fam["boundary_genus"] = 0;
        rows.push_back(fam);
        text.push_back({"(2,2,a3)", "a3-1", "a3", "a3-1", "0"});
        for (const auto& key : rational_table_tuples()) {
            ExponentTuple t(key[0], key[1], key[2]);
            long long rank = rank_of(key);
            Int genus = boundary_genus(t);
            ordered_json row;
            row["tuple"] = ordered_json{key[0], key[1], key[2]};
            row["family"] = nullptr;
            row["cl_curve_rank"] = rank;
            row["cl_compactified_rank"] = rank + 1;
            row["class_rank"] = rank_cell(rank);
            row["boundary_genus"] = genus.convert_to<long long>();
            rows.push_back(row);
            text.push_back({tuple_string(t), std::to_string(rank), std::to_string(rank + 1),
                            std::to_string(rank), genus.str()});
        }
        if (format == "json") {
            ordered_json j;
            j["table"] = "rat";
            j["rows"] = rows;
            std::cout << j.dump(2) << "\n";
        } else {
            print_aligned(text);
        }
        return 0;
    }

    // k3: recompute phi(L), boundary genus, and the amplitude (zero on every
    // row); tau and the compactification rank are rank + phi and rank + 1.
    ordered_json rows = ordered_json::array();
    std::vector<std::vector<std::string>> text;
    text.push_back({"tuple", "phi_L", "tau", "cl_compactified_rank", "class_rank",
                    "boundary_genus", "amplitude"});
    for (const auto& key : amplitude_zero_table_tuples()) {
        ExponentTuple t(key[0], key[1], key[2]);
        WeightData wd = weight_data(t);
        long long rank = rank_of(key);
        long long phi = totient(wd.degree).convert_to<long long>();
        Int genus = boundary_genus(t);
        ordered_json row;
        row["tuple"] = ordered_json{key[0], key[1], key[2]};
        row["phi_L"] = phi;
        row["tau"] = rank + phi;
        row["cl_compactified_rank"] = rank + 1;
        row["class_rank"] = rank_cell(rank);
        row["boundary_genus"] = genus.convert_to<long long>();
        row["amplitude"] = wd.alpha_surface.convert_to<long long>();
        rows.push_back(row);
        text.push_back({tuple_string(t), std::to_string(phi), std::to_string(rank + phi),
                        std::to_string(rank + 1), std::to_string(rank), genus.str(),
                        wd.alpha_surface.str()});
    }
    if (format == "json") {
        ordered_json j;
        j["table"] = "k3";
        j["rows"] = rows;
        std::cout << j.dump(2) << "\n";
    } else {
        print_aligned(text);
    }
    return 0;
}

int cmd_graph(const std::vector<std::string>& args) {
    std::vector<long long> nums;
    std::string format = "dot";
    long long central_weight = -1;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format") {
            if (++i == args.size()) throw std::invalid_argument("--format needs a value");
            format = args[i];
        } else if (args[i] == "--central-weight") {
            if (++i == args.size()) throw std::invalid_argument("--central-weight needs a value");
            central_weight = parse_int(args[i]);
        } else {
            nums.push_back(parse_int(args[i]));
        }
    }
    if (nums.size() != 3) throw std::invalid_argument("graph needs three exponents");
    if (format != "dot" && format != "json")
        throw std::invalid_argument("bad format: " + format);
    ExponentTuple t(nums[0], nums[1], nums[2]);
    BoundaryStar s = boundary_star(t);
    std::cout << (format == "json" ? star_to_json(s, central_weight)
                                   : star_to_dot(s, central_weight));
    return 0;
}

int cmd_scan(const std::vector<std::string>& args) {
    long long max_entry = -1;
    std::string cls;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--max") {
            if (++i == args.size()) throw std::invalid_argument("--max needs a value");
            max_entry = parse_int(args[i]);
        } else if (args[i] == "--class") {
            if (++i == args.size()) throw std::invalid_argument("--class needs a value");
            cls = args[i];
        } else {
            throw std::invalid_argument("unexpected argument: " + args[i]);
        }
    }
    if (max_entry < 2) throw std::invalid_argument("scan needs --max N with N >= 2");
    std::function<bool(const ExponentTuple&)> pred;
    if (cls.empty()) {
        pred = [](const ExponentTuple&) { return true; };
    } else {
        PartitionMajor want;
        if (cls == "S0")
            want = PartitionMajor::S0;
        else if (cls == "S++")
            want = PartitionMajor::SPlusPlus;
        else if (cls == "S+0")
            want = PartitionMajor::SPlusZero;
        else if (cls == "S+-")
            want = PartitionMajor::SPlusMinus;
        else
            throw std::invalid_argument("bad class: " + cls);
        pred = [want](const ExponentTuple& t) { return partition_class(t).major == want; };
    }
    std::vector<ExponentTuple> tuples = enumerate_class(max_entry, pred);
    for (const ExponentTuple& t : tuples)
        std::cout << t << " " << class_tag(partition_class(t)) << "\n";
    std::cout << "total: " << tuples.size() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        if (args.empty()) return usage("missing command");
        std::string cmd = args[0];
        std::vector<std::string> rest(args.begin() + 1, args.end());
        if (cmd == "invariants") return cmd_invariants(rest);
        if (cmd == "decide") return cmd_decide(rest);
        if (cmd == "table") return cmd_table(rest);
        if (cmd == "graph") return cmd_graph(rest);
        if (cmd == "scan") return cmd_scan(rest);
        return usage("unknown command: " + cmd);
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        return usage(e.what());
    } catch (const std::out_of_range& e) {
        return usage(e.what());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
