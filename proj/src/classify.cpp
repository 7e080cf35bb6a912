#include "pbsurf/classify.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace pbsurf {

namespace {

using nlohmann::ordered_json;

ordered_json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

const char* major_name(PartitionMajor m) {
    switch (m) {
        case PartitionMajor::S0:
            return "S0";
        case PartitionMajor::SPlusPlus:
            return "S++";
        case PartitionMajor::SPlusZero:
            return "S+0";
        case PartitionMajor::SPlusMinus:
            return "S+-";
    }
    throw internal_error("unknown partition major");
}

ordered_json tuple_json(const ExponentTuple& t) {
    return ordered_json{t.a[0], t.a[1], t.a[2]};
}

ordered_json partition_json(const PartitionClass& p) {
    ordered_json j;
    j["major"] = major_name(p.major);
    if (p.s0)
        j["s0_subclass"] = *p.s0 == S0Subclass::T1 ? "T1" : "T2";
    else
        j["s0_subclass"] = nullptr;
    j["danielewski"] = p.danielewski;
    j["rational"] = p.rational;
    return j;
}

// Permutation-invariant canonical form: per-type totals, sorted by (n, m).
ordered_json locus_multiset_json(const std::vector<SingularRecord>& records) {
    ordered_json arr = ordered_json::array();
    for (const auto& [type, count] : type_multiset(records)) {
        ordered_json e;
        e["n"] = json_int(type.first);
        e["m"] = json_int(type.second);
        e["count"] = json_int(count);
        arr.push_back(e);
    }
    return arr;
}

ordered_json star_json(const BoundaryStar& s) {
    ordered_json j;
    j["central_genus"] = json_int(s.central_genus);
    j["branches"] = s.branches;
    return j;
}

ordered_json rank_json(const std::optional<Int>& r) {
    if (!r) return nullptr;
    ordered_json j;
    j["value"] = json_int(*r);
    j["source"] = "paper-table";
    return j;
}

std::pair<Int, std::array<Int, 4>> weight_multiset(const WeightData& wd) {
    std::array<Int, 4> ws{wd.weights[0], wd.weights[1], wd.weights[2], Int(1)};
    std::sort(ws.begin(), ws.end());
    return {wd.degree, ws};
}

ordered_json weight_multiset_json(const WeightData& wd) {
    auto [degree, ws] = weight_multiset(wd);
    ordered_json j;
    j["degree"] = json_int(degree);
    j["weights"] = ordered_json::array();
    for (const Int& w : ws) j["weights"].push_back(json_int(w));
    return j;
}

ordered_json report_object(const InvariantReport& r) {
    ordered_json j;
    j["tuple"] = tuple_json(r.tuple);
    j["sorted_tuple"] = ordered_json{r.sorted_key[0], r.sorted_key[1], r.sorted_key[2]};
    j["degree"] = json_int(r.weights.degree);
    j["weights"] = ordered_json{json_int(r.weights.weights[0]), json_int(r.weights.weights[1]),
                                json_int(r.weights.weights[2])};
    j["amplitude"] = json_int(r.weights.alpha_surface);
    j["partition"] = partition_json(r.partition);
    j["boundary_genus"] = json_int(r.genus);
    j["geometric_genus"] = json_int(r.geometric_genus);
    ordered_json locus = ordered_json::array();
    for (const SingularRecord& rec : r.singular) {
        ordered_json e;
        e["edge"] = ordered_json{rec.edge[0], rec.edge[1]};
        e["count"] = rec.count;
        e["n"] = json_int(rec.type.n);
        e["m"] = json_int(rec.type.m);
        locus.push_back(e);
    }
    j["singular_locus"] = locus;
    j["star_branches"] = r.star.branches;
    j["class_rank"] = rank_json(r.class_rank);
    return j;
}

ordered_json certificate_value(CertificateKind k, const InvariantReport& r) {
    switch (k) {
        case CertificateKind::PartitionClassDiffers:
            return partition_json(r.partition);
        case CertificateKind::SingularLocusDiffers:
            return locus_multiset_json(r.singular);
        case CertificateKind::StarDiffers:
            return star_json(r.star);
        case CertificateKind::GenusDiffers: {
            ordered_json j;
            j["boundary_genus"] = json_int(r.genus);
            return j;
        }
        case CertificateKind::ClassRankDiffers: {
            ordered_json j;
            j["class_rank"] = r.class_rank ? json_int(*r.class_rank) : ordered_json(nullptr);
            return j;
        }
        case CertificateKind::WeightMultisetDiffers:
            return weight_multiset_json(r.weights);
        case CertificateKind::MainTheoremFallback:
            return report_object(r);
    }
    throw internal_error("unknown certificate kind");
}

IsoDecision decide_reports(const InvariantReport& ra, const InvariantReport& rb) {
    CertificateKind kind = CertificateKind::MainTheoremFallback;
    if (!(ra.partition == rb.partition))
        kind = CertificateKind::PartitionClassDiffers;
    else if (type_multiset(ra.singular) != type_multiset(rb.singular))
        kind = CertificateKind::SingularLocusDiffers;
    else if (!(ra.star == rb.star))
        kind = CertificateKind::StarDiffers;
    else if (ra.genus != rb.genus)
        kind = CertificateKind::GenusDiffers;
    else if (ra.class_rank && rb.class_rank && *ra.class_rank != *rb.class_rank)
        kind = CertificateKind::ClassRankDiffers;
    else if (weight_multiset(ra.weights) != weight_multiset(rb.weights))
        kind = CertificateKind::WeightMultisetDiffers;
    IsoDecision d;
    d.isomorphic = false;
    d.certificate = Certificate{kind, certificate_value(kind, ra).dump(),
                                certificate_value(kind, rb).dump()};
    return d;
}

std::string type_string(const QuotientType& q) {
    std::ostringstream os;
    os << "1/" << q.n << "(" << q.m << ",1)";
    return os.str();
}

}  // namespace

InvariantReport report(const ExponentTuple& t) {
    InvariantReport r{t,
                      t.sorted_key(),
                      weight_data(t),
                      partition_class(t),
                      boundary_genus(t),
                      surface_pg(t),
                      singular_locus(t),
                      boundary_star(t),
                      class_group_rank(t)};
    if (r.star.central_genus != r.genus)
        throw internal_error("star central genus disagrees with boundary genus");
    return r;
}

const char* certificate_kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::PartitionClassDiffers:
            return "PartitionClassDiffers";
        case CertificateKind::SingularLocusDiffers:
            return "SingularLocusDiffers";
        case CertificateKind::StarDiffers:
            return "StarDiffers";
        case CertificateKind::GenusDiffers:
            return "GenusDiffers";
        case CertificateKind::ClassRankDiffers:
            return "ClassRankDiffers";
        case CertificateKind::WeightMultisetDiffers:
            return "WeightMultisetDiffers";
        case CertificateKind::MainTheoremFallback:
            return "MainTheoremFallback";
    }
    throw internal_error("unknown certificate kind");
}

IsoDecision decide(const ExponentTuple& a, const ExponentTuple& b) {
    if (a.sorted_key() == b.sorted_key()) {
        static constexpr std::array<std::array<int, 3>, 6> perms{
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        for (const auto& p : perms) {
            if (b.a[0] == a.a[p[0]] && b.a[1] == a.a[p[1]] && b.a[2] == a.a[p[2]]) {
                IsoDecision d;
                d.isomorphic = true;
                d.witness = p;
                return d;
            }
        }
        throw internal_error("equal sorted keys admit no witness permutation");
    }
    return decide_reports(report(a), report(b));
}

bool verify_certificate(const IsoDecision& d, const ExponentTuple& a, const ExponentTuple& b) {
    if (d.isomorphic) {
        if (!d.witness || d.certificate) return false;
        const std::array<int, 3>& p = *d.witness;
        std::array<bool, 3> seen{};
        for (int i = 0; i < 3; ++i) {
            if (p[i] < 0 || p[i] > 2 || seen[p[i]]) return false;
            seen[p[i]] = true;
        }
        for (int i = 0; i < 3; ++i)
            if (b.a[i] != a.a[p[i]]) return false;
        return a.sorted_key() == b.sorted_key();
    }
    if (!d.certificate || d.witness) return false;
    InvariantReport ra = report(a);
    InvariantReport rb = report(b);
    if (d.certificate->kind == CertificateKind::ClassRankDiffers &&
        (!ra.class_rank || !rb.class_rank))
        return false;
    std::string left = certificate_value(d.certificate->kind, ra).dump();
    std::string right = certificate_value(d.certificate->kind, rb).dump();
    return left == d.certificate->left && right == d.certificate->right && left != right;
}

std::string report_json(const InvariantReport& r) { return report_object(r).dump(2) + "\n"; }

std::string report_text(const InvariantReport& r) {
    std::ostringstream os;
    os << "tuple: " << r.tuple << "\n";
    os << "degree: " << r.weights.degree << "\n";
    os << "weights: (" << r.weights.weights[0] << "," << r.weights.weights[1] << ","
       << r.weights.weights[2] << ")\n";
    os << "amplitude: " << r.weights.alpha_surface << "\n";
    os << "partition: " << major_name(r.partition.major);
    if (r.partition.s0) os << " (" << (*r.partition.s0 == S0Subclass::T1 ? "T1" : "T2") << ")";
    os << "\n";
    os << "danielewski: " << (r.partition.danielewski ? "yes" : "no") << "\n";
    os << "rational: " << (r.partition.rational ? "yes" : "no") << "\n";
    os << "boundary genus: " << r.genus << "\n";
    os << "geometric genus: " << r.geometric_genus << "\n";
    os << "singular locus:";
    if (r.singular.empty()) {
        os << " none\n";
    } else {
        os << "\n";
        for (const SingularRecord& rec : r.singular)
            os << "  edge {" << rec.edge[0] << "," << rec.edge[1] << "}: " << rec.count << " x "
               << type_string(rec.type) << "\n";
    }
    os << "star: central genus " << r.star.central_genus << ", branches:";
    if (r.star.branches.empty()) {
        os << " none";
    } else {
        for (const auto& br : r.star.branches) {
            os << " [";
            for (std::size_t i = 0; i < br.size(); ++i) os << (i ? "," : "") << br[i];
            os << "]";
        }
    }
    os << "\n";
    os << "class rank: ";
    if (r.class_rank)
        os << *r.class_rank << " [paper-table]";
    else
        os << "unknown";
    os << "\n";
    return os.str();
}

std::string decision_json(const IsoDecision& d, const ExponentTuple& a, const ExponentTuple& b) {
    ordered_json j;
    j["left_tuple"] = tuple_json(a);
    j["right_tuple"] = tuple_json(b);
    j["verdict"] = d.isomorphic ? "Isomorphic" : "NotIsomorphic";
    if (d.witness)
        j["witness"] = ordered_json{(*d.witness)[0] + 1, (*d.witness)[1] + 1, (*d.witness)[2] + 1};
    else
        j["witness"] = nullptr;
    if (d.certificate) {
        ordered_json c;
        c["kind"] = certificate_kind_name(d.certificate->kind);
        c["left"] = ordered_json::parse(d.certificate->left);
        c["right"] = ordered_json::parse(d.certificate->right);
        j["certificate"] = c;
    } else {
        j["certificate"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string decision_text(const IsoDecision& d, const ExponentTuple& a, const ExponentTuple& b) {
    std::ostringstream os;
    os << "left: " << a << "\n";
    os << "right: " << b << "\n";
    os << "verdict: " << (d.isomorphic ? "Isomorphic" : "NotIsomorphic") << "\n";
    if (d.witness)
        os << "witness: p = (" << (*d.witness)[0] + 1 << "," << (*d.witness)[1] + 1 << ","
           << (*d.witness)[2] + 1 << ") with right[i] = left[p[i]]\n";
    if (d.certificate) {
        os << "certificate: " << certificate_kind_name(d.certificate->kind) << "\n";
        os << "  left value:  " << d.certificate->left << "\n";
        os << "  right value: " << d.certificate->right << "\n";
    }
    return os.str();
}

namespace {

std::vector<InvariantReport> all_reports(long long max_entry) {
    std::vector<ExponentTuple> tuples =
        enumerate_class_serial(max_entry, [](const ExponentTuple&) { return true; });
    std::vector<InvariantReport> reports;
    reports.reserve(tuples.size());
    for (const ExponentTuple& t : tuples) reports.push_back(report(t));
    return reports;
}

void scan_row(const std::vector<InvariantReport>& reports, std::size_t i, ScanSummary& s) {
    for (std::size_t j = i + 1; j < reports.size(); ++j) {
        const InvariantReport& ra = reports[i];
        const InvariantReport& rb = reports[j];
        ++s.pairs;
        if (ra.sorted_key == rb.sorted_key) {
            ++s.isomorphic;
            continue;
        }
        IsoDecision d = decide_reports(ra, rb);
        ++s.histogram[d.certificate->kind];
        if (d.certificate->kind == CertificateKind::MainTheoremFallback)
            s.fallback_pairs.push_back({ra.tuple, rb.tuple});
    }
}

ScanSummary merge_rows(std::vector<ScanSummary>&& rows) {
    ScanSummary total;
    for (ScanSummary& s : rows) {
        total.pairs += s.pairs;
        total.isomorphic += s.isomorphic;
        for (const auto& [k, c] : s.histogram) total.histogram[k] += c;
        total.fallback_pairs.insert(total.fallback_pairs.end(), s.fallback_pairs.begin(),
                                    s.fallback_pairs.end());
    }
    return total;
}

}  // namespace

ScanSummary scan_pairs(long long max_entry) {
    std::vector<InvariantReport> reports = all_reports(max_entry);
    std::vector<ScanSummary> rows(reports.size());
    long long n = static_cast<long long>(reports.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < n; ++i)
        scan_row(reports, static_cast<std::size_t>(i), rows[static_cast<std::size_t>(i)]);
    return merge_rows(std::move(rows));
}

ScanSummary scan_pairs_serial(long long max_entry) {
    std::vector<InvariantReport> reports = all_reports(max_entry);
    std::vector<ScanSummary> rows(reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) scan_row(reports, i, rows[i]);
    return merge_rows(std::move(rows));
}

}  // namespace pbsurf
