#include "pbsurf/surface.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

namespace pbsurf {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

ExponentTuple::ExponentTuple(long long a1, long long a2, long long a3) : a{a1, a2, a3} {
    for (long long v : a)
        if (v < 2) throw std::invalid_argument("ExponentTuple: entries must be >= 2");
}

std::array<long long, 3> ExponentTuple::sorted_key() const {
    std::array<long long, 3> k = a;
    std::sort(k.begin(), k.end());
    return k;
}

std::ostream& operator<<(std::ostream& os, const ExponentTuple& t) {
    return os << '(' << t.a[0] << ',' << t.a[1] << ',' << t.a[2] << ')';
}

WeightData weight_data(const ExponentTuple& t) {
    Int L = lcm(lcm(Int(t.a[0]), Int(t.a[1])), Int(t.a[2]));
    WeightData wd;
    wd.degree = L;
    for (int i = 0; i < 3; ++i) wd.weights[i] = L / t.a[i];
    if (gcd(gcd(wd.weights[0], wd.weights[1]), wd.weights[2]) != 1)
        throw internal_error("weight_data: weights not coprime");
    wd.alpha_surface = L - wd.weights[0] - wd.weights[1] - wd.weights[2] - 1;
    wd.alpha_curve = wd.alpha_surface + 1;
    return wd;
}

Int boundary_genus(const ExponentTuple& t) {
    WeightData wd = weight_data(t);
    const Int &w1 = wd.weights[0], &w2 = wd.weights[1], &w3 = wd.weights[2];
    Int count = 0;
    // r1 = L - e1 w1 and r2 = r1 - e2 w2 with e1, e2 >= 1; e3 = r2 / w3.
    for (Int r1 = wd.degree - w1; r1 >= w2 + w3; r1 -= w1)
        for (Int r2 = r1 - w2; r2 >= w3; r2 -= w2)
            if (r2 % w3 == 0) ++count;
    return count;
}

Int surface_pg(const ExponentTuple& t) {
    WeightData wd = weight_data(t);
    if (wd.alpha_surface < 0) return 0;
    const Int &w1 = wd.weights[0], &w2 = wd.weights[1], &w3 = wd.weights[2];
    Int count = 0;
    // e4 absorbs whatever remains, so count e3 in [0, r2/w3] per (e1, e2).
    for (Int r1 = wd.alpha_surface; r1 >= 0; r1 -= w1)
        for (Int r2 = r1; r2 >= 0; r2 -= w2)
            count += r2 / w3 + 1;
    return count;
}

bool is_rational(const ExponentTuple& t) { return weight_data(t).alpha_surface < 0; }

bool is_danielewski(const ExponentTuple& t) {
    return std::count(t.a.begin(), t.a.end(), 2) >= 2;
}

std::optional<S0Subclass> s0_subclass(const ExponentTuple& t) {
    for (int k = 0; k < 3; ++k) {
        long long p = t.a[(k + 1) % 3], q = t.a[(k + 2) % 3], r = t.a[k];
        if (std::gcd(p, r) == 1 && std::gcd(q, r) == 1) return S0Subclass::T1;
    }
    if (t.a[0] % 2 == 0 && t.a[1] % 2 == 0 && t.a[2] % 2 == 0) {
        long long p = t.a[0] / 2, q = t.a[1] / 2, r = t.a[2] / 2;
        if (std::gcd(p, q) == 1 && std::gcd(p, r) == 1 && std::gcd(q, r) == 1)
            return S0Subclass::T2;
    }
    return std::nullopt;
}

PartitionClass partition_class(const ExponentTuple& t) {
    WeightData wd = weight_data(t);
    PartitionClass pc;
    pc.danielewski = is_danielewski(t);
    pc.rational = wd.alpha_surface < 0;
    if (boundary_genus(t) == 0) {
        pc.major = PartitionMajor::S0;
        pc.s0 = s0_subclass(t);
        if (!pc.s0) throw internal_error("partition_class: genus-zero tuple outside T1 and T2");
    } else if (wd.alpha_surface > 0) {
        pc.major = PartitionMajor::SPlusPlus;
    } else if (wd.alpha_surface == 0) {
        pc.major = PartitionMajor::SPlusZero;
    } else {
        pc.major = PartitionMajor::SPlusMinus;
    }
    return pc;
}

const std::vector<std::array<long long, 3>>& rational_table_tuples() {
    static const std::vector<std::array<long long, 3>> rows = {
        {2, 3, 3}, {2, 3, 4}, {2, 3, 5}, {2, 3, 6}, {2, 4, 4}, {3, 3, 3}};
    return rows;
}

const std::vector<std::array<long long, 3>>& amplitude_zero_table_tuples() {
    static const std::vector<std::array<long long, 3>> rows = {
        {2, 3, 7}, {2, 3, 8}, {2, 3, 9}, {2, 3, 12}, {2, 4, 5}, {2, 4, 6},
        {2, 4, 8}, {2, 5, 5}, {2, 6, 6}, {3, 3, 6},  {4, 4, 4}};
    return rows;
}

const std::vector<std::array<long long, 3>>& amplitude_zero_complete() {
    static const std::vector<std::array<long long, 3>> rows = {
        {2, 3, 7}, {2, 3, 8}, {2, 3, 9}, {2, 3, 12}, {2, 4, 5}, {2, 4, 6},
        {2, 4, 8}, {2, 5, 5}, {2, 6, 6}, {3, 3, 4},  {3, 3, 6}, {4, 4, 4}};
    return rows;
}

std::optional<Int> class_group_rank(const ExponentTuple& t) {
    std::array<long long, 3> k = t.sorted_key();
    if (k[0] == 2 && k[1] == 2) return Int(k[2] - 1);
    static const std::map<std::array<long long, 3>, long long> ranks = {
        {{2, 3, 3}, 4},  {{2, 3, 4}, 6},  {{2, 3, 5}, 8},  {{2, 3, 6}, 8},
        {{2, 4, 4}, 7},  {{3, 3, 3}, 6},  {{2, 3, 7}, 0},  {{2, 3, 8}, 6},
        {{2, 3, 9}, 10}, {{2, 3, 12}, 16}, {{2, 4, 5}, 4}, {{2, 4, 6}, 11},
        {{2, 4, 8}, 15}, {{2, 5, 5}, 12}, {{2, 6, 6}, 19}, {{3, 3, 6}, 15},
        {{4, 4, 4}, 19}};
    auto it = ranks.find(k);
    if (it == ranks.end()) return std::nullopt;
    return Int(it->second);
}

std::vector<ExponentTuple> enumerate_class_serial(
    long long max_entry, const std::function<bool(const ExponentTuple&)>& pred) {
    std::vector<ExponentTuple> out;
    for (long long a1 = 2; a1 <= max_entry; ++a1)
        for (long long a2 = a1; a2 <= max_entry; ++a2)
            for (long long a3 = a2; a3 <= max_entry; ++a3) {
                ExponentTuple t(a1, a2, a3);
                if (pred(t)) out.push_back(t);
            }
    return out;
}

std::vector<ExponentTuple> enumerate_class(
    long long max_entry, const std::function<bool(const ExponentTuple&)>& pred) {
    if (max_entry < 2) return {};
    std::vector<std::vector<ExponentTuple>> strata(static_cast<std::size_t>(max_entry + 1));
#pragma omp parallel for schedule(dynamic)
    for (long long a1 = 2; a1 <= max_entry; ++a1) {
        auto& mine = strata[static_cast<std::size_t>(a1)];
        for (long long a2 = a1; a2 <= max_entry; ++a2)
            for (long long a3 = a2; a3 <= max_entry; ++a3) {
                ExponentTuple t(a1, a2, a3);
                if (pred(t)) mine.push_back(t);
            }
    }
    std::vector<ExponentTuple> out;
    for (auto& s : strata) out.insert(out.end(), s.begin(), s.end());
    return out;
}

}  // namespace pbsurf
