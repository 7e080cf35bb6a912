#pragma once

// Singular points of the compactified surface.  They sit on the three
// boundary coordinate edges of P(w1,w2,w3,1): the edge through coordinates
// {i,j} carries gcd(a_i,a_j) cyclic quotient points of type
// 1/n(w_k mod n, 1) with n = gcd(w_i,w_j), whenever n > 1.  Two closed-form
// predictions for special tuple shapes are provided for cross-checking.

#include "pbsurf/surface.hpp"

#include <map>
#include <utility>

namespace pbsurf {

// Cyclic quotient singularity 1/n(m,1); n >= 2, 1 <= m < n, gcd(n,m) = 1.
// Types compare as exact (n,m) pairs; no identification up to duality.
struct QuotientType {
    Int n;
    Int m;
    QuotientType(Int n_, Int m_);  // reduces m mod n, then validates
    bool operator==(const QuotientType&) const = default;
    bool operator<(const QuotientType& o) const {
        return n < o.n || (n == o.n && m < o.m);
    }
};

// `count` points of type `type` on the boundary edge through the coordinate
// pair `edge` (1-based, increasing).
struct SingularRecord {
    std::array<int, 2> edge;
    long long count;
    QuotientType type;
    bool operator==(const SingularRecord&) const = default;
};

// Records in edge order {1,2}, {1,3}, {2,3}; edges with gcd(w_i,w_j) = 1
// contribute nothing and are omitted.
std::vector<SingularRecord> singular_locus(const ExponentTuple& t);

// Closed form for tuples with gcd(a1*a2, a3) = 1: write a1 = u*g, a2 = v*g
// with g = gcd(a1,a2); then g points of type 1/a3(u*v*g, 1), plus one point
// of type 1/v(w2, 1) when v > 1 and one of type 1/u(w1, 1) when u > 1.
std::vector<SingularRecord> predict_T1(const ExponentTuple& t);

// Closed form for tuples m*(p,q,r) with p,q,r pairwise coprime: for each
// part bigger than 1, m points of type 1/part(product of the other two, 1).
// The decomposition exists iff the three pairwise gcds agree.
std::vector<SingularRecord> predict_T2(const ExponentTuple& t);

// Total point count per type, forgetting edges; the permutation-invariant
// view used for comparisons.
std::map<std::pair<Int, Int>, Int> type_multiset(const std::vector<SingularRecord>& records);

}  // namespace pbsurf
