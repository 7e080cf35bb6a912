#pragma once

// Per-tuple surface invariants: weights of the degree-L compactification in
// P(w1,w2,w3,1), amplitude, boundary-curve genus and surface geometric genus
// by exact lattice-point counts, the partition into classification classes,
// and tabulated divisor class group ranks.

#include "pbsurf/arith.hpp"

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>

namespace pbsurf {

// Exponent triple (a1, a2, a3) of x1^a1 + x2^a2 + x3^a3 + 1; entries >= 2,
// stored in the order given.
struct ExponentTuple {
    std::array<long long, 3> a;
    ExponentTuple(long long a1, long long a2, long long a3);
    std::array<long long, 3> sorted_key() const;
    bool operator==(const ExponentTuple&) const = default;
};

std::ostream& operator<<(std::ostream& os, const ExponentTuple& t);

// L = lcm(a1,a2,a3), w_i = L/a_i (so gcd(w1,w2,w3) = 1), and the amplitudes
// of the surface and of its boundary curve.
struct WeightData {
    Int degree;                  // L
    std::array<Int, 3> weights;  // w_i
    Int alpha_surface;           // L - w1 - w2 - w3 - 1
    Int alpha_curve;             // alpha_surface + 1
};

WeightData weight_data(const ExponentTuple& t);

// Genus of the boundary curve:
// #{(e1,e2,e3) : e_i >= 1, e1 w1 + e2 w2 + e3 w3 = L}.
Int boundary_genus(const ExponentTuple& t);

// Geometric genus of the compactified surface:
// #{(e1,e2,e3,e4) : e_i >= 0, e1 w1 + e2 w2 + e3 w3 + e4 = alpha_surface};
// zero whenever the amplitude is negative.
Int surface_pg(const ExponentTuple& t);

bool is_rational(const ExponentTuple& t);     // alpha_surface < 0
bool is_danielewski(const ExponentTuple& t);  // at least two entries equal 2

// The two arithmetic shapes a genus-zero-boundary tuple can take.
// T1: some reordering (p,q,r) has gcd(p*q, r) = 1.
// T2: (a1,a2,a3) = 2*(p,q,r) with p,q,r pairwise coprime, and not T1.
enum class S0Subclass { T1, T2 };

std::optional<S0Subclass> s0_subclass(const ExponentTuple& t);

enum class PartitionMajor { S0, SPlusPlus, SPlusZero, SPlusMinus };

struct PartitionClass {
    PartitionMajor major;
    std::optional<S0Subclass> s0;  // set exactly when major == S0
    bool danielewski;
    bool rational;
    bool operator==(const PartitionClass&) const = default;
};

// S0 when the boundary genus vanishes; otherwise by sign of the amplitude.
PartitionClass partition_class(const ExponentTuple& t);

// Divisor class group rank of the affine surface, quoted from the published
// tables rather than computed: the (2,2,c) family has rank c-1, the other
// rational tuples and the eleven amplitude-zero tuples are tabulated, and
// everything else is nullopt (unknown, not zero).  Permutation-invariant.
std::optional<Int> class_group_rank(const ExponentTuple& t);

// Rows of the two published rank tables (sorted keys, ascending): the six
// rational tuples beyond the (2,2,c) family, and the eleven amplitude-zero
// rows that carry a rank.
const std::vector<std::array<long long, 3>>& rational_table_tuples();
const std::vector<std::array<long long, 3>>& amplitude_zero_table_tuples();

// The complete solution set of 1/a1 + 1/a2 + 1/a3 + 1/L = 1 (equivalently
// alpha_surface = 0), sorted: the eleven table rows plus (3,3,4), which
// satisfies the condition but has no published rank row.
const std::vector<std::array<long long, 3>>& amplitude_zero_complete();

// All sorted tuples 2 <= a1 <= a2 <= a3 <= max_entry passing pred, in
// lexicographic order.  enumerate_class splits the a1 strata across OpenMP
// threads and concatenates stratum results in order, so its output is
// identical to the serial reference; pred must be pure.
std::vector<ExponentTuple> enumerate_class(long long max_entry,
                                           const std::function<bool(const ExponentTuple&)>& pred);
std::vector<ExponentTuple> enumerate_class_serial(long long max_entry,
                                                  const std::function<bool(const ExponentTuple&)>& pred);

}  // namespace pbsurf
