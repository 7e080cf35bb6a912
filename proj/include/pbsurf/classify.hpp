#pragma once

// Per-tuple invariant bundles and pairwise isomorphism decisions.  Two
// surfaces in the family are isomorphic exactly when their exponent tuples
// agree up to order; inequality is reported with a certificate naming the
// first invariant separating the pair, re-checkable from the tuples alone.

#include "pbsurf/graph.hpp"
#include "pbsurf/singular.hpp"
#include "pbsurf/surface.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pbsurf {

struct InvariantReport {
    ExponentTuple tuple;
    std::array<long long, 3> sorted_key;
    WeightData weights;
    PartitionClass partition;
    Int genus;  // boundary curve genus, also the star's central genus
    Int geometric_genus;
    std::vector<SingularRecord> singular;
    BoundaryStar star;
    std::optional<Int> class_rank;
};

InvariantReport report(const ExponentTuple& t);

// Invariants compared by decide(), in decision order.  The weight multiset
// {w1,w2,w3,1} together with the degree L determines the tuple, so the
// trailing fallback is an unreachable guard.
enum class CertificateKind {
    PartitionClassDiffers,
    SingularLocusDiffers,
    StarDiffers,
    GenusDiffers,
    ClassRankDiffers,
    WeightMultisetDiffers,
    MainTheoremFallback,
};

const char* certificate_kind_name(CertificateKind k);

// Both compared values embedded as compact JSON, so the inequality can be
// recomputed and confirmed without rerunning the decision.
struct Certificate {
    CertificateKind kind;
    std::string left;
    std::string right;
};

// witness, when set, is the 0-based permutation with b[i] == a[witness[i]].
struct IsoDecision {
    bool isomorphic = false;
    std::optional<std::array<int, 3>> witness;
    std::optional<Certificate> certificate;
};

// Isomorphic, with the lexicographically smallest witness permutation, iff
// the sorted keys agree; otherwise NotIsomorphic with the first differing
// certificate in the order: partition class, singular type multiset,
// boundary star, boundary genus, class rank (when both tabulated), weight
// multiset with degree, fallback.
IsoDecision decide(const ExponentTuple& a, const ExponentTuple& b);

// Recomputes the decision's evidence from the tuples: a valid witness
// permutation for Isomorphic, or embedded values that match recomputation
// and genuinely differ for NotIsomorphic.
bool verify_certificate(const IsoDecision& d, const ExponentTuple& a, const ExponentTuple& b);

std::string report_json(const InvariantReport& r);
std::string report_text(const InvariantReport& r);
std::string decision_json(const IsoDecision& d, const ExponentTuple& a, const ExponentTuple& b);
std::string decision_text(const IsoDecision& d, const ExponentTuple& a, const ExponentTuple& b);

struct ScanSummary {
    long long pairs = 0;
    long long isomorphic = 0;
    std::map<CertificateKind, long long> histogram;
    std::vector<std::array<ExponentTuple, 2>> fallback_pairs;
};

// Decides every unordered pair of sorted tuples with entries <= max_entry.
// scan_pairs fans the row loop across OpenMP threads and merges row results
// in index order, so both variants return identical summaries.
ScanSummary scan_pairs(long long max_entry);
ScanSummary scan_pairs_serial(long long max_entry);

}  // namespace pbsurf
