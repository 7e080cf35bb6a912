#include "pbsurf/classify.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "checks.hpp"

using namespace pbsurf;

static bool contains(const std::string& s, const std::string& needle) {
    return s.find(needle) != std::string::npos;
}

static void test_report() {
    InvariantReport r = report({2, 3, 7});
    CHECK_EQ(r.weights.degree, Int(42));
    CHECK(r.partition.major == PartitionMajor::S0);
    CHECK(r.partition.s0 == S0Subclass::T1);
    CHECK_EQ(r.genus, Int(0));
    CHECK_EQ(r.geometric_genus, Int(1));
    CHECK_EQ(r.singular.size(), std::size_t(3));
    CHECK_EQ(r.star.branches.size(), std::size_t(3));
    CHECK(r.class_rank == Int(0));

    r = report({2, 2, 5});
    CHECK(r.partition.major == PartitionMajor::S0);
    CHECK(r.partition.s0 == S0Subclass::T1);
    CHECK(r.partition.danielewski);
    CHECK(r.class_rank == Int(4));

    r = report({3, 3, 3});
    CHECK(r.partition.major == PartitionMajor::SPlusMinus);
    CHECK_EQ(r.genus, Int(1));
    CHECK(r.singular.empty());
    CHECK(r.class_rank == Int(6));

    r = report({3, 3, 4});
    CHECK(r.partition.major == PartitionMajor::S0);
    CHECK(!r.class_rank.has_value());

    // Star branch count equals the total singular point count.
    for (long long c = 2; c <= 9; ++c) {
        r = report({2, 3, c});
        Int points = 0;
        for (const auto& [type, count] : type_multiset(r.singular)) {
            (void)type;
            points += count;
        }
        CHECK_EQ(Int(r.star.branches.size()), points);
        CHECK_EQ(r.star.central_genus, r.genus);
    }
}

static void test_decide_isomorphic() {
    IsoDecision d = decide({2, 3, 7}, {7, 2, 3});
    CHECK(d.isomorphic);
    CHECK(!d.certificate.has_value());
    CHECK((d.witness == std::array<int, 3>{2, 0, 1}));
    CHECK(verify_certificate(d, {2, 3, 7}, {7, 2, 3}));

    d = decide({2, 3, 7}, {2, 3, 7});
    CHECK((d.witness == std::array<int, 3>{0, 1, 2}));

    // Lexicographically smallest witness among several valid ones.
    d = decide({2, 2, 5}, {2, 2, 5});
    CHECK((d.witness == std::array<int, 3>{0, 1, 2}));
    d = decide({5, 2, 2}, {2, 2, 5});
    CHECK((d.witness == std::array<int, 3>{1, 2, 0}));
    CHECK(verify_certificate(d, {5, 2, 2}, {2, 2, 5}));
}

static void test_decide_certificates() {
    IsoDecision d = decide({2, 2, 5}, {2, 2, 7});
    CHECK(!d.isomorphic);
    CHECK(d.certificate->kind == CertificateKind::SingularLocusDiffers);
    CHECK_EQ(d.certificate->left, std::string("[{\"n\":5,\"m\":2,\"count\":2}]"));
    CHECK_EQ(d.certificate->right, std::string("[{\"n\":7,\"m\":2,\"count\":2}]"));
    CHECK(verify_certificate(d, {2, 2, 5}, {2, 2, 7}));

    d = decide({2, 4, 8}, {3, 3, 6});
    CHECK(d.certificate->kind == CertificateKind::SingularLocusDiffers);
    CHECK_EQ(d.certificate->left, std::string("[{\"n\":2,\"m\":1,\"count\":2}]"));
    CHECK_EQ(d.certificate->right, std::string("[{\"n\":2,\"m\":1,\"count\":3}]"));

    // Both genus-zero tuples; the singular type multisets already differ, so
    // the decision never reaches the tabulated ranks (6 vs 4).
    d = decide({2, 3, 8}, {2, 4, 5});
    CHECK(d.certificate->kind == CertificateKind::SingularLocusDiffers);
    CHECK(verify_certificate(d, {2, 3, 8}, {2, 4, 5}));

    d = decide({2, 3, 7}, {2, 3, 12});
    CHECK(d.certificate->kind == CertificateKind::PartitionClassDiffers);
    CHECK(contains(d.certificate->left, "\"major\":\"S0\""));
    CHECK(contains(d.certificate->right, "\"major\":\"S+0\""));

    d = decide({2, 2, 2}, {2, 2, 3});
    CHECK(d.certificate->kind == CertificateKind::PartitionClassDiffers);
    CHECK(contains(d.certificate->left, "\"s0_subclass\":\"T2\""));
    CHECK(contains(d.certificate->right, "\"s0_subclass\":\"T1\""));

    // Smooth, equal partition and empty singular locus: central genus splits.
    d = decide({2, 6, 6}, {4, 4, 4});
    CHECK(d.certificate->kind == CertificateKind::StarDiffers);
    CHECK_EQ(d.certificate->left, std::string("{\"central_genus\":2,\"branches\":[]}"));
    CHECK_EQ(d.certificate->right, std::string("{\"central_genus\":3,\"branches\":[]}"));
    CHECK(verify_certificate(d, {2, 6, 6}, {4, 4, 4}));

    // Both smooth of genus 1 with identical stars: only the tabulated ranks
    // separate these rational tuples.
    d = decide({2, 3, 6}, {2, 4, 4});
    CHECK(d.certificate->kind == CertificateKind::ClassRankDiffers);
    CHECK_EQ(d.certificate->left, std::string("{\"class_rank\":8}"));
    CHECK_EQ(d.certificate->right, std::string("{\"class_rank\":7}"));
    CHECK(verify_certificate(d, {2, 3, 6}, {2, 4, 4}));

    // Both smooth of genus 4, no tabulated ranks: the weight multiset with
    // the degree is the deciding tiebreaker.
    d = decide({2, 10, 10}, {3, 6, 6});
    CHECK(d.certificate->kind == CertificateKind::WeightMultisetDiffers);
    CHECK_EQ(d.certificate->left, std::string("{\"degree\":10,\"weights\":[1,1,1,5]}"));
    CHECK_EQ(d.certificate->right, std::string("{\"degree\":6,\"weights\":[1,1,1,2]}"));
    CHECK(verify_certificate(d, {2, 10, 10}, {3, 6, 6}));
}

static void test_verify_tampering() {
    IsoDecision d = decide({2, 2, 5}, {2, 2, 7});
    CHECK(verify_certificate(d, {2, 2, 5}, {2, 2, 7}));

    IsoDecision bad = d;
    bad.certificate->left[3] = '9';
    CHECK(!verify_certificate(bad, {2, 2, 5}, {2, 2, 7}));

    bad = d;
    bad.certificate->kind = CertificateKind::GenusDiffers;
    CHECK(!verify_certificate(bad, {2, 2, 5}, {2, 2, 7}));

    bad = d;
    bad.certificate->right = bad.certificate->left;
    CHECK(!verify_certificate(bad, {2, 2, 5}, {2, 2, 7}));

    bad = d;
    bad.witness = std::array<int, 3>{0, 1, 2};
    CHECK(!verify_certificate(bad, {2, 2, 5}, {2, 2, 7}));

    IsoDecision iso = decide({2, 3, 7}, {7, 2, 3});
    bad = iso;
    bad.witness = std::array<int, 3>{0, 1, 2};
    CHECK(!verify_certificate(bad, {2, 3, 7}, {7, 2, 3}));
    bad = iso;
    bad.witness = std::array<int, 3>{2, 0, 0};
    CHECK(!verify_certificate(bad, {2, 3, 7}, {7, 2, 3}));
    bad = iso;
    bad.witness.reset();
    CHECK(!verify_certificate(bad, {2, 3, 7}, {7, 2, 3}));
    CHECK(!verify_certificate(iso, {2, 3, 7}, {2, 3, 7}));  // wrong pair for this witness
}

static void test_verify_hand_built() {
    // verify_certificate checks evidence validity, not decision order, so a
    // certificate naming a later invariant is accepted when its values check.
    IsoDecision d;
    d.isomorphic = false;
    d.certificate =
        Certificate{CertificateKind::GenusDiffers, "{\"boundary_genus\":0}", "{\"boundary_genus\":1}"};
    CHECK(verify_certificate(d, {2, 3, 7}, {2, 3, 6}));

    d.certificate = Certificate{CertificateKind::ClassRankDiffers, "{\"class_rank\":6}",
                                "{\"class_rank\":4}"};
    CHECK(verify_certificate(d, {2, 3, 8}, {2, 4, 5}));
    // Same evidence fails when one side has no tabulated rank.
    d.certificate =
        Certificate{CertificateKind::ClassRankDiffers, "{\"class_rank\":6}", "{\"class_rank\":null}"};
    CHECK(!verify_certificate(d, {2, 3, 8}, {3, 3, 4}));

    d.certificate = Certificate{CertificateKind::WeightMultisetDiffers,
                                "{\"degree\":42,\"weights\":[1,6,14,21]}",
                                "{\"degree\":6,\"weights\":[1,1,2,3]}"};
    CHECK(verify_certificate(d, {2, 3, 7}, {2, 3, 6}));
}

static void test_symmetry_and_exhaustive() {
    std::vector<ExponentTuple> all;
    for (long long a1 = 2; a1 <= 4; ++a1)
        for (long long a2 = 2; a2 <= 4; ++a2)
            for (long long a3 = 2; a3 <= 4; ++a3) all.push_back({a1, a2, a3});
    long long fallbacks = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            IsoDecision d = decide(all[i], all[j]);
            IsoDecision back = decide(all[j], all[i]);
            CHECK_EQ(d.isomorphic, all[i].sorted_key() == all[j].sorted_key());
            CHECK_EQ(back.isomorphic, d.isomorphic);
            CHECK(verify_certificate(d, all[i], all[j]));
            CHECK(verify_certificate(back, all[j], all[i]));
            if (!d.isomorphic) {
                CHECK(d.certificate->kind == back.certificate->kind);
                CHECK_EQ(d.certificate->left, back.certificate->right);
                CHECK_EQ(d.certificate->right, back.certificate->left);
                if (d.certificate->kind == CertificateKind::MainTheoremFallback) ++fallbacks;
                if (!(partition_class(all[i]) == partition_class(all[j])))
                    CHECK(d.certificate->kind == CertificateKind::PartitionClassDiffers);
            }
        }
    }
    CHECK_EQ(fallbacks, 0LL);
}

static void test_serialization() {
    InvariantReport r = report({2, 3, 7});
    std::string j = report_json(r);
    CHECK_EQ(j, report_json(r));  // byte-stable
    CHECK(contains(j, "\"tuple\": ["));
    CHECK(contains(j, "\"partition\": {"));
    CHECK(contains(j, "\"boundary_genus\": 0"));
    CHECK(contains(j, "\"geometric_genus\": 1"));
    CHECK(contains(j, "\"singular_locus\": ["));
    CHECK(contains(j, "\"star_branches\": ["));
    CHECK(contains(j, "\"class_rank\": {"));
    CHECK(contains(j, "\"source\": \"paper-table\""));

    CHECK(contains(report_json(report({3, 3, 4})), "\"class_rank\": null"));

    std::string t = report_text(r);
    CHECK(contains(t, "tuple: (2,3,7)"));
    CHECK(contains(t, "partition: S0 (T1)"));
    CHECK(contains(t, "class rank: 0 [paper-table]"));
    CHECK(contains(t, "star: central genus 0, branches: [-2] [-2,-2] [-2,-2,-2,-2,-2,-2]"));
    CHECK(contains(report_text(report({3, 3, 3})), "singular locus: none"));
    CHECK(contains(report_text(report({3, 3, 4})), "class rank: unknown"));

    IsoDecision d = decide({2, 3, 7}, {7, 2, 3});
    std::string dj = decision_json(d, {2, 3, 7}, {7, 2, 3});
    CHECK(contains(dj, "\"verdict\": \"Isomorphic\""));
    CHECK(contains(dj, "\"certificate\": null"));
    CHECK_EQ(dj, decision_json(d, {2, 3, 7}, {7, 2, 3}));
    std::string dt = decision_text(d, {2, 3, 7}, {7, 2, 3});
    CHECK(contains(dt, "verdict: Isomorphic"));
    CHECK(contains(dt, "witness: p = (3,1,2)"));

    d = decide({2, 4, 8}, {3, 3, 6});
    dj = decision_json(d, {2, 4, 8}, {3, 3, 6});
    CHECK(contains(dj, "\"verdict\": \"NotIsomorphic\""));
    CHECK(contains(dj, "\"kind\": \"SingularLocusDiffers\""));
    CHECK(contains(dj, "\"witness\": null"));
    dt = decision_text(d, {2, 4, 8}, {3, 3, 6});
    CHECK(contains(dt, "certificate: SingularLocusDiffers"));
}

static void test_scan() {
    ScanSummary p = scan_pairs(6);
    ScanSummary s = scan_pairs_serial(6);
    CHECK_EQ(p.pairs, 35LL * 34 / 2);
    CHECK_EQ(p.pairs, s.pairs);
    CHECK_EQ(p.isomorphic, 0LL);
    CHECK_EQ(p.isomorphic, s.isomorphic);
    CHECK(p.histogram == s.histogram);
    CHECK_EQ(p.fallback_pairs.size(), std::size_t(0));
    CHECK_EQ(s.fallback_pairs.size(), std::size_t(0));

    ScanSummary again = scan_pairs(6);
    CHECK(again.histogram == p.histogram);
    CHECK_EQ(again.pairs, p.pairs);

    ScanSummary small = scan_pairs(4);
    CHECK_EQ(small.pairs, 10LL * 9 / 2);
    CHECK_EQ(small.fallback_pairs.size(), std::size_t(0));
    long long certs = 0;
    for (const auto& [kind, count] : small.histogram) {
        (void)kind;
        certs += count;
    }
    CHECK_EQ(certs + small.isomorphic, small.pairs);

    CHECK_EQ(std::string(certificate_kind_name(CertificateKind::MainTheoremFallback)),
             std::string("MainTheoremFallback"));
}

int main() {
    test_report();
    test_decide_isomorphic();
    test_decide_certificates();
    test_verify_tampering();
    test_verify_hand_built();
    test_symmetry_and_exhaustive();
    test_serialization();
    test_scan();
    return checks::finish("test_classify");
}
