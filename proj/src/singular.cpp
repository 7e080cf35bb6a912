#include "pbsurf/singular.hpp"

#include <boost/multiprecision/integer.hpp>

#include <numeric>

namespace pbsurf {

using boost::multiprecision::gcd;

QuotientType::QuotientType(Int n_, Int m_) : n(std::move(n_)), m(std::move(m_)) {
    if (n < 2) throw std::invalid_argument("QuotientType: n must be >= 2");
    m %= n;
    if (m < 0) m += n;
    if (m == 0 || gcd(n, m) != 1)
        throw std::invalid_argument("QuotientType: m must be a unit mod n");
}

std::vector<SingularRecord> singular_locus(const ExponentTuple& t) {
    WeightData wd = weight_data(t);
    std::vector<SingularRecord> out;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        Int n = gcd(wd.weights[i], wd.weights[j]);
        if (n == 1) continue;
        int k = 3 - i - j;
        if (gcd(n, wd.weights[k]) != 1)
            throw internal_error("singular_locus: all three weights share a factor");
        out.push_back({{i + 1, j + 1},
                       std::gcd(t.a[i], t.a[j]),
                       QuotientType(n, wd.weights[k] % n)});
    }
    return out;
}

std::vector<SingularRecord> predict_T1(const ExponentTuple& t) {
    long long a1 = t.a[0], a2 = t.a[1], a3 = t.a[2];
    if (std::gcd(a1, a3) != 1 || std::gcd(a2, a3) != 1)
        throw std::invalid_argument("predict_T1: need gcd(a1*a2, a3) = 1");
    long long g = std::gcd(a1, a2);
    long long u = a1 / g, v = a2 / g;
    WeightData wd = weight_data(t);
    std::vector<SingularRecord> out;
    out.push_back({{1, 2}, g, QuotientType(Int(a3), Int(u) * v * g)});
    if (v != 1) out.push_back({{1, 3}, 1, QuotientType(Int(v), wd.weights[1])});
    if (u != 1) out.push_back({{2, 3}, 1, QuotientType(Int(u), wd.weights[0])});
    return out;
}

std::vector<SingularRecord> predict_T2(const ExponentTuple& t) {
    long long m = std::gcd(t.a[0], t.a[1]);
    if (std::gcd(t.a[0], t.a[2]) != m || std::gcd(t.a[1], t.a[2]) != m)
        throw std::invalid_argument("predict_T2: no pairwise-coprime decomposition");
    std::array<long long, 3> p = {t.a[0] / m, t.a[1] / m, t.a[2] / m};
    std::vector<SingularRecord> out;
    for (int k = 2; k >= 0; --k) {  // edge order {1,2}, {1,3}, {2,3}
        if (p[k] == 1) continue;
        int i = (k == 0) ? 1 : 0, j = (k == 2) ? 1 : 2;
        out.push_back({{i + 1, j + 1}, m, QuotientType(Int(p[k]), Int(p[i]) * p[j])});
    }
    return out;
}

std::map<std::pair<Int, Int>, Int> type_multiset(const std::vector<SingularRecord>& records) {
    std::map<std::pair<Int, Int>, Int> out;
    for (const auto& r : records) out[{r.type.n, r.type.m}] += r.count;
    return out;
}

}  // namespace pbsurf
