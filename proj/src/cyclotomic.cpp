#include "fibrec/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace fibrec {

namespace {

UPoly<Int> cyclo_impl(int m, std::map<int, UPoly<Int>>& memo) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    // t^m - 1
    std::vector<Int> c(static_cast<size_t>(m) + 1, Int(0));
    c[0] = -1;
    c[static_cast<size_t>(m)] = 1;
    UPoly<Int> num("t", std::move(c));
    UPoly<Int> den = UPoly<Int>::constant("t", 1);
    for (int d = 1; d < m; ++d)
        if (m % d == 0) den = den * cyclo_impl(d, memo);
    UPoly<Int> phi = div_exact(num, den);
    memo.emplace(m, phi);
    return phi;
}

}  // namespace

UPoly<Int> cyclotomic_poly(int m) {
    if (m < 1) throw std::domain_error("cyclotomic_poly: m must be positive");
    static std::mutex mu;
    static std::map<int, UPoly<Int>> memo;  // small m only; grown monotonically
    std::lock_guard<std::mutex> lock(mu);
    return cyclo_impl(m, memo);
}

CycloRing::CycloRing(int m) : m_(m), phi_(cyclotomic_poly(m)) {}

CycloRing::Elt<Int> CycloRing::root_power(long long j) const {
    long long jm = ((j % m_) + m_) % m_;
    std::vector<Int> v(static_cast<size_t>(jm) + 1, Int(0));
    v[static_cast<size_t>(jm)] = 1;
    reduce(v);
    v.resize(static_cast<size_t>(degree()));
    return v;
}

}  // namespace fibrec
