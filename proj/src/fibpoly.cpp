#include "fibrec/fibpoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace fibrec {

namespace {

const VarList kXS = {"x", "s"};

MPoly xs_const(const Int& c) { return MPoly::constant(c, kXS); }

MPoly xs_mono(const Int& c, int ex, int es) { return MPoly::monomial(c, {ex, es}, kXS); }

MPoly var_x() { return MPoly::variable("x", kXS); }

void assert_equal(const MPoly& a, const MPoly& b, const char* what) {
    if (a != b)
        throw std::logic_error(std::string("fibpoly: dual-path mismatch in ") + what + ": " +
                               a.str() + " vs " + b.str());
}

// Generic order-k step: value(n) = x*value(n-1) + s*value(n-k), from the
// given initial segment [v_0 .. v_{k-1}].
std::vector<MPoly> run_step_recurrence(std::vector<MPoly> init, long long n) {
    const MPoly x = var_x();
    const MPoly s = MPoly::variable("s", kXS);
    size_t k = init.size();
    while (static_cast<long long>(init.size()) <= n)
        init.push_back(x * init[init.size() - 1] + s * init[init.size() - k]);
    return init;
}

// Integer coefficient C(n-j, j) * n/(n-j), asserted integral.
Int lucas_coeff(long long n, long long j) {
    Rat c = Rat(binom(n - j, j)) * Rat(n, n - j);
    return to_int(c);
}

MPoly fib_closed(long long n) {
    // j-indexed binomial sum for F_n, n >= 1.
    MPoly sum = xs_const(0);
    for (long long j = 0; j <= n / 2; ++j) {
        Int c = binom(n - 1 - j, j);
        if (c != 0) sum += xs_mono(c, static_cast<int>(n - 1 - 2 * j), static_cast<int>(j));
    }
    return sum;
}

MPoly lucas_closed(long long n) {
    // n >= 1 only.
    MPoly sum = xs_const(0);
    for (long long j = 0; j <= n / 2; ++j) {
        Int c = binom(n - j, j);
        if (c == 0) continue;
        sum += xs_mono(lucas_coeff(n, j), static_cast<int>(n - 2 * j), static_cast<int>(j));
    }
    return sum;
}

// Closed form for F_{n+1}^{(k)}.
MPoly fib_k_closed_shifted(long long n, int k) {
    MPoly sum = xs_const(0);
    for (long long j = 0; j <= n / k; ++j) {
        Int c = binom(n - (k - 1) * j, j);
        if (c != 0) sum += xs_mono(c, static_cast<int>(n - k * j), static_cast<int>(j));
    }
    return sum;
}

// Closed form for L_n^{(k)}, valid for n >= k.
MPoly lucas_k_closed(long long n, int k) {
    MPoly sum = xs_const(0);
    for (long long j = 0; j <= n / k; ++j) {
        Int c = binom(n - (k - 1) * j, j);
        if (c == 0) continue;
        Int coeff = to_int(Rat(c) * Rat(n, n - (k - 1) * j));
        sum += xs_mono(coeff, static_cast<int>(n - k * j), static_cast<int>(j));
    }
    return sum;
}

MPoly g_k_closed(long long n, int k) {
    MPoly sum = xs_const(0);
    for (long long j = ((k - 2) * n) / k; j <= ((k - 1) * n) / k; ++j) {
        long long ex = (k - 1) * n - k * j;
        Int c = binom(n - j, ex);
        if (c != 0) sum += xs_mono(c, static_cast<int>(ex), static_cast<int>(j));
    }
    return sum;
}

// Re-indexed form of the same sum.
MPoly g_k_closed2(long long n, int k) {
    MPoly sum = xs_const(0);
    for (long long j = 0; j <= n; ++j) {
        Int c = binom(j, n - (k - 1) * j);
        if (c != 0) sum += xs_mono(c, static_cast<int>(k * j - n), static_cast<int>(n - j));
    }
    return sum;
}

MPoly h_k_closed(long long n, int k) {
    // n >= 1 only.
    MPoly sum = xs_const(0);
    for (long long j = ((k - 2) * n) / k; j <= ((k - 1) * n) / k; ++j) {
        long long ex = (k - 1) * n - k * j;
        Int c = binom(n - j, ex);
        if (c == 0) continue;
        Int coeff = to_int(Rat(c) * Rat(n, n - j));
        sum += xs_mono(coeff, static_cast<int>(ex), static_cast<int>(j));
    }
    return sum;
}

// G/H share the reversed recurrence value(n) = s^(k-2) x value(n-(k-1)) + s^(k-1) value(n-k).
std::vector<MPoly> run_reversed_recurrence(std::vector<MPoly> init, long long n, int k) {
    const MPoly a = xs_mono(1, 1, k - 2);
    const MPoly b = xs_mono(1, 0, k - 1);
    size_t kk = static_cast<size_t>(k);
    while (static_cast<long long>(init.size()) <= n)
        init.push_back(a * init[init.size() - (kk - 1)] + b * init[init.size() - kk]);
    return init;
}

template <class Key, class Fn>
MPoly memoized(std::map<Key, MPoly>& cache, std::mutex& mu, const Key& key, Fn&& compute) {
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    MPoly value = compute();
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(value)).first->second;
}

std::mutex g_mu;
std::map<std::tuple<int, int, long long>, MPoly> g_cache;  // (family ordinal, k, n)

enum Ord { oF, oL, oFk, oLk, oGk, oHk };

}  // namespace

MPoly fib(long long n) {
    if (n < 0) throw std::domain_error("fib: n must be nonnegative");
    return memoized(g_cache, g_mu, std::make_tuple(int(oF), 2, n), [&] {
        auto rec = run_step_recurrence({xs_const(0), xs_const(1)}, n);
        if (n >= 1) assert_equal(rec[n], fib_closed(n), "fib");
        return rec[n];
    });
}

MPoly lucas(long long n) {
    if (n < 0) throw std::domain_error("lucas: n must be nonnegative");
    return memoized(g_cache, g_mu, std::make_tuple(int(oL), 2, n), [&] {
        auto rec = run_step_recurrence({xs_const(2), var_x()}, n);
        if (n >= 1) assert_equal(rec[n], lucas_closed(n), "lucas");
        return rec[n];
    });
}

MPoly fib_k(long long n, int k) {
    if (n < 0 || k < 2) throw std::domain_error("fib_k: need n >= 0, k >= 2");
    return memoized(g_cache, g_mu, std::make_tuple(int(oFk), k, n), [&] {
        std::vector<MPoly> init = {xs_const(0)};
        for (int i = 1; i < k; ++i) init.push_back(xs_mono(1, i - 1, 0));
        auto rec = run_step_recurrence(std::move(init), n);
        if (n >= 1) assert_equal(rec[n], fib_k_closed_shifted(n - 1, k), "fib_k");
        return rec[n];
    });
}

MPoly lucas_k(long long n, int k) {
    if (n < 0 || k < 2) throw std::domain_error("lucas_k: need n >= 0, k >= 2");
    return memoized(g_cache, g_mu, std::make_tuple(int(oLk), k, n), [&] {
        std::vector<MPoly> init = {xs_const(k)};
        for (int i = 1; i < k; ++i) init.push_back(xs_mono(1, i, 0));
        auto rec = run_step_recurrence(std::move(init), n);
        // The closed form only covers n >= k; below that the initial values rule.
        if (n >= k) assert_equal(rec[n], lucas_k_closed(n, k), "lucas_k");
        return rec[n];
    });
}

MPoly g_k(long long n, int k) {
    if (n < 0 || k < 2) throw std::domain_error("g_k: need n >= 0, k >= 2");
    return memoized(g_cache, g_mu, std::make_tuple(int(oGk), k, n), [&] {
        std::vector<MPoly> init = {xs_const(1)};
        for (int i = 1; i <= k - 2; ++i) init.push_back(xs_const(0));
        init.push_back(xs_mono(1, 1, k - 2));
        auto rec = run_reversed_recurrence(std::move(init), n, k);
        assert_equal(rec[n], g_k_closed(n, k), "g_k closed");
        assert_equal(rec[n], g_k_closed2(n, k), "g_k reindexed");
        return rec[n];
    });
}

MPoly h_k(long long n, int k) {
    if (n < 0 || k < 2) throw std::domain_error("h_k: need n >= 0, k >= 2");
    return memoized(g_cache, g_mu, std::make_tuple(int(oHk), k, n), [&] {
        std::vector<MPoly> init = {xs_const(k)};
        for (int i = 1; i < k - 1; ++i) init.push_back(xs_const(0));
        if (k >= 2) init.push_back(xs_mono(k - 1, 1, k - 2));
        auto rec = run_reversed_recurrence(std::move(init), n, k);
        if (n >= 1) assert_equal(rec[n], h_k_closed(n, k), "h_k");
        return rec[n];
    });
}

FamilyId parse_family(const std::string& name, int k) {
    if (name == "F") return {FamilyTag::F, 2};
    if (name == "L") return {FamilyTag::L, 2};
    FamilyTag tag;
    if (name == "Fk") tag = FamilyTag::Fk;
    else if (name == "Lk") tag = FamilyTag::Lk;
    else if (name == "Gk") tag = FamilyTag::Gk;
    else if (name == "Hk") tag = FamilyTag::Hk;
    else throw std::invalid_argument("unknown family: " + name);
    if (k < 2) throw std::invalid_argument("family " + name + " requires k >= 2");
    return {tag, k};
}

MPoly family_value(const FamilyId& id, long long n) {
    switch (id.tag) {
        case FamilyTag::F: return fib(n);
        case FamilyTag::L: return lucas(n);
        case FamilyTag::Fk: return fib_k(n, id.k);
        case FamilyTag::Lk: return lucas_k(n, id.k);
        case FamilyTag::Gk: return g_k(n, id.k);
        case FamilyTag::Hk: return h_k(n, id.k);
    }
    throw std::logic_error("family_value: bad tag");
}

Rat family_at(const FamilyId& id, long long n, const Rat& x0, const Rat& s0) {
    return family_value(id, n).evaluated({{"x", x0}, {"s", s0}});
}

}  // namespace fibrec
