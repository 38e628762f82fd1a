#include "fibrec/symfun.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace fibrec {

namespace {

const VarList kXS = {"x", "s"};

MPoly xs_const(const Int& c) { return MPoly::constant(c, kXS); }

using Mat = std::vector<MPoly>;  // row-major k*k over Z[x,s]

Mat mat_identity(int k) {
    Mat m(static_cast<size_t>(k * k), xs_const(0));
    for (int i = 0; i < k; ++i) m[static_cast<size_t>(i * k + i)] = xs_const(1);
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b, int k) {
    Mat r(static_cast<size_t>(k * k), xs_const(0));
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l) {
            const MPoly& ail = a[static_cast<size_t>(i * k + l)];
            if (ail.is_zero()) continue;
            for (int j = 0; j < k; ++j) {
                const MPoly& blj = b[static_cast<size_t>(l * k + j)];
                if (blj.is_zero()) continue;
                r[static_cast<size_t>(i * k + j)] += ail * blj;
            }
        }
    return r;
}

Mat mat_pow(Mat base, long long e, int k) {
    Mat result = mat_identity(k);
    while (e > 0) {
        if (e & 1) result = mat_mul(result, base, k);
        e >>= 1;
        if (e > 0) base = mat_mul(base, base, k);
    }
    return result;
}

MPoly mat_trace(const Mat& a, int k) {
    MPoly t = xs_const(0);
    for (int i = 0; i < k; ++i) t += a[static_cast<size_t>(i * k + i)];
    return t;
}

std::mutex g_elem_mu;
std::map<std::tuple<int, int, long long>, MPoly> g_elem_cache;

}  // namespace

long long nonneg_mod(long long a, long long m) { return ((a % m) + m) % m; }

Companion::Companion(int kk) : k(kk), entries(static_cast<size_t>(kk * kk), xs_const(0)) {
    if (k < 2) throw std::domain_error("Companion: k must be >= 2");
    for (int i = 1; i < k; ++i) entries[static_cast<size_t>(i * k + (i - 1))] = xs_const(1);
    entries[static_cast<size_t>(0 * k + (k - 1))] = MPoly::variable("s", kXS);
    entries[static_cast<size_t>((k - 1) * k + (k - 1))] = MPoly::variable("x", kXS);
}

MPoly companion_power_trace(int k, long long e) {
    Companion c(k);
    return mat_trace(mat_pow(c.entries, e, k), k);
}

MPoly elem_sym(int i, int k, long long m) {
    if (k < 2 || i < 0 || i > k || m < 0)
        throw std::domain_error("elem_sym: need k >= 2, 0 <= i <= k, m >= 0");
    if (i == 0) return xs_const(1);
    auto key = std::make_tuple(i, k, m);
    {
        std::lock_guard<std::mutex> lock(g_elem_mu);
        auto it = g_elem_cache.find(key);
        if (it != g_elem_cache.end()) return it->second;
    }
    // Power sums of the m-th powers of the roots: P_j = tr((C^m)^j).
    Companion c(k);
    Mat base = mat_pow(c.entries, m, k);
    std::vector<MPoly> power_sums;  // P_1 .. P_i
    Mat acc = base;
    for (int j = 1; j <= i; ++j) {
        power_sums.push_back(mat_trace(acc, k));
        if (j < i) acc = mat_mul(acc, base, k);
    }
    // Newton: i*e_i = sum_{j=1}^{i} (-1)^(j-1) e_{i-j} P_j.
    std::vector<MPoly> e = {xs_const(1)};
    for (int n = 1; n <= i; ++n) {
        MPoly num = xs_const(0);
        for (int j = 1; j <= n; ++j) {
            MPoly term = e[static_cast<size_t>(n - j)] * power_sums[static_cast<size_t>(j - 1)];
            num += (j % 2 == 1) ? term : -term;
        }
        // Provably in Z[x,s]; a failed division is an implementation bug.
        e.push_back(num.div_exact(n));
    }
    std::lock_guard<std::mutex> lock(g_elem_mu);
    return g_elem_cache.emplace(key, e.back()).first->second;
}

MPoly p_sym(int i, long long m, int k) {
    if (i < 1 || i > k - 1) throw std::domain_error("p_sym: need 1 <= i <= k-1");
    MPoly p = elem_sym(i, k, m);
    if (i % 2 == 0) p = -p;
    // Support window of the (x,s)-expansion.
    Int j_lo = ceil_div(Int((i - 1) * m), Int(k));
    Int j_hi = floor_div(Int(i * m), Int(k));
    for (const auto& [e, c] : p.terms()) {
        long long ex = e[0], j = e[1];
        if (ex != i * m - k * j || Int(j) < j_lo || Int(j) > j_hi)
            throw std::logic_error("p_sym: term s^" + std::to_string(j) + " x^" +
                                   std::to_string(ex) + " violates the support window");
    }
    return p;
}

UPoly<MPoly> phi_product(int k, int m) {
    if (k < 2 || m < 1) throw std::domain_error("phi_product: need k >= 2, m >= 1");
    CycloRing ring(m);
    const MPoly x = MPoly::variable("x", kXS);
    const MPoly s = MPoly::variable("s", kXS);
    // Coefficients of z^0 .. z^(k*m) over Z[w][x,s].
    std::vector<CycloRing::Elt<MPoly>> acc(static_cast<size_t>(k * m) + 1, ring.zero<MPoly>());
    acc[0] = ring.from_scalar(xs_const(1));
    size_t top = 0;
    for (int j = 0; j < m; ++j) {
        // Multiply by 1 - w^j x z - w^(kj) s z^k.
        auto cx = ring.mul_root(ring.from_scalar(x), j);          // w^j x
        auto cs = ring.mul_root(ring.from_scalar(s), 1LL * k * j);  // w^(kj) s
        std::vector<CycloRing::Elt<MPoly>> next(acc.size(), ring.zero<MPoly>());
        size_t new_top = top + static_cast<size_t>(k);
        for (size_t d = 0; d <= top; ++d) {
            next[d] = ring.add(next[d], acc[d]);
            next[d + 1] = ring.sub(next[d + 1], ring.mul(acc[d], cx));
            next[d + static_cast<size_t>(k)] =
                ring.sub(next[d + static_cast<size_t>(k)], ring.mul(acc[d], cs));
        }
        acc = std::move(next);
        top = new_top;
    }
    std::vector<MPoly> z_coeffs;
    z_coeffs.reserve(acc.size());
    for (const auto& elt : acc) z_coeffs.push_back(ring.rational_part(elt));
    return UPoly<MPoly>("z", std::move(z_coeffs));
}

std::vector<Int> b_coeffs(int m, int k) {
    if (m < 1 || k < 1) throw std::domain_error("b_coeffs: need m >= 1, k >= 1");
    CycloRing ring(m);
    // prod_{j=1}^m (z - w^(-kj)(w^j - 1)) as coefficients of z^0..z^m.
    std::vector<CycloRing::Elt<Int>> acc(static_cast<size_t>(m) + 1, ring.zero<Int>());
    acc[0] = ring.from_scalar(Int(1));
    for (int j = 1; j <= m; ++j) {
        auto root = ring.sub(ring.root_power(j), ring.from_scalar(Int(1)));
        root = ring.mul_root(root, -1LL * k * j);  // w^(-kj)(w^j - 1)
        std::vector<CycloRing::Elt<Int>> next(acc.size(), ring.zero<Int>());
        for (size_t d = 0; d < static_cast<size_t>(j); ++d) {
            next[d + 1] = ring.add(next[d + 1], acc[d]);
            next[d] = ring.sub(next[d], ring.mul(acc[d], root));
        }
        acc = std::move(next);
    }
    std::vector<Int> out;
    for (size_t d = 0; d <= static_cast<size_t>(m); ++d) {
        Int v = ring.rational_part(acc[d]);
        if (d == 0) {
            if (v != 0)
                throw std::logic_error("b_coeffs: nonzero constant term " + v.str());
        } else {
            out.push_back(v);
        }
    }
    return out;
}

IdentityReport verify_eq28(int m, int k) {
    auto b = b_coeffs(m, k);
    const VarList vx = {"x"};
    const MPoly x = MPoly::variable("x", vx);
    const MPoly xp1 = x + MPoly::constant(1, vx);
    MPoly lhs = MPoly::constant(0, vx);
    for (int j = 1; j <= m; ++j) {
        if (b[static_cast<size_t>(j - 1)] == 0) continue;
        MPoly term = MPoly::constant(b[static_cast<size_t>(j - 1)], vx);
        for (int p = 0; p < j; ++p) term = term * x;
        long long e = nonneg_mod(-1LL * k * j, m);
        for (long long p = 0; p < e; ++p) term = term * xp1;
        lhs += term;
    }
    if ((1LL * k * (m - 1)) % 2 != 0) lhs = -lhs;
    MPoly rhs = MPoly::constant(-1, vx);
    {
        MPoly pw = MPoly::constant(1, vx);
        for (int p = 0; p < m; ++p) pw = pw * xp1;
        rhs += pw;
    }
    MPoly residual = lhs - rhs;
    IdentityReport rep;
    rep.name = "eq28(m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")";
    rep.pass = residual.is_zero();
    rep.residual = residual.str();
    return rep;
}

MPoly dangelo_f(int m, int k) {
    if (m < 1 || k < 1) throw std::domain_error("dangelo_f: need m >= 1, k >= 1");
    CycloRing ring(m);
    const VarList vxy = {"x", "y"};
    const MPoly x = MPoly::variable("x", vxy);
    const MPoly y = MPoly::variable("y", vxy);
    auto acc = ring.from_scalar(MPoly::constant(1, vxy));
    for (int j = 0; j < m; ++j) {
        // 1 - w^j x - w^(kj) y
        auto factor = ring.from_scalar(MPoly::constant(1, vxy));
        factor = ring.sub(factor, ring.mul_root(ring.from_scalar(x), j));
        factor = ring.sub(factor, ring.mul_root(ring.from_scalar(y), 1LL * k * j));
        acc = ring.mul(acc, factor);
    }
    MPoly f = MPoly::constant(1, vxy) - ring.rational_part(acc);
    // Condition 1: f(0,0) = 0.
    if (f.coeff({0, 0}) != 0) throw std::logic_error("dangelo_f: f(0,0) != 0");
    // Condition 2: f(x, 1-x) = 1, by exact substitution.
    const VarList vx = {"x"};
    MPoly on_line = f.substituted({{"x", MPoly::variable("x", vx)},
                                   {"y", MPoly::constant(1, vx) - MPoly::variable("x", vx)}});
    if (on_line != MPoly::constant(1, vx))
        throw std::logic_error("dangelo_f: f(x,1-x) != 1: " + on_line.str());
    // Condition 3: deg f = m.
    if (f.total_degree() != m)
        throw std::logic_error("dangelo_f: total degree " + std::to_string(f.total_degree()) +
                               " != m");
    // Condition 4, coefficient-level: every monomial x^a y^b has a + k*b == 0 (mod m).
    for (const auto& [e, c] : f.terms())
        if (nonneg_mod(e[0] + 1LL * k * e[1], m) != 0)
            throw std::logic_error("dangelo_f: monomial x^" + std::to_string(e[0]) + " y^" +
                                   std::to_string(e[1]) + " violates the invariance condition");
    return f;
}

}  // namespace fibrec
