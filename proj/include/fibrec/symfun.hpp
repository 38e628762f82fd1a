#ifndef FIBREC_SYMFUN_HPP
#define FIBREC_SYMFUN_HPP

#include "fibrec/cyclotomic.hpp"
#include "fibrec/mpoly.hpp"
#include "fibrec/upoly.hpp"

#include <string>
#include <vector>

namespace fibrec {

/// Companion matrix of z^k - x z^(k-1) - s over Z[x,s]: subdiagonal ones,
/// last column (s, 0, ..., 0, x). Power sums of the roots are traces of
/// its powers.
struct Companion {
    int k;
    std::vector<MPoly> entries;  // row-major k*k

    explicit Companion(int k);
    const MPoly& at(int i, int j) const { return entries[static_cast<size_t>(i * k + j)]; }
};

/// tr(C^e) for the companion matrix of order k, by binary exponentiation.
MPoly companion_power_trace(int k, long long e);

/// e_{i,k,m}(x,s): i-th elementary symmetric polynomial of the m-th powers
/// of the roots of z^k - x z^(k-1) - s. Power sums tr(C^(m*j)) are fed
/// through Newton's identities; every division is exact or a hard error.
MPoly elem_sym(int i, int k, long long m);

/// p_i(m,k,x,s) = (-1)^(i+1) e_{i,k,m}(x,s), for 1 <= i <= k-1. The support
/// window is asserted: every term s^j x^e has e = i*m - k*j with
/// ceil((i-1)m/k) <= j <= floor(im/k).
MPoly p_sym(int i, long long m, int k);

/// Independent oracle for elem_sym: expand
///   prod_{j=0}^{m-1} (1 - w^j x z - w^(kj) s z^k)
/// over Z[w_m][x,s][z] and return it as a polynomial in z. Every
/// z-coefficient must come out Galois-invariant (omega-free) or it is a
/// hard error. Shares no code path with elem_sym.
UPoly<MPoly> phi_product(int k, int m);

/// Coefficients b_1..b_m of prod_{j=1}^m (z - w^(-kj) (w^j - 1)); the
/// constant term is asserted to vanish and every coefficient to be a
/// rational integer.
std::vector<Int> b_coeffs(int m, int k);

struct IdentityReport {
    std::string name;
    bool pass = false;
    std::string residual;  // printed residual polynomial on failure
};

/// (-1)^(k(m-1)) sum_j b_{m,k,j} x^j (1+x)^mod(-kj,m) = (x+1)^m - 1,
/// checked as an exact polynomial identity in x.
IdentityReport verify_eq28(int m, int k);

/// The invariant polynomial 1 - prod_{j=0}^{m-1} (1 - w^j x - w^(kj) y)
/// in Z[x,y], with its four defining conditions verified:
/// f(0,0) = 0; f(x,1-x) = 1; deg f = m; every monomial x^a y^b has
/// a + k b == 0 (mod m).
MPoly dangelo_f(int m, int k);

/// Least nonnegative residue.
long long nonneg_mod(long long a, long long m);

}  // namespace fibrec

#endif
