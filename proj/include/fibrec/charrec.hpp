#ifndef FIBREC_CHARREC_HPP
#define FIBREC_CHARREC_HPP

#include "fibrec/binsum.hpp"
#include "fibrec/symfun.hpp"
#include "fibrec/upoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fibrec {

/// Characteristic polynomial in the shift variable t, with a provenance tag
/// naming the construction that produced it.
struct CharPoly {
    UPoly<Rat> poly;
    std::string provenance;
};

/// Outcome of an annihilation check. The verifier scans from n_from; if the
/// residual only vanishes from some later index onward, the minimal working
/// start n0 is recorded instead of failing outright (pass means the whole
/// tail from n0 is zero and n0 exists within the range).
struct RecurrenceReport {
    std::string charpoly;
    std::string sequence;
    long long n_from = 0, n_to = 0;
    bool pass = false;                 // zero residual on [n0, n_to] for some n0 in range
    long long n0 = 0;                  // minimal working start index
    std::optional<std::pair<long long, std::string>> counterexample;  // first nonzero residual
};

using Sequence = std::function<Rat(long long)>;

/// (1 + z^2) - z * L_m(t, -1).
CharPoly charpoly_k2(long long m, const Rat& z);
/// (1 + (-1)^(k(m-1)) z^k) - sum_{i=1}^{k-1} z^i p_i(m,k,t,-1).
CharPoly charpoly_general(int k, long long m, const Rat& z);

enum class Parity { Even, Odd };
/// The short operators: L_m(t,-1) for (even, z=-1);
/// F_{m+1}(t,-1) - F_m(t,-1) for (odd, z=-1); (t-2) F_m(t,-1) for (even, z=+1);
/// L_{m+1}(t,-1) - L_m(t,-1) for (odd, z=+1).
CharPoly charpoly_simple(long long m, Parity parity, int z_sign);

/// Monic degree-k polynomial sum_{i=0}^k (-1)^i e_{i,k,m}(x,s) t^(k-i),
/// the characteristic polynomial of m-step subsequences of the order-k
/// Fibonacci family.
UPoly<MPoly> subseq_charpoly(int k, long long m);

/// Evaluate MPoly coefficients at a rational point, yielding a CharPoly.
CharPoly charpoly_at(const UPoly<MPoly>& p, const Rat& x0, const Rat& s0, std::string provenance);

/// Check sum_i c_i f(n+i) = 0 exactly for n in [n_from, n_to].
RecurrenceReport annihilates(const CharPoly& p, const Sequence& f, std::string seq_desc,
                             long long n_from, long long n_to);

/// Eq. (25)-style pointwise check:
/// z * sum_{j=0}^m (-1)^j C(m,j) A_{n+m-j}(1,m,l,z) = A_n(1,m,l,z).
RecurrenceReport k1_check(long long m, long long l, const Rat& z, long long n_max);

/// L_{2n}+2 = L_n^2; L_{2n+1}+2 = (x+2)(F_{n+1}-F_n)^2;
/// L_{2m}-2 = (x^2-4) F_m^2; (x-2)(L_{2m+1}-2) = (L_{m+1}-L_m)^2 — all at
/// s = -1, as exact UPoly identities, for indices 1..m_max.
std::vector<IdentityReport> factor_identities(long long m_max);

/// The Lucas-operator instance on binomials:
/// sum_j C(m-j,j) * m/(m-j) * (-1)^j * C(x0+m-2j, r-j) = C(x0, r-m) + C(x0, r).
bool operator_identity_check(long long m, long long x0, long long r);

/// One term c * x^j (1+x)^(i*m - k*j) of an annihilating family.
struct FamilyTerm {
    Int c;
    long long j;
    long long i;
};

/// The family realizing the root-of-unity vanishing identity: the p_i
/// expansion terms at (x+1, -x), plus the constants. Symbolically sums to
/// zero in Z[x] (precondition of the pointwise lemma).
std::vector<FamilyTerm> eq36_family(int k, long long m);
/// The binomial family behind the k = 1 recurrence.
std::vector<FamilyTerm> eq25_family(long long m);

/// Verify the family is admissible (sums to zero in Z[x] with all exponents
/// nonnegative), then check sum_j c_j z^(i_j) A_{n+i_j*m-k*j} = 0 pointwise.
RecurrenceReport lemma2_check(const std::vector<FamilyTerm>& family, int k, long long m,
                              long long l, const Rat& z, long long n_max);

}  // namespace fibrec

#endif
