#ifndef FIBREC_FIBPOLY_HPP
#define FIBREC_FIBPOLY_HPP

#include "fibrec/mpoly.hpp"

#include <string>

namespace fibrec {

/// The polynomial families. Every operation computes the value two
/// independent ways (recurrence and closed-form binomial sum) and asserts
/// they agree before returning; an index-shift bug anywhere surfaces as a
/// hard error, not a wrong answer. All results are in Z[x,s].

enum class FamilyTag { F, L, Fk, Lk, Gk, Hk };

struct FamilyId {
    FamilyTag tag;
    int k = 2;  // F, L imply k = 2
};

FamilyId parse_family(const std::string& name, int k);

/// F_n = x F_{n-1} + s F_{n-2}, F_0 = 0, F_1 = 1.
MPoly fib(long long n);
/// L_n = x L_{n-1} + s L_{n-2}, L_0 = 2, L_1 = x.
MPoly lucas(long long n);
/// Order-k Fibonacci: F_n = x F_{n-1} + s F_{n-k}; F_0 = 0, F_n = x^(n-1) for 0 < n < k.
MPoly fib_k(long long n, int k);
/// Order-k Lucas: same recurrence; L_0 = k, L_n = x^n for 0 < n < k.
MPoly lucas_k(long long n, int k);
/// Reversed family: G_n = s^(k-2) x G_{n-(k-1)} + s^(k-1) G_{n-k};
/// G_0 = 1, G_n = 0 for 0 < n <= k-2, G_{k-1} = s^(k-2) x.
MPoly g_k(long long n, int k);
/// Lucas analog of g_k: H_0 = k, H_n = 0 for 0 < n < k-1, H_{k-1} = (k-1) s^(k-2) x.
MPoly h_k(long long n, int k);

MPoly family_value(const FamilyId& id, long long n);

/// Evaluation helpers at a rational point (x0, s0).
Rat family_at(const FamilyId& id, long long n, const Rat& x0, const Rat& s0);

}  // namespace fibrec

#endif
