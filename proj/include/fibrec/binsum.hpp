#ifndef FIBREC_BINSUM_HPP
#define FIBREC_BINSUM_HPP

#include "fibrec/ints.hpp"

#include <vector>

namespace fibrec {

/// Parameters of the binomial sum: sum over h of C(n, floor((n+m*h+l)/k)) * z^h.
struct SumSpec {
    long long k = 2;  // >= 1
    long long m = 5;  // >= 1
    long long l = 0;
    Rat z = -1;
};

/// Exact value of the sum. The support in h is derived analytically:
/// the binomial is nonzero only when 0 <= floor((n+mh+l)/k) <= n, i.e.
/// 0 <= n+mh+l <= k(n+1)-1, giving
///   ceil((-n-l)/m) <= h <= floor((k(n+1)-1-n-l)/m).
Rat a_sum(long long n, const SumSpec& spec);

/// [a_sum(0), ..., a_sum(n_max)].
std::vector<Rat> a_row(const SumSpec& spec, long long n_max);

/// Lattice paths with floor(n/2) up-steps and floor((n+1)/2) down-steps
/// from the origin, confined to -floor((m-1)/2) <= y <= floor((m-2)/2).
/// Realizes A_n(2, m, 0, -1) combinatorially; independent of a_sum.
Int strip_paths(long long n, long long m);

/// Walks on the cycle graph C_nodes from a fixed vertex, counted by
/// adjacency-vector iteration: back to the start (closed) or to a fixed
/// adjacent vertex (open).
Int cyclic_walks(long long length, long long nodes, bool closed);

}  // namespace fibrec

#endif
