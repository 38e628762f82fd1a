#include "fibrec/binsum.hpp"

#include <stdexcept>

namespace fibrec {

Rat a_sum(long long n, const SumSpec& spec) {
    if (n < 0) throw std::domain_error("a_sum: n must be nonnegative");
    if (spec.k < 1 || spec.m < 1) throw std::domain_error("a_sum: need k >= 1, m >= 1");
    Int h_lo = ceil_div(Int(-n - spec.l), Int(spec.m));
    Int h_hi = floor_div(Int(spec.k * (n + 1) - 1 - n - spec.l), Int(spec.m));
    Rat sum = 0;
    for (Int h = h_lo; h <= h_hi; ++h) {
        Int r = floor_div(Int(n + spec.m * h + spec.l), Int(spec.k));
        Int c = binom(n, r);
        if (c != 0) sum += Rat(c) * rat_pow(spec.z, h.convert_to<long long>());
    }
    return sum;
}

std::vector<Rat> a_row(const SumSpec& spec, long long n_max) {
    if (n_max < 0) throw std::domain_error("a_row: n_max must be nonnegative");
    std::vector<Rat> row;
    row.reserve(static_cast<size_t>(n_max) + 1);
    for (long long n = 0; n <= n_max; ++n) row.push_back(a_sum(n, spec));
    return row;
}

Int strip_paths(long long n, long long m) {
    if (n < 0 || m < 3) throw std::domain_error("strip_paths: need n >= 0, m >= 3");
    long long y_lo = -((m - 1) / 2), y_hi = (m - 2) / 2;
    // With the step counts fixed, the endpoint is forced: 0 for even n, -1 for odd.
    long long y_end = (n % 2 == 0) ? 0 : -1;
    long long width = y_hi - y_lo + 1;
    std::vector<Int> ways(static_cast<size_t>(width), 0);
    if (0 < y_lo || 0 > y_hi) return 0;
    ways[static_cast<size_t>(-y_lo)] = 1;
    for (long long step = 0; step < n; ++step) {
        std::vector<Int> next(static_cast<size_t>(width), 0);
        for (long long i = 0; i < width; ++i) {
            if (ways[static_cast<size_t>(i)] == 0) continue;
            if (i + 1 < width) next[static_cast<size_t>(i + 1)] += ways[static_cast<size_t>(i)];
            if (i - 1 >= 0) next[static_cast<size_t>(i - 1)] += ways[static_cast<size_t>(i)];
        }
        ways = std::move(next);
    }
    if (y_end < y_lo || y_end > y_hi) return 0;
    return ways[static_cast<size_t>(y_end - y_lo)];
}

Int cyclic_walks(long long length, long long nodes, bool closed) {
    if (length < 0 || nodes < 3) throw std::domain_error("cyclic_walks: need length >= 0, nodes >= 3");
    std::vector<Int> v(static_cast<size_t>(nodes), 0);
    v[0] = 1;
    for (long long step = 0; step < length; ++step) {
        std::vector<Int> next(static_cast<size_t>(nodes), 0);
        for (long long i = 0; i < nodes; ++i) {
            if (v[static_cast<size_t>(i)] == 0) continue;
            next[static_cast<size_t>((i + 1) % nodes)] += v[static_cast<size_t>(i)];
            next[static_cast<size_t>((i + nodes - 1) % nodes)] += v[static_cast<size_t>(i)];
        }
        v = std::move(next);
    }
    return v[closed ? 0 : 1];
}

}  // namespace fibrec
