#ifndef FIBREC_INTS_HPP
#define FIBREC_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fibrec {

// All arithmetic in this library is exact; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;  // always reduced, denominator > 0

// Floor division with rounding toward -infinity. Requires b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    if (b <= 0) throw std::domain_error("floor_div: divisor must be positive");
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// Ceiling division for b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
    return -floor_div(-a, b);
}

// C(n,r) for n >= 0, with C(n,r) = 0 for r < 0 or r > n.
// Negative upper index is out of contract for everything in this library.
inline Int binom(const Int& n, const Int& r) {
    if (n < 0) throw std::domain_error("binom: negative upper index");
    if (r < 0 || r > n) return 0;
    Int rr = r;
    if (rr > n - rr) rr = n - rr;
    Int result = 1;
    for (Int i = 1; i <= rr; ++i) {
        result *= n - rr + i;
        result /= i;
    }
    return result;
}

// z^h over exact rationals; h may be negative (z must be nonzero then).
inline Rat rat_pow(const Rat& z, long long h) {
    if (h < 0) {
        if (z == 0) throw std::domain_error("rat_pow: zero base, negative exponent");
        return rat_pow(Rat(1) / z, -h);
    }
    Rat result = 1;
    Rat base = z;
    unsigned long long e = static_cast<unsigned long long>(h);
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Coerce a rational known to be integral; hard error otherwise.
inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw std::logic_error("to_int: rational is not an integer: " + r.str());
    return numerator(r);
}

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rat& v) { return v.str(); }

}  // namespace fibrec

#endif
