#ifndef FIBREC_UPOLY_HPP
#define FIBREC_UPOLY_HPP

#include "fibrec/ints.hpp"
#include "fibrec/mpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibrec {

inline bool coeff_is_zero(const Int& c) { return c == 0; }
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const MPoly& c) { return c.is_zero(); }

inline std::string coeff_str(const Int& c) { return c.str(); }
inline std::string coeff_str(const Rat& c) { return c.str(); }
inline std::string coeff_str(const MPoly& c) { return c.str(); }

/// Dense univariate polynomial in a distinguished variable, constant term
/// first. Coefficients are Int, Rat or MPoly. The coefficient list never
/// ends in a zero (zero polynomial has an empty list).
template <class C>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::string var) : var_(std::move(var)) {}
    UPoly(std::string var, std::vector<C> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) {
        normalize();
    }

    static UPoly constant(std::string var, C value) { return UPoly(std::move(var), {std::move(value)}); }
    static UPoly identity(std::string var) {
        UPoly p(std::move(var));
        p.c_ = {C(0), C(1)};
        return p;
    }

    const std::string& var() const { return var_; }
    const std::vector<C>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    C coeff(long long i) const {
        if (i < 0 || i >= static_cast<long long>(c_.size())) return C();
        return c_[static_cast<size_t>(i)];
    }
    const C& leading() const {
        if (c_.empty()) throw std::logic_error("UPoly::leading: zero polynomial");
        return c_.back();
    }

    UPoly operator-() const {
        UPoly r(var_);
        r.c_.reserve(c_.size());
        for (const auto& x : c_) r.c_.push_back(C() - x);
        return r;
    }
    UPoly operator+(const UPoly& o) const {
        check_var(o);
        UPoly r(var_);
        r.c_.resize(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < c_.size()) r.c_[i] = r.c_[i] + c_[i];
            if (i < o.c_.size()) r.c_[i] = r.c_[i] + o.c_[i];
        }
        r.normalize();
        return r;
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const {
        check_var(o);
        if (is_zero() || o.is_zero()) return UPoly(var_);
        UPoly r(var_);
        r.c_.assign(c_.size() + o.c_.size() - 1, C());
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        r.normalize();
        return r;
    }
    UPoly operator*(const C& s) const {
        UPoly r(var_);
        r.c_.reserve(c_.size());
        for (const auto& x : c_) r.c_.push_back(x * s);
        r.normalize();
        return r;
    }
    bool operator==(const UPoly& o) const { return var_ == o.var_ && c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    /// p * var^n
    UPoly shifted(long long n) const {
        if (is_zero()) return *this;
        UPoly r(var_);
        r.c_.assign(c_.size() + static_cast<size_t>(n), C());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(n)] = c_[i];
        return r;
    }

    /// Truncated product mod var^(n+1), for power-series checks.
    UPoly mul_trunc(const UPoly& o, long long n) const {
        check_var(o);
        UPoly r(var_);
        r.c_.assign(static_cast<size_t>(n) + 1, C());
        for (size_t i = 0; i < c_.size() && i <= static_cast<size_t>(n); ++i)
            for (size_t j = 0; j < o.c_.size() && i + j <= static_cast<size_t>(n); ++j)
                r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        r.normalize();
        return r;
    }

    UPoly truncated(long long n) const {
        UPoly r(var_);
        for (size_t i = 0; i < c_.size() && i <= static_cast<size_t>(n); ++i) r.c_.push_back(c_[i]);
        r.normalize();
        return r;
    }

    template <class X>
    X evaluated(const X& x) const {
        X acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + X(c_[i]);
        return acc;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            if (coeff_is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            std::string cs = coeff_str(c_[i]);
            if (i == 0) {
                os << cs;
            } else {
                if (cs != "1") os << "(" << cs << ")*";
                os << var_;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void check_var(const UPoly& o) const {
        if (var_ != o.var_ && !is_zero() && !o.is_zero())
            throw std::invalid_argument("UPoly: variable mismatch " + var_ + " vs " + o.var_);
    }
    void normalize() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }

    std::string var_ = "t";
    std::vector<C> c_;
};

/// Long division over Rat coefficients.
inline std::pair<UPoly<Rat>, UPoly<Rat>> divmod(UPoly<Rat> a, const UPoly<Rat>& b) {
    if (b.is_zero()) throw std::domain_error("UPoly divmod: zero divisor");
    UPoly<Rat> q(a.var());
    std::vector<Rat> qc;
    if (a.degree() >= b.degree())
        qc.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rat f = a.leading() / b.leading();
        long long sh = a.degree() - b.degree();
        qc[static_cast<size_t>(sh)] = f;
        a = a - (b * f).shifted(sh);
    }
    return {UPoly<Rat>(b.var(), std::move(qc)), a};
}

/// Exact division over Int for monic-enough divisors; throws if any step
/// is not exactly divisible or a remainder survives.
inline UPoly<Int> div_exact(UPoly<Int> a, const UPoly<Int>& b) {
    if (b.is_zero()) throw std::domain_error("UPoly div_exact: zero divisor");
    UPoly<Int> q(a.var());
    std::vector<Int> qc;
    if (a.degree() >= b.degree())
        qc.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Int(0));
    while (!a.is_zero() && a.degree() >= b.degree()) {
        if (a.leading() % b.leading() != 0)
            throw std::logic_error("UPoly div_exact: leading coefficient not divisible");
        Int f = a.leading() / b.leading();
        long long sh = a.degree() - b.degree();
        qc[static_cast<size_t>(sh)] = f;
        a = a - (b * f).shifted(sh);
    }
    if (!a.is_zero()) throw std::logic_error("UPoly div_exact: nonzero remainder");
    return UPoly<Int>(b.var(), std::move(qc));
}

/// View a univariate MPoly as a dense UPoly<Int> in the given variable.
inline UPoly<Int> to_upoly(const MPoly& p, const std::string& var) {
    size_t vi = 0;
    bool found = false;
    for (size_t i = 0; i < p.vars().size(); ++i)
        if (p.vars()[i] == var) { vi = i; found = true; }
    std::vector<Int> c;
    for (const auto& [e, k] : p.terms()) {
        int deg = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            if (found && i == vi) { deg = e[i]; continue; }
            if (e[i] != 0)
                throw std::invalid_argument("to_upoly: polynomial is not univariate in " + var);
        }
        if (static_cast<size_t>(deg) >= c.size()) c.resize(static_cast<size_t>(deg) + 1, Int(0));
        c[static_cast<size_t>(deg)] += k;
    }
    return UPoly<Int>(var, std::move(c));
}

inline UPoly<Rat> to_rat_poly(const UPoly<Int>& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return UPoly<Rat>(p.var(), std::move(c));
}

}  // namespace fibrec

#endif
