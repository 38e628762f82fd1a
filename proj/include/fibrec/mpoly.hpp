#ifndef FIBREC_MPOLY_HPP
#define FIBREC_MPOLY_HPP

#include "fibrec/ints.hpp"

#include <map>
#include <string>
#include <vector>

namespace fibrec {

using VarList = std::vector<std::string>;

/// Sparse multivariate polynomial with Int coefficients over an ordered
/// list of named variables. Zero coefficients are never stored; exponents
/// are nonnegative. Binary operations require operands over the same
/// variable list, except that a constant over the empty list is promoted
/// implicitly; anything else must be aligned explicitly (aligned_to).
class MPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Int>;

    MPoly() = default;  // zero over the empty variable list
    explicit MPoly(VarList vars) : vars_(std::move(vars)) {}

    static MPoly constant(const Int& c, VarList vars = {});
    static MPoly variable(const std::string& name, VarList vars);
    static MPoly monomial(const Int& c, Exponents exps, VarList vars);

    const VarList& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of the constant term (exponent vector all zero).
    Int constant_term() const;
    /// Coefficient of a given exponent vector (0 if absent).
    Int coeff(const Exponents& e) const;
    int total_degree() const;  // -1 for the zero polynomial

    /// Reinterpret over a superset variable list (name-based remap).
    MPoly aligned_to(const VarList& vars) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Int& c) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    /// Exact division of every coefficient by d; throws if any is not divisible.
    MPoly div_exact(const Int& d) const;

    /// Ring homomorphism: every variable must be mapped and all images must
    /// share one variable list.
    MPoly substituted(const std::map<std::string, MPoly>& repl) const;
    /// Full evaluation at a rational point (every variable bound).
    Rat evaluated(const std::map<std::string, Rat>& point) const;

    std::string str() const;  // e.g. "x^3 + 2*s*x"

private:
    void insert_term(const Exponents& e, const Int& c);
    // Promotes empty-vars constants; throws on genuine mismatch.
    static void match_vars(MPoly& a, MPoly& b);

    VarList vars_;
    TermMap terms_;
};

inline MPoly operator*(const Int& c, const MPoly& p) { return p * c; }

/// Extend both operands to the union of their variable lists.
std::pair<MPoly, MPoly> align(const MPoly& a, const MPoly& b);

}  // namespace fibrec

#endif
