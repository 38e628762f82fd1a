#ifndef FIBREC_CYCLOTOMIC_HPP
#define FIBREC_CYCLOTOMIC_HPP

#include "fibrec/ints.hpp"
#include "fibrec/mpoly.hpp"
#include "fibrec/upoly.hpp"

#include <stdexcept>
#include <vector>

namespace fibrec {

/// m-th cyclotomic polynomial over Int, computed by exact division of
/// t^m - 1 by the product of the lower cyclotomics Phi_d, d | m, d < m.
UPoly<Int> cyclotomic_poly(int m);

/// Z[t]/Phi_m(t) in the power basis 1, t, ..., t^(phi(m)-1); t is the
/// class of a primitive m-th root of unity, so t^m = 1. Elements are plain
/// coefficient vectors; the ring object carries the modulus. The element
/// coefficient type C may be Int or MPoly.
class CycloRing {
public:
    explicit CycloRing(int m);

    int modulus() const { return m_; }
    int degree() const { return static_cast<int>(phi_.degree()); }
    const UPoly<Int>& phi() const { return phi_; }

    template <class C>
    using Elt = std::vector<C>;

    template <class C>
    Elt<C> zero() const {
        return Elt<C>(static_cast<size_t>(degree()), C());
    }

    /// The class of t^j (j taken mod m; negative j allowed).
    Elt<Int> root_power(long long j) const;

    template <class C>
    Elt<C> from_scalar(const C& c) const {
        auto e = zero<C>();
        e[0] = c;
        return e;
    }

    template <class C>
    Elt<C> add(Elt<C> a, const Elt<C>& b) const {
        for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i];
        return a;
    }

    template <class C>
    Elt<C> sub(Elt<C> a, const Elt<C>& b) const {
        for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] - b[i];
        return a;
    }

    template <class C>
    Elt<C> scalar_mul(Elt<C> a, const C& s) const {
        for (auto& x : a) x = x * s;
        return a;
    }

    /// Full ring product: convolve in t, reduce mod Phi_m (monic, so the
    /// reduction stays in the coefficient ring).
    template <class C>
    Elt<C> mul(const Elt<C>& a, const Elt<C>& b) const {
        size_t d = a.size();
        std::vector<C> conv(2 * d - 1, C());
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j)
                conv[i + j] = conv[i + j] + a[i] * b[j];
        reduce(conv);
        conv.resize(d);
        return conv;
    }

    /// Multiply by the root of unity t^j.
    template <class C>
    Elt<C> mul_root(const Elt<C>& a, long long j) const {
        long long jm = ((j % m_) + m_) % m_;
        size_t d = a.size();
        std::vector<C> v(d + static_cast<size_t>(jm), C());
        for (size_t i = 0; i < d; ++i) v[i + static_cast<size_t>(jm)] = a[i];
        reduce(v);
        v.resize(d);
        return v;
    }

    /// Mixed product with an Int-coordinate element (e.g. a root power).
    template <class C>
    Elt<C> mul_int(const Elt<C>& a, const Elt<Int>& b) const {
        size_t d = a.size();
        std::vector<C> conv(2 * d - 1, C());
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j)
                if (b[j] != 0) conv[i + j] = conv[i + j] + a[i] * b[j];
        reduce(conv);
        conv.resize(d);
        return conv;
    }

    /// True iff the element lies in the base ring (all non-constant
    /// power-basis coordinates vanish).
    template <class C>
    bool is_rational(const Elt<C>& a) const {
        for (size_t i = 1; i < a.size(); ++i)
            if (!coeff_is_zero(a[i])) return false;
        return true;
    }

    /// Base-ring value of a rational element; hard error otherwise (a
    /// surviving omega-dependence in a Galois-invariant expression is a bug).
    template <class C>
    C rational_part(const Elt<C>& a) const {
        if (!is_rational(a))
            throw std::logic_error("CycloRing: element is not Galois-invariant");
        return a[0];
    }

private:
    // In-place reduction of a t-polynomial of any length mod Phi_m.
    template <class C>
    void reduce(std::vector<C>& v) const {
        size_t d = static_cast<size_t>(degree());
        if (v.size() < d) v.resize(d, C());
        for (size_t i = v.size(); i-- > d;) {
            if (coeff_is_zero(v[i])) continue;
            C c = v[i];
            v[i] = C();
            for (size_t j = 0; j < d; ++j)
                v[i - d + j] = v[i - d + j] - c * phi_.coeff(static_cast<long long>(j));
        }
    }

    int m_;
    UPoly<Int> phi_;
};

}  // namespace fibrec

#endif
