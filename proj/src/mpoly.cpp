#include "fibrec/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fibrec {

MPoly MPoly::constant(const Int& c, VarList vars) {
    MPoly p(std::move(vars));
    if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
    return p;
}

MPoly MPoly::variable(const std::string& name, VarList vars) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw std::invalid_argument("MPoly::variable: " + name + " not declared");
    Exponents e(vars.size(), 0);
    e[static_cast<size_t>(it - vars.begin())] = 1;
    return monomial(1, std::move(e), std::move(vars));
}

MPoly MPoly::monomial(const Int& c, Exponents exps, VarList vars) {
    if (exps.size() != vars.size())
        throw std::invalid_argument("MPoly::monomial: exponent/variable arity mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("MPoly::monomial: negative exponent");
    MPoly p(std::move(vars));
    if (c != 0) p.terms_[std::move(exps)] = c;
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Int MPoly::constant_term() const { return coeff(Exponents(vars_.size(), 0)); }

Int MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

MPoly MPoly::aligned_to(const VarList& vars) const {
    std::vector<size_t> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end())
            throw std::invalid_argument("MPoly::aligned_to: target lacks variable " + vars_[i]);
        pos[i] = static_cast<size_t>(it - vars.begin());
    }
    MPoly out(vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_[std::move(ne)] = c;
    }
    return out;
}

void MPoly::match_vars(MPoly& a, MPoly& b) {
    if (a.vars_ == b.vars_) return;
    if (a.vars_.empty() && a.is_constant()) {
        a = MPoly::constant(a.constant_term(), b.vars_);
        return;
    }
    if (b.vars_.empty() && b.is_constant()) {
        b = MPoly::constant(b.constant_term(), a.vars_);
        return;
    }
    throw std::invalid_argument("MPoly: variable-list mismatch; align explicitly");
}

void MPoly::insert_term(const Exponents& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    MPoly a = *this, b = o;
    match_vars(a, b);
    for (const auto& [e, c] : b.terms_) a.insert_term(e, c);
    return *this = std::move(a);
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }
MPoly MPoly::operator+(const MPoly& o) const { MPoly r = *this; r += o; return r; }
MPoly MPoly::operator-(const MPoly& o) const { MPoly r = *this; r -= o; return r; }

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly a = *this, b = o;
    match_vars(a, b);
    MPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.insert_term(e, ca * cb);
        }
    }
    return out;
}

MPoly MPoly::operator*(const Int& c) const {
    if (c == 0) return MPoly(vars_);
    MPoly out(vars_);
    for (const auto& [e, k] : terms_) out.terms_[e] = k * c;
    return out;
}

bool MPoly::operator==(const MPoly& o) const {
    MPoly a = *this, b = o;
    match_vars(a, b);
    return a.terms_ == b.terms_;
}

MPoly MPoly::div_exact(const Int& d) const {
    if (d == 0) throw std::domain_error("MPoly::div_exact: zero divisor");
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (c % d != 0)
            throw std::logic_error("MPoly::div_exact: coefficient " + c.str() +
                                   " not divisible by " + d.str());
        out.terms_[e] = c / d;
    }
    return out;
}

MPoly MPoly::substituted(const std::map<std::string, MPoly>& repl) const {
    VarList target;
    for (const auto& v : vars_) {
        auto it = repl.find(v);
        if (it == repl.end())
            throw std::invalid_argument("MPoly::substituted: variable " + v + " unmapped");
        if (target.empty() && !it->second.vars().empty()) target = it->second.vars();
    }
    MPoly result = MPoly::constant(0, target);
    for (const auto& [e, c] : terms_) {
        MPoly term = MPoly::constant(c, target);
        for (size_t i = 0; i < e.size(); ++i) {
            MPoly img = repl.at(vars_[i]);
            for (int p = 0; p < e[i]; ++p) term = term * img;
        }
        result += term;
    }
    return result;
}

Rat MPoly::evaluated(const std::map<std::string, Rat>& point) const {
    for (const auto& v : vars_)
        if (!point.count(v))
            throw std::invalid_argument("MPoly::evaluated: variable " + v + " unbound");
    Rat result = 0;
    for (const auto& [e, c] : terms_) {
        Rat term(c);
        for (size_t i = 0; i < e.size(); ++i) term *= rat_pow(point.at(vars_[i]), e[i]);
        result += term;
    }
    return result;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    // Highest total degree first, then reverse-lex on exponents.
    std::vector<std::pair<Exponents, Int>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int x : a.first) da += x;
        for (int x : b.first) db += x;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        bool printed = false;
        if (a != 1 || !has_var) { os << a.str(); printed = true; }
        // Variables within a term print in name order (so 2*s*x, not 2*x*s).
        std::vector<size_t> order(e.size());
        for (size_t i = 0; i < e.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t l, size_t r) { return vars_[l] < vars_[r]; });
        for (size_t i : order) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

std::pair<MPoly, MPoly> align(const MPoly& a, const MPoly& b) {
    VarList u = a.vars();
    for (const auto& v : b.vars())
        if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
    return {a.aligned_to(u), b.aligned_to(u)};
}

}  // namespace fibrec
