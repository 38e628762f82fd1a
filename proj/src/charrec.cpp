#include "fibrec/charrec.hpp"

#include "fibrec/fibpoly.hpp"

#include <stdexcept>

namespace fibrec {

namespace {

// Family polynomial at s = -1 as a dense polynomial in t.
UPoly<Int> at_s_minus1(const MPoly& p, const std::string& var) {
    const VarList vt = {var};
    MPoly q = p.substituted({{"x", MPoly::variable(var, vt)},
                             {"s", MPoly::constant(-1, vt)}});
    return to_upoly(q, var);
}

}  // namespace

CharPoly charpoly_k2(long long m, const Rat& z) {
    if (m < 1) throw std::domain_error("charpoly_k2: m must be >= 1");
    UPoly<Rat> lm = to_rat_poly(at_s_minus1(lucas(m), "t"));
    UPoly<Rat> p = UPoly<Rat>::constant("t", Rat(1) + z * z) - lm * z;
    return {p, "thm1(m=" + std::to_string(m) + ",z=" + z.str() + ")"};
}

CharPoly charpoly_general(int k, long long m, const Rat& z) {
    if (k < 2 || m < 1) throw std::domain_error("charpoly_general: need k >= 2, m >= 1");
    Rat head = 1;
    Rat zk = rat_pow(z, k);
    head += ((1LL * k * (m - 1)) % 2 == 0) ? zk : -zk;
    UPoly<Rat> p = UPoly<Rat>::constant("t", head);
    Rat zi = 1;
    for (int i = 1; i <= k - 1; ++i) {
        zi *= z;
        p = p - to_rat_poly(at_s_minus1(p_sym(i, m, k), "t")) * zi;
    }
    return {p, "thm3(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ",z=" + z.str() + ")"};
}

CharPoly charpoly_simple(long long m, Parity parity, int z_sign) {
    if (m < 1) throw std::domain_error("charpoly_simple: m must be >= 1");
    if (z_sign != 1 && z_sign != -1) throw std::domain_error("charpoly_simple: z_sign must be +-1");
    UPoly<Int> p("t");
    std::string tag;
    if (parity == Parity::Even && z_sign == -1) {
        p = at_s_minus1(lucas(m), "t");
        tag = "thm4-even";
    } else if (parity == Parity::Odd && z_sign == -1) {
        p = at_s_minus1(fib(m + 1), "t") - at_s_minus1(fib(m), "t");
        tag = "thm4-odd";
    } else if (parity == Parity::Even && z_sign == 1) {
        UPoly<Int> t_minus_2("t", {Int(-2), Int(1)});
        p = t_minus_2 * at_s_minus1(fib(m), "t");
        tag = "thm5-even";
    } else {
        p = at_s_minus1(lucas(m + 1), "t") - at_s_minus1(lucas(m), "t");
        tag = "thm5-odd";
    }
    return {to_rat_poly(p), tag + "(m=" + std::to_string(m) + ")"};
}

UPoly<MPoly> subseq_charpoly(int k, long long m) {
    if (k < 2 || m < 1) throw std::domain_error("subseq_charpoly: need k >= 2, m >= 1");
    std::vector<MPoly> coeffs(static_cast<size_t>(k) + 1, MPoly());
    for (int i = 0; i <= k; ++i) {
        MPoly e = elem_sym(i, k, m);
        coeffs[static_cast<size_t>(k - i)] = (i % 2 == 0) ? e : -e;
    }
    return UPoly<MPoly>("t", std::move(coeffs));
}

CharPoly charpoly_at(const UPoly<MPoly>& p, const Rat& x0, const Rat& s0, std::string provenance) {
    std::vector<Rat> c;
    for (long long i = 0; i <= p.degree(); ++i)
        c.push_back(p.coeff(i).evaluated({{"x", x0}, {"s", s0}}));
    return {UPoly<Rat>(p.var(), std::move(c)), std::move(provenance)};
}

RecurrenceReport annihilates(const CharPoly& p, const Sequence& f, std::string seq_desc,
                             long long n_from, long long n_to) {
    if (p.poly.is_zero()) throw std::domain_error("annihilates: zero polynomial");
    RecurrenceReport rep;
    rep.charpoly = p.provenance + ": " + p.poly.str();
    rep.sequence = std::move(seq_desc);
    rep.n_from = n_from;
    rep.n_to = n_to;
    long long deg = p.poly.degree();
    long long last_bad = n_from - 1;
    for (long long n = n_from; n <= n_to; ++n) {
        Rat residual = 0;
        for (long long i = 0; i <= deg; ++i) {
            Rat c = p.poly.coeff(i);
            if (c != 0) residual += c * f(n + i);
        }
        if (residual != 0) {
            last_bad = n;
            if (!rep.counterexample)
                rep.counterexample = {n, residual.str()};
        }
    }
    rep.pass = last_bad < n_to;  // some all-zero tail exists inside the range
    rep.n0 = last_bad + 1;
    return rep;
}

RecurrenceReport k1_check(long long m, long long l, const Rat& z, long long n_max) {
    if (m < 1) throw std::domain_error("k1_check: m must be >= 1");
    RecurrenceReport rep;
    rep.charpoly = "eq25(m=" + std::to_string(m) + ")";
    rep.sequence = "A(1," + std::to_string(m) + "," + std::to_string(l) + "," + z.str() + ")";
    rep.n_from = 0;
    rep.n_to = n_max;
    rep.pass = true;
    rep.n0 = 0;
    SumSpec spec{1, m, l, z};
    for (long long n = 0; n <= n_max; ++n) {
        Rat lhs = 0;
        for (long long j = 0; j <= m; ++j) {
            Rat term = Rat(binom(m, j)) * a_sum(n + m - j, spec);
            lhs += (j % 2 == 0) ? term : -term;
        }
        Rat residual = z * lhs - a_sum(n, spec);
        if (residual != 0) {
            rep.pass = false;
            rep.counterexample = {n, residual.str()};
            break;
        }
    }
    return rep;
}

std::vector<IdentityReport> factor_identities(long long m_max) {
    if (m_max < 1) throw std::domain_error("factor_identities: m_max must be >= 1");
    std::vector<IdentityReport> out;
    auto push = [&](const std::string& name, const UPoly<Int>& lhs, const UPoly<Int>& rhs) {
        IdentityReport rep;
        rep.name = name;
        rep.pass = lhs == rhs;
        rep.residual = (lhs - rhs).str();
        out.push_back(std::move(rep));
    };
    UPoly<Int> two = UPoly<Int>::constant("x", 2);
    UPoly<Int> x_plus_2("x", {Int(2), Int(1)});
    UPoly<Int> x_minus_2("x", {Int(-2), Int(1)});
    UPoly<Int> x2_minus_4("x", {Int(-4), Int(0), Int(1)});
    for (long long n = 1; n <= m_max; ++n) {
        UPoly<Int> ln = at_s_minus1(lucas(n), "x");
        UPoly<Int> ln1 = at_s_minus1(lucas(n + 1), "x");
        UPoly<Int> fn = at_s_minus1(fib(n), "x");
        UPoly<Int> fn1 = at_s_minus1(fib(n + 1), "x");
        UPoly<Int> dF = fn1 - fn;
        UPoly<Int> dL = ln1 - ln;
        push("eq45(n=" + std::to_string(n) + ")", at_s_minus1(lucas(2 * n), "x") + two, ln * ln);
        push("eq46(n=" + std::to_string(n) + ")", at_s_minus1(lucas(2 * n + 1), "x") + two,
             x_plus_2 * (dF * dF));
        push("eq56(m=" + std::to_string(n) + ")", at_s_minus1(lucas(2 * n), "x") - two,
             x2_minus_4 * (fn * fn));
        push("eq57(m=" + std::to_string(n) + ")",
             x_minus_2 * (at_s_minus1(lucas(2 * n + 1), "x") - two), dL * dL);
    }
    return out;
}

bool operator_identity_check(long long m, long long x0, long long r) {
    if (m < 1 || x0 < 0) throw std::domain_error("operator_identity_check: need m >= 1, x0 >= 0");
    Rat lhs = 0;
    for (long long j = 0; j <= m / 2; ++j) {
        Rat coeff = Rat(binom(m - j, j)) * Rat(m, m - j);
        Rat term = coeff * Rat(binom(x0 + m - 2 * j, r - j));
        lhs += (j % 2 == 0) ? term : -term;
    }
    Rat rhs = Rat(binom(x0, r - m)) + Rat(binom(x0, r));
    return lhs == rhs;
}

std::vector<FamilyTerm> eq36_family(int k, long long m) {
    if (k < 2 || m < 1) throw std::domain_error("eq36_family: need k >= 2, m >= 1");
    std::vector<FamilyTerm> family;
    family.push_back({Int(-1), 0, 0});  // the constant -1
    for (int i = 1; i <= k - 1; ++i) {
        // p_i(m,k,x+1,-x) = sum_j a(m,k,j) (-x)^j (x+1)^(im-kj)
        MPoly p = p_sym(i, m, k);
        for (const auto& [e, c] : p.terms()) {
            long long j = e[1];
            family.push_back({(j % 2 == 0) ? c : -c, j, i});
        }
    }
    // -(-1)^(k(m-1)) x^m, written as x^j (1+x)^(i*m-k*j) with j = m, i = k.
    Int tail = ((1LL * k * (m - 1)) % 2 == 0) ? Int(-1) : Int(1);
    family.push_back({tail, m, k});
    return family;
}

std::vector<FamilyTerm> eq25_family(long long m) {
    if (m < 1) throw std::domain_error("eq25_family: m must be >= 1");
    std::vector<FamilyTerm> family;
    family.push_back({Int(-1), 0, 0});
    for (long long j = 0; j <= m; ++j) {
        Int c = binom(m, j);
        family.push_back({(j % 2 == 0) ? c : -c, j, 1});
    }
    return family;
}

RecurrenceReport lemma2_check(const std::vector<FamilyTerm>& family, int k, long long m,
                              long long l, const Rat& z, long long n_max) {
    // Precondition: sum_j c_j x^j (1+x)^(i_j*m - k*j) = 0 in Z[x].
    const VarList vx = {"x"};
    const MPoly x = MPoly::variable("x", vx);
    const MPoly xp1 = x + MPoly::constant(1, vx);
    MPoly sym = MPoly::constant(0, vx);
    for (const auto& term : family) {
        long long e = term.i * m - k * term.j;
        if (e < 0) throw std::invalid_argument("lemma2_check: negative exponent i*m - k*j");
        MPoly t = MPoly::constant(term.c, vx);
        for (long long p = 0; p < term.j; ++p) t = t * x;
        for (long long p = 0; p < e; ++p) t = t * xp1;
        sym += t;
    }
    if (!sym.is_zero())
        throw std::invalid_argument("lemma2_check: family fails the symbolic precondition: " +
                                    sym.str());
    RecurrenceReport rep;
    rep.charpoly = "lemma2(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
    rep.sequence = "A(" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(l) +
                   "," + z.str() + ")";
    rep.n_from = 0;
    rep.n_to = n_max;
    rep.pass = true;
    rep.n0 = 0;
    SumSpec spec{k, m, l, z};
    for (long long n = 0; n <= n_max; ++n) {
        Rat residual = 0;
        for (const auto& term : family) {
            long long shift = term.i * m - k * term.j;
            residual += Rat(term.c) * rat_pow(z, term.i) * a_sum(n + shift, spec);
        }
        if (residual != 0) {
            rep.pass = false;
            rep.counterexample = {n, residual.str()};
            break;
        }
    }
    return rep;
}

}  // namespace fibrec
