#include <doctest.h>

#include "fibrec/ints.hpp"
#include "fibrec/mpoly.hpp"
#include "fibrec/upoly.hpp"

#include <random>

using namespace fibrec;

namespace {
const VarList kXS = {"x", "s"};
MPoly mono(long long c, int ex, int es) { return MPoly::monomial(c, {ex, es}, kXS); }
}  // namespace

TEST_CASE("binom basics") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(7, 4) == 35);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(10, 11) == 0);
    CHECK_THROWS_AS(binom(-1, 0), std::domain_error);
}

TEST_CASE("binom Pascal's rule") {
    for (long long n = 1; n <= 60; ++n)
        for (long long r = -2; r <= n + 2; ++r)
            CHECK(binom(n, r) == binom(n - 1, r - 1) + binom(n - 1, r));
}

TEST_CASE("floor_div rounds toward -infinity") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-3, 2) == -2);
    CHECK(floor_div(-4, 2) == -2);
    CHECK_THROWS_AS(floor_div(1, 0), std::domain_error);
    CHECK_THROWS_AS(floor_div(1, -2), std::domain_error);
}

TEST_CASE("floor_div remainder property") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> da(-1000000, 1000000), db(1, 1000);
    for (int i = 0; i < 500; ++i) {
        Int a = da(rng), b = db(rng);
        Int q = floor_div(a, b);
        Int r = a - b * q;
        CHECK(r >= 0);
        CHECK(r < b);
    }
}

TEST_CASE("Rat is canonical") {
    Rat r = Rat(4) / Rat(-6);
    CHECK(numerator(r) == -2);
    CHECK(denominator(r) == 3);
    CHECK(Rat(0) / Rat(7) == Rat(0, 1));
    CHECK(rat_pow(Rat(1, 2), -3) == Rat(8));
}

TEST_CASE("MPoly ring basics") {
    MPoly x = MPoly::variable("x", kXS);
    MPoly s = MPoly::variable("s", kXS);
    CHECK((x + s) * (x - s) == x * x - s * s);
    MPoly p = mono(1, 3, 0) + mono(2, 1, 1);  // x^3 + 2sx
    CHECK(p.substituted({{"x", MPoly()}, {"s", MPoly()}}).is_zero());
    CHECK(p.evaluated({{"x", Rat(1)}, {"s", Rat(1)}}) == 3);
    CHECK(p.coeff({1, 1}) == 2);
    CHECK(p.coeff({2, 0}) == 0);
    CHECK(p.str() == "x^3 + 2*s*x");
}

TEST_CASE("MPoly rejects mismatched variable lists") {
    MPoly a = MPoly::variable("x", {"x", "s"});
    MPoly b = MPoly::variable("y", {"x", "y"});
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    auto [aa, bb] = align(a, b);
    CHECK(aa.vars() == VarList{"x", "s", "y"});
    CHECK((aa + bb).coeff({1, 0, 0}) == 1);
}

TEST_CASE("MPoly constants promote") {
    MPoly x = MPoly::variable("x", kXS);
    CHECK(x - x == MPoly());
    CHECK((MPoly::constant(3) * x).coeff({1, 0}) == 3);
}

TEST_CASE("MPoly multiplication commutative and associative") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> dc(-9, 9), de(0, 8), dt(1, 20);
    auto random_poly = [&] {
        MPoly p(kXS);
        int terms = dt(rng);
        for (int i = 0; i < terms; ++i) p += mono(dc(rng), de(rng), de(rng));
        return p;
    };
    for (int trial = 0; trial < 20; ++trial) {
        MPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("MPoly exact scalar division") {
    MPoly p = mono(6, 2, 0) + mono(-9, 0, 1);
    CHECK(p.div_exact(3) == mono(2, 2, 0) + mono(-3, 0, 1));
    CHECK_THROWS_AS(p.div_exact(4), std::logic_error);
}

TEST_CASE("UPoly basics and exact division") {
    UPoly<Int> a("x", {Int(-1), Int(0), Int(1)});  // x^2 - 1
    UPoly<Int> b("x", {Int(1), Int(1)});           // x + 1
    CHECK(div_exact(a, b) == UPoly<Int>("x", {Int(-1), Int(1)}));
    CHECK_THROWS_AS(div_exact(b, a), std::logic_error);
    UPoly<Rat> ra = to_rat_poly(a), rb = to_rat_poly(b);
    auto [q, r] = divmod(ra, rb);
    CHECK(r.is_zero());
    CHECK(q * rb == ra);
    CHECK(a.degree() == 2);
    CHECK(UPoly<Int>("x").is_zero());
}

TEST_CASE("UPoly leading coefficient invariant") {
    UPoly<Int> p("t", {Int(3), Int(0), Int(0)});
    CHECK(p.degree() == 0);
    CHECK(p.leading() == 3);
}
