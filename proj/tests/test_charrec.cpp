#include <doctest.h>

#include "fibrec/charrec.hpp"
#include "fibrec/fibpoly.hpp"

#include <vector>

using namespace fibrec;

namespace {
Sequence binsum_seq(SumSpec spec) {
    return [spec](long long n) { return a_sum(n, spec); };
}

UPoly<Rat> rp(std::vector<long long> coeffs) {
    std::vector<Rat> c(coeffs.begin(), coeffs.end());
    return UPoly<Rat>("t", std::move(c));
}
}  // namespace

TEST_CASE("charpoly_k2 printed examples") {
    // (5, -1) -> t^5 - 5t^3 + 5t + 2
    CHECK(charpoly_k2(5, -1).poly == rp({2, 5, 0, -5, 0, 1}));
    CHECK(charpoly_k2(1, 1).poly == rp({2, -1}));
    // factors as (t+2)(t^2-t-1)^2
    UPoly<Rat> f = rp({2, 1}) * rp({-1, -1, 1}) * rp({-1, -1, 1});
    CHECK(charpoly_k2(5, -1).poly == f);
}

TEST_CASE("charpoly_general printed examples and k2 consistency") {
    CHECK(charpoly_general(3, 2, -1).poly == rp({2, 2, 1}));
    CHECK(charpoly_general(3, 4, -1).poly == rp({2, -4, 2, 0, 1}));
    CHECK(charpoly_general(3, 5, -1).poly == rp({0, 5, -5, 0, 0, 1}));
    CHECK(charpoly_general(3, 1, -1).poly == rp({0, 1}));
    CHECK(charpoly_general(3, 3, -1).poly == rp({0, 0, 0, 1}));
    for (long long m = 1; m <= 10; ++m)
        for (Rat z : {Rat(-1), Rat(1), Rat(2), Rat(1, 2)})
            CHECK(charpoly_general(2, m, z).poly == charpoly_k2(m, z).poly);
}

TEST_CASE("annihilates basic reporting") {
    auto rep = annihilates(charpoly_k2(5, -1), binsum_seq({2, 5, 2, -1}), "F_n", 0, 40);
    CHECK(rep.pass);
    CHECK(rep.n0 == 0);
    CHECK(!rep.counterexample);
    // t^2 - t - 1 annihilates F_{n+1}.
    CharPoly fibp{rp({-1, -1, 1}), "manual"};
    CHECK(annihilates(fibp, binsum_seq({2, 5, 0, -1}), "F_{n+1}", 0, 40).pass);
    // A failing polynomial reports its first counterexample.
    CharPoly bad{rp({-1, 1}), "manual"};
    auto fail = annihilates(bad, binsum_seq({2, 5, 0, -1}), "F_{n+1}", 0, 20);
    CHECK(!fail.pass);
    REQUIRE(fail.counterexample);
    CHECK(fail.counterexample->first == 1);
}

TEST_CASE("order-2 characteristic polynomials annihilate on the full grid") {
    for (long long m = 1; m <= 9; ++m)
        for (long long l = 0; l < m; ++l)
            for (Rat z : {Rat(-1), Rat(1), Rat(2), Rat(1, 2)}) {
                auto rep = annihilates(charpoly_k2(m, z), binsum_seq({2, m, l, z}), "A", 0, 40);
                CHECK_MESSAGE(rep.pass, rep.charpoly, " vs ", rep.sequence);
                CHECK(rep.n0 == 0);
            }
}

TEST_CASE("order-k characteristic polynomials annihilate on the full grid") {
    for (int k : {3, 4})
        for (long long m = 1; m <= 7; ++m)
            for (long long l = 0; l < m; ++l)
                for (Rat z : {Rat(-1), Rat(1), Rat(2)}) {
                    auto rep = annihilates(charpoly_general(k, m, z),
                                           binsum_seq({k, m, l, z}), "A", 0, 40);
                    CHECK_MESSAGE(rep.pass, rep.charpoly, " vs k=", k, " m=", m, " l=", l);
                    CHECK(rep.n0 == 0);
                }
}

TEST_CASE("short operators annihilate and divide the full polynomial") {
    for (long long m = 1; m <= 6; ++m) {
        for (int z_sign : {-1, 1}) {
            CharPoly even = charpoly_simple(m, Parity::Even, z_sign);
            CharPoly odd = charpoly_simple(m, Parity::Odd, z_sign);
            for (long long l = -3; l <= 2 * m + 3; ++l) {
                auto re = annihilates(even, binsum_seq({2, 2 * m, l, Rat(z_sign)}), "A-even", 0, 40);
                CHECK_MESSAGE(re.pass, re.charpoly, " l=", l);
                CHECK(re.n0 == 0);
                auto ro = annihilates(odd, binsum_seq({2, 2 * m + 1, l, Rat(z_sign)}), "A-odd", 0, 40);
                CHECK_MESSAGE(ro.pass, ro.charpoly, " l=", l);
                CHECK(ro.n0 == 0);
            }
            // The short operator divides the Theorem-1 polynomial exactly.
            auto [qe, re2] = divmod(charpoly_k2(2 * m, Rat(z_sign)).poly, even.poly);
            CHECK(re2.is_zero());
            auto [qo, ro2] = divmod(charpoly_k2(2 * m + 1, Rat(z_sign)).poly, odd.poly);
            CHECK(ro2.is_zero());
        }
    }
}

TEST_CASE("charpoly_simple concrete shapes") {
    // odd, z=-1, m=2: F_3 - F_2 at s=-1 -> t^2 - t - 1
    CHECK(charpoly_simple(2, Parity::Odd, -1).poly == rp({-1, -1, 1}));
    // even, z=-1, m=1: L_1(t,-1) = t
    CHECK(charpoly_simple(1, Parity::Even, -1).poly == rp({0, 1}));
    // even, z=+1, m=2: (t-2) t
    CHECK(charpoly_simple(2, Parity::Even, 1).poly == rp({0, -2, 1}));
}

TEST_CASE("subsequence characteristic polynomials at (1,1)") {
    CHECK(charpoly_at(subseq_charpoly(3, 2), 1, 1, "q_{2,3}").poly == rp({-1, -2, -1, 1}));
    CHECK(charpoly_at(subseq_charpoly(3, 3), 1, 1, "q_{3,3}").poly == rp({-1, 3, -4, 1}));
    // Subsequence sweep: q_{m,3} annihilates (F^{(3)}_{mn+r+1}(1,1))_n.
    for (long long m = 1; m <= 6; ++m) {
        CharPoly q = charpoly_at(subseq_charpoly(3, m), 1, 1, "q");
        for (long long r = 0; r < m; ++r) {
            Sequence f = [m, r](long long n) {
                return fib_k(m * n + r + 1, 3).evaluated({{"x", Rat(1)}, {"s", Rat(1)}});
            };
            auto rep = annihilates(q, f, "narayana-subseq", 0, 15);
            CHECK_MESSAGE(rep.pass, "m=", m, " r=", r);
            CHECK(rep.n0 == 0);
        }
    }
}

TEST_CASE("a_m and b_m prefixes and recurrences") {
    auto a = [](long long m) {
        return to_int(elem_sym(1, 3, m).evaluated({{"x", Rat(1)}, {"s", Rat(1)}}));
    };
    auto b = [](long long m) {
        return to_int(elem_sym(2, 3, m).evaluated({{"x", Rat(1)}, {"s", Rat(1)}}));
    };
    std::vector<long long> a_first = {1, 1, 4, 5, 6, 10, 15, 21};
    std::vector<long long> b_first = {0, -2, 3, 2, -5, 1, 7, -6};
    for (size_t i = 0; i < a_first.size(); ++i) {
        CHECK(a(static_cast<long long>(i) + 1) == a_first[i]);
        CHECK(b(static_cast<long long>(i) + 1) == b_first[i]);
    }
    CHECK(a(0) == 3);
    CHECK(b(0) == 3);
    for (long long m = 3; m <= 30; ++m) {
        CHECK(a(m) == a(m - 1) + a(m - 3));
        CHECK(b(m) == -b(m - 2) + b(m - 3));
    }
}

TEST_CASE("k = 1 recurrence") {
    CHECK(k1_check(1, 0, 1, 20).pass);
    CHECK(k1_check(3, 1, -1, 20).pass);
    CHECK(k1_check(4, 0, Rat(1, 2), 20).pass);
}

TEST_CASE("factor identities") {
    auto reports = factor_identities(12);
    for (const auto& rep : reports) CHECK_MESSAGE(rep.pass, rep.name, " residual ", rep.residual);
    CHECK(reports.size() == 4 * 12);
}

TEST_CASE("operator identity on binomials") {
    CHECK(operator_identity_check(1, 5, 3));
    for (long long n = 0; n <= 30; ++n) CHECK(operator_identity_check(5, n, (n + 2) / 2));
    CHECK(operator_identity_check(4, 10, 7));
    for (long long m = 1; m <= 6; ++m)
        for (long long x0 = 0; x0 <= 12; ++x0)
            for (long long r = -1; r <= x0 + m; ++r) CHECK(operator_identity_check(m, x0, r));
}

TEST_CASE("pointwise annihilating families") {
    CHECK(lemma2_check(eq36_family(3, 4), 3, 4, 0, -1, 30).pass);
    CHECK(lemma2_check(eq36_family(4, 3), 4, 3, 1, 1, 30).pass);
    // k = 1 degenerate case matches the eq-25 check.
    CHECK(lemma2_check(eq25_family(3), 1, 3, 1, -1, 20).pass);
    CHECK(k1_check(3, 1, -1, 20).pass);
    // A family failing the symbolic precondition is rejected.
    std::vector<FamilyTerm> bad = {{Int(1), 0, 0}};
    CHECK_THROWS_AS(lemma2_check(bad, 3, 4, 0, -1, 5), std::invalid_argument);
}
