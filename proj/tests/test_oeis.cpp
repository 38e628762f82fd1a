#include <doctest.h>

#include "fibrec/oeis.hpp"

using namespace fibrec;

TEST_CASE("embedded fixtures match the computed rows offline") {
    OeisOptions opts;
    opts.offline = true;
    auto results = oeis_check(opts);
    CHECK(results.size() == embedded_fixtures().size());
    for (const auto& r : results) {
        CHECK_MESSAGE(r.prefix_match, r.id, " (", r.description, ") first mismatch at index ",
                      r.first_mismatch);
        CHECK(r.source == "embedded");
        CHECK(r.terms_compared > 0);
    }
}

TEST_CASE("fixtures cover the expected ids") {
    const auto& fx = embedded_fixtures();
    CHECK(fx.size() == 15);
    auto has = [&](const std::string& id) {
        for (const auto& f : fx)
            if (f.id == id) return true;
        return false;
    };
    CHECK(has("A000045"));  // Fibonacci
    CHECK(has("A000931"));  // Padovan
    CHECK(has("A001608"));  // Perrin
    CHECK(has("A000930"));  // Narayana
    CHECK(has("A000079"));  // powers of 2
}

TEST_CASE("computed_row extends the embedded prefix consistently") {
    for (const auto& f : embedded_fixtures()) {
        auto row = computed_row(f, static_cast<long long>(f.prefix.size()) + 10);
        REQUIRE(row.size() >= f.prefix.size());
        for (size_t i = 0; i < f.prefix.size(); ++i)
            CHECK_MESSAGE(row[i] == f.prefix[i], f.id, " index ", i);
    }
}

TEST_CASE("parse_b_file handles comments and whitespace") {
    std::string text =
        "# comment line\n"
        "0 1\n"
        "1 1\n"
        "2 2\n"
        "\n"
        "  3   3\n"
        "4 -5\n"
        "# trailing comment\n";
    auto rows = parse_b_file(text);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::pair<long long, Int>{0, Int(1)});
    CHECK(rows[3] == std::pair<long long, Int>{3, Int(3)});
    CHECK(rows[4].second == -5);
    CHECK(parse_b_file("# only comments\n").empty());
    CHECK(parse_b_file("12345 6789").size() == 1);
}
