#include "fibrec/conjlab.hpp"

#include "fibrec/symfun.hpp"

#include <stdexcept>

namespace fibrec {

namespace {

// Rational prefactor num(m)/den(m) times a binomial C(m+a, b); the binomial
// uses the standard vanishing convention. A zero denominator is a pole even
// when the binomial factor vanishes too.
std::function<std::optional<Rat>(long long)> rational_times_binom(
    std::function<Int(long long)> num, std::function<Int(long long)> den, long long top_off,
    long long bottom) {
    return [num = std::move(num), den = std::move(den), top_off, bottom](
               long long m) -> std::optional<Rat> {
        Int d = den(m);
        if (d == 0) return std::nullopt;
        return Rat(num(m)) / Rat(d) * Rat(binom(m + top_off, bottom));
    };
}

std::function<std::optional<Rat>(long long)> plain(std::function<Int(long long)> value) {
    return [value = std::move(value)](long long m) -> std::optional<Rat> {
        return Rat(value(m));
    };
}

}  // namespace

Int extract_a(long long m_arg, long long j) {
    if (m_arg < 0) throw std::domain_error("extract_a: m_arg must be nonnegative");
    long long ex = 2 * m_arg - 4 * j;
    if (j < 0 || ex < 0) return 0;  // outside the support window
    MPoly p = p_sym(2, m_arg, 4);
    return p.coeff({static_cast<int>(ex), static_cast<int>(j)});
}

std::vector<ConjFormula> conjectured_formulas() {
    std::vector<ConjFormula> fs;
    fs.push_back({"a(4m,4,2m)", 0, [](long long m) { return 4 * m; },
                  [](long long m) { return 2 * m; }, plain([](long long) { return Int(-6); })});
    fs.push_back({"a(4m,4,2m-1)", 1, [](long long m) { return 4 * m; },
                  [](long long m) { return 2 * m - 1; },
                  rational_times_binom([](long long m) { return Int(16 * m); },
                                       [](long long m) { return Int(m - 2); }, 1, 4)});
    fs.push_back({"a(4m,4,2m-2)", 1, [](long long m) { return 4 * m; },
                  [](long long m) { return 2 * m - 2; },
                  rational_times_binom(
                      [](long long m) { return Int(-16 * m) * (4 * m * m - 15); },
                      [](long long m) { return Int(m + 3) * (m - 3) * (m - 4); }, 3, 8)});
    fs.push_back({"a(4m,4,2m-3)", 2, [](long long m) { return 4 * m; },
                  [](long long m) { return 2 * m - 3; },
                  rational_times_binom(
                      [](long long m) { return Int(32 * m) * (8 * m * m - 35); },
                      [](long long m) { return Int(m - 5) * (m - 6) * (m - 7); }, 4, 12)});

    fs.push_back({"a(4m+2,4,2m+1)", 0, [](long long m) { return 4 * m + 2; },
                  [](long long m) { return 2 * m + 1; }, plain([](long long) { return Int(2); })});
    fs.push_back({"a(4m+2,4,2m)", 0, [](long long m) { return 4 * m + 2; },
                  [](long long m) { return 2 * m; },
                  rational_times_binom(
                      [](long long m) { return -Int(4 * m + 2) * (4 * m + 2); },
                      [](long long m) { return Int(m - 1) * (m - 2); }, 1, 4)});
    fs.push_back({"a(4m+2,4,2m-1)", 1, [](long long m) { return 4 * m + 2; },
                  [](long long m) { return 2 * m - 1; },
                  rational_times_binom(
                      [](long long m) { return Int(4) * (4 * m + 2) * (4 * m + 2); },
                      [](long long m) { return Int(m - 3) * (m - 4); }, 3, 8)});
    fs.push_back({"a(4m+2,4,2m-2)", 1, [](long long m) { return 4 * m + 2; },
                  [](long long m) { return 2 * m - 2; },
                  rational_times_binom(
                      [](long long m) {
                          return Int(2) * (4 * m + 2) * (4 * m + 2) * (8 * m * m + 8 * m - 105);
                      },
                      [](long long m) { return Int(m - 4) * (m - 5) * (m - 6) * (m - 7); }, 4,
                      12)});

    fs.push_back({"a(4m+1,4,2m)", 0, [](long long m) { return 4 * m + 1; },
                  [](long long m) { return 2 * m; },
                  plain([](long long m) { return -Int(m) * (4 * m + 1); })});
    fs.push_back({"a(4m+1,4,2m-1)", 1, [](long long m) { return 4 * m + 1; },
                  [](long long m) { return 2 * m - 1; },
                  rational_times_binom(
                      [](long long m) { return Int(2) * (4 * m + 1) * (4 * m - 3); },
                      [](long long m) { return Int(m - 2) * (m - 3); }, 2, 6)});
    fs.push_back({"a(4m+1,4,2m-2)", 1, [](long long m) { return 4 * m + 1; },
                  [](long long m) { return 2 * m - 2; },
                  rational_times_binom(
                      [](long long m) { return -Int(8) * (4 * m + 1) * (4 * m * m + 9 * m - 10); },
                      [](long long m) { return Int(m - 4) * (m - 5) * (m - 6); }, 3, 10)});

    fs.push_back({"a(4m+3,4,2m+1)", 0, [](long long m) { return 4 * m + 3; },
                  [](long long m) { return 2 * m + 1; },
                  plain([](long long m) { return Int(m + 1) * (4 * m + 3); })});
    fs.push_back({"a(4m+3,4,2m)", 0, [](long long m) { return 4 * m + 3; },
                  [](long long m) { return 2 * m; },
                  rational_times_binom(
                      [](long long m) { return -Int(2) * (4 * m + 3) * (4 * m + 7); },
                      [](long long m) { return Int(m - 2) * (m - 3); }, 2, 6)});
    fs.push_back({"a(4m+3,4,2m-1)", 1, [](long long m) { return 4 * m + 3; },
                  [](long long m) { return 2 * m - 1; },
                  rational_times_binom(
                      [](long long m) {
                          return Int(8) * (m + 4) * (4 * m + 3) * (4 * m * m - m - 15);
                      },
                      [](long long m) { return Int(m - 3) * (m - 4) * (m - 5) * (m - 6); }, 3,
                      10)});
    return fs;
}

std::vector<ConjReport> check_conjectures(long long m_max) {
    if (m_max < 1) throw std::domain_error("check_conjectures: m_max must be >= 1");
    std::vector<ConjReport> reports;
    for (const auto& formula : conjectured_formulas()) {
        ConjReport rep;
        rep.formula = formula.name;
        for (long long m = formula.m_start; m <= m_max; ++m) {
            ConjEntry entry;
            entry.m = m;
            Int actual = extract_a(formula.m_arg(m), formula.j_of(m));
            entry.actual = actual.str();
            auto predicted = formula.predict(m);
            if (!predicted) {
                entry.predicted = "pole";
                entry.skipped_at_pole = true;
            } else {
                entry.predicted = predicted->str();
                entry.match = (*predicted == Rat(actual));
            }
            rep.entries.push_back(std::move(entry));
        }
        // Contiguity: once the formula starts matching it must keep matching
        // (poles excluded) through m_max.
        std::optional<long long> first_match;
        bool gap = false;
        for (const auto& e : rep.entries) {
            if (e.skipped_at_pole) continue;
            if (e.match && !first_match) first_match = e.m;
            if (!e.match && first_match) gap = true;
        }
        rep.tail_from = first_match;
        rep.contiguous_tail = first_match.has_value() && !gap;
        reports.push_back(std::move(rep));
    }
    return reports;
}

void verify_extraction_roundtrip(long long m_arg_max) {
    const VarList kXS = {"x", "s"};
    for (long long m_arg = 0; m_arg <= m_arg_max; ++m_arg) {
        MPoly truth = p_sym(2, m_arg, 4);
        MPoly rebuilt = MPoly::constant(0, kXS);
        // Even m_arg: terms s^j x^(4t); odd: s^j x^(4t+2). Both are covered by
        // scanning every j in the support window.
        for (long long j = 0; 4 * j <= 2 * m_arg; ++j) {
            Int c = extract_a(m_arg, j);
            if (c != 0)
                rebuilt += MPoly::monomial(c, {static_cast<int>(2 * m_arg - 4 * j),
                                               static_cast<int>(j)}, kXS);
        }
        if (truth != rebuilt)
            throw std::logic_error("conjlab: extraction round-trip failed at m_arg = " +
                                   std::to_string(m_arg));
    }
}

}  // namespace fibrec
