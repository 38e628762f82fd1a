#include <CLI11.hpp>
#include <json.hpp>

#include "fibrec/binsum.hpp"
#include "fibrec/charrec.hpp"
#include "fibrec/conjlab.hpp"
#include "fibrec/fibpoly.hpp"
#include "fibrec/oeis.hpp"
#include "fibrec/symfun.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace fibrec;

namespace {

Rat parse_rat(const std::string& text) {
    try {
        return Rat(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError("not a rational number: " + text);
    }
}

// "A..B" or a single "N" (meaning 0..N).
std::pair<long long, long long> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) return {0, std::stoll(text)};
        return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("bad range: " + text);
    }
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    return out;
}

struct Cell {
    std::string id;
    std::string params;
    bool pass = false;
    long long n0 = 0;
    std::string counterexample;  // empty when none
};

json cells_json(const std::vector<Cell>& cells) {
    json arr = json::array();
    for (const auto& c : cells) {
        json j;
        j["id"] = c.id;
        j["params"] = c.params;
        j["pass"] = c.pass;
        j["n0"] = std::to_string(c.n0);
        if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
        arr.push_back(std::move(j));
    }
    return arr;
}

void emit_report(const std::string& suite, const json& parameters, const std::vector<Cell>& cells,
                 const std::string& format, bool with_timestamp) {
    long long passed = 0;
    for (const auto& c : cells) passed += c.pass ? 1 : 0;
    if (format == "csv") {
        std::cout << "id,params,pass,n0,counterexample\n";
        for (const auto& c : cells)
            std::cout << c.id << ",\"" << c.params << "\"," << (c.pass ? "true" : "false") << ","
                      << c.n0 << ",\"" << c.counterexample << "\"\n";
        return;
    }
    if (format == "text") {
        for (const auto& c : cells)
            std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.id << "  " << c.params
                      << (c.counterexample.empty() ? "" : "  [" + c.counterexample + "]") << "\n";
        std::cout << passed << "/" << cells.size() << " cells passed\n";
        return;
    }
    json rep;
    rep["suite"] = suite;
    rep["parameters"] = parameters;
    rep["cells"] = cells_json(cells);
    rep["summary"] = {{"total", std::to_string(cells.size())},
                      {"passed", std::to_string(passed)},
                      {"all_pass", passed == static_cast<long long>(cells.size())}};
    if (with_timestamp) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        rep["timestamp"] =
            std::to_string(std::chrono::duration_cast<std::chrono::seconds>(now).count());
    }
    std::cout << rep.dump(2) << "\n";
}

Cell from_recurrence(const RecurrenceReport& r) {
    Cell c;
    c.id = r.charpoly;
    c.params = r.sequence + " n=" + std::to_string(r.n_from) + ".." + std::to_string(r.n_to);
    c.pass = r.pass;
    c.n0 = r.n0;
    if (r.counterexample)
        c.counterexample = "n=" + std::to_string(r.counterexample->first) + " residual " +
                           r.counterexample->second;
    return c;
}

Cell from_identity(const IdentityReport& r) {
    Cell c;
    c.id = r.name;
    c.params = "";
    c.pass = r.pass;
    if (!r.pass) c.counterexample = "residual " + r.residual;
    return c;
}

const std::vector<Rat>& z_grid() {
    static const std::vector<Rat> zs = {Rat(-1), Rat(1), Rat(2), Rat(1, 2)};
    return zs;
}

void run_thm1(std::vector<Cell>& cells, long long m_max, long long n_max) {
    for (long long m = 1; m <= m_max; ++m)
        for (long long l = 0; l < m; ++l)
            for (const Rat& z : z_grid())
                cells.push_back(from_recurrence(annihilates(
                    charpoly_k2(m, z), [=](long long n) { return a_sum(n, {2, m, l, z}); },
                    "A(2," + std::to_string(m) + "," + std::to_string(l) + "," + z.str() + ")", 0,
                    n_max)));
}

void run_thm3(std::vector<Cell>& cells, long long m_max, long long n_max) {
    for (int k : {3, 4})
        for (long long m = 1; m <= m_max; ++m)
            for (long long l = 0; l < m; ++l)
                for (const Rat& z : z_grid())
                    cells.push_back(from_recurrence(annihilates(
                        charpoly_general(k, m, z),
                        [=](long long n) { return a_sum(n, {k, m, l, z}); },
                        "A(" + std::to_string(k) + "," + std::to_string(m) + "," +
                            std::to_string(l) + "," + z.str() + ")",
                        0, n_max)));
}

void run_thm45(std::vector<Cell>& cells, Parity parity, long long m_max, long long n_max) {
    for (long long m = 1; m <= m_max; ++m)
        for (int z_sign : {-1, 1}) {
            long long mod = (parity == Parity::Even) ? 2 * m : 2 * m + 1;
            for (long long l = -3; l <= 2 * m + 3; ++l)
                cells.push_back(from_recurrence(annihilates(
                    charpoly_simple(m, parity, z_sign),
                    [=](long long n) { return a_sum(n, {2, mod, l, Rat(z_sign)}); },
                    "A(2," + std::to_string(mod) + "," + std::to_string(l) + "," +
                        std::to_string(z_sign) + ")",
                    0, n_max)));
            // The short operator must also divide the full characteristic
            // polynomial with zero remainder.
            auto [q, r] =
                divmod(charpoly_k2(mod, Rat(z_sign)).poly, charpoly_simple(m, parity, z_sign).poly);
            Cell c;
            c.id = "divides(m=" + std::to_string(m) + ",z=" + std::to_string(z_sign) + ")";
            c.params = charpoly_simple(m, parity, z_sign).provenance;
            c.pass = r.is_zero();
            if (!c.pass) c.counterexample = "remainder " + r.str();
            cells.push_back(std::move(c));
        }
}

void run_eq25(std::vector<Cell>& cells, long long m_max, long long n_max) {
    for (long long m = 1; m <= m_max; ++m)
        for (long long l = 0; l < m; ++l)
            for (const Rat& z : z_grid()) cells.push_back(from_recurrence(k1_check(m, l, z, n_max)));
}

void run_eq28(std::vector<Cell>& cells, long long m_max, long long k_max) {
    for (long long m = 2; m <= m_max; ++m)
        for (int k = 1; k <= k_max; ++k) cells.push_back(from_identity(verify_eq28(m, k)));
}

void run_eq36(std::vector<Cell>& cells, long long m_max, long long k_max, long long n_max) {
    for (int k = 2; k <= k_max; ++k)
        for (long long m = 1; m <= m_max; ++m)
            for (const Rat& z : {Rat(-1), Rat(1)})
                cells.push_back(
                    from_recurrence(lemma2_check(eq36_family(k, m), k, m, 0, z, n_max)));
}

void run_factors(std::vector<Cell>& cells, long long m_max) {
    for (const auto& rep : factor_identities(m_max)) cells.push_back(from_identity(rep));
}

void run_subseq(std::vector<Cell>& cells, long long m_max, long long n_max) {
    for (long long m = 1; m <= m_max; ++m) {
        CharPoly q = charpoly_at(subseq_charpoly(3, m), 1, 1,
                                 "q_{" + std::to_string(m) + ",3}(1,1)");
        for (long long r = 0; r < m; ++r)
            cells.push_back(from_recurrence(annihilates(
                q,
                [=](long long n) {
                    return fib_k(m * n + r + 1, 3).evaluated({{"x", Rat(1)}, {"s", Rat(1)}});
                },
                "F3(" + std::to_string(m) + "n+" + std::to_string(r) + "+1)(1,1)", 0, n_max)));
    }
}

void run_dangelo(std::vector<Cell>& cells, long long m_max, long long k_max) {
    for (long long m = 1; m <= m_max; ++m)
        for (int k = 1; k <= k_max; ++k) {
            Cell c;
            c.id = "dangelo(m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")";
            try {
                dangelo_f(m, k);
                c.pass = true;
            } catch (const std::exception& e) {
                c.pass = false;
                c.counterexample = e.what();
            }
            cells.push_back(std::move(c));
        }
}

std::string cache_dir_default() {
    const char* env = std::getenv("FIBREC_OEIS_CACHE");
    return env ? std::string(env) : std::string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations around generalized Fibonacci and Lucas polynomials"};
    app.require_subcommand(1);
    // Let --format / --no-timestamp appear after the subcommand name too.
    app.fallthrough();
    std::string format = "text";
    bool no_timestamp = false;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--no-timestamp", no_timestamp, "Suppress the timestamp field in JSON output");

    // poly
    auto* poly = app.add_subcommand("poly", "Print family polynomials or their values");
    std::string family_name, n_range = "0..10", at_point;
    int poly_k = 2;
    poly->add_option("--family", family_name, "F, L, Fk, Lk, Gk or Hk")->required();
    poly->add_option("--k", poly_k, "Recurrence order for the k-families");
    poly->add_option("--n", n_range, "Index range A..B (or a single upper index)");
    poly->add_option("--at", at_point, "Evaluate at x,s instead of printing coefficients");

    // binsum
    auto* binsum = app.add_subcommand("binsum", "Print a binomial-sum sequence row");
    long long bs_k = 2, bs_m = 1, bs_l = 0, bs_n = 10;
    std::string bs_z = "-1";
    binsum->add_option("--k", bs_k)->required();
    binsum->add_option("--m", bs_m)->required();
    binsum->add_option("--l", bs_l, "Shift l");
    binsum->add_option("--z", bs_z, "Weight z, a rational like -1 or 1/2");
    binsum->add_option("--n", bs_n, "Last index (row runs 0..n)");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    std::string suite;
    long long v_m_max = -1, v_k_max = -1, v_n_max = 40;
    verify->add_option("suite", suite, "thm1 thm3 thm4 thm5 eq25 eq28 eq36 factors subseq dangelo all")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm3", "thm4", "thm5", "eq25", "eq28", "eq36", "factors",
                               "subseq", "dangelo", "all"}));
    verify->add_option("--m-max", v_m_max, "Override the suite's default m bound");
    verify->add_option("--k-max", v_k_max, "Override the suite's default k bound");
    verify->add_option("--n-max", v_n_max, "Sequence index bound for recurrence checks");

    // conjecture
    auto* conjecture = app.add_subcommand("conjecture", "Report conjectured coefficient formulas");
    long long c_m_max = 12;
    conjecture->add_option("--m-max", c_m_max);

    // oeis-check
    auto* oeis = app.add_subcommand("oeis-check", "Compare computed rows against OEIS");
    bool offline = false, refresh = false;
    std::string cache_dir = cache_dir_default();
    oeis->add_flag("--offline", offline, "Use embedded fixtures only, no network");
    oeis->add_flag("--refresh", refresh, "Re-fetch even when cached");
    oeis->add_option("--cache-dir", cache_dir,
                     "B-file cache directory (default from FIBREC_OEIS_CACHE)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*poly) {
            FamilyId id = parse_family(family_name, poly_k);
            auto [from, to] = parse_range(n_range);
            if (!at_point.empty()) {
                auto comma = at_point.find(',');
                if (comma == std::string::npos)
                    throw CLI::ValidationError("--at expects x,s");
                Rat x0 = parse_rat(at_point.substr(0, comma));
                Rat s0 = parse_rat(at_point.substr(comma + 1));
                std::vector<std::string> vals;
                for (long long n = from; n <= to; ++n)
                    vals.push_back(family_at(id, n, x0, s0).str());
                std::cout << join(vals) << "\n";
            } else {
                for (long long n = from; n <= to; ++n)
                    std::cout << family_value(id, n).str() << "\n";
            }
            return 0;
        }
        if (*binsum) {
            SumSpec spec{bs_k, bs_m, bs_l, parse_rat(bs_z)};
            std::vector<std::string> vals;
            for (const Rat& v : a_row(spec, bs_n)) vals.push_back(v.str());
            std::cout << join(vals) << "\n";
            return 0;
        }
        if (*verify) {
            auto bound = [](long long req, long long dflt) { return req >= 0 ? req : dflt; };
            std::vector<Cell> cells;
            json params;
            params["n_max"] = std::to_string(v_n_max);
            bool all = suite == "all";
            if (all || suite == "thm1") run_thm1(cells, bound(v_m_max, 9), v_n_max);
            if (all || suite == "thm3") run_thm3(cells, bound(v_m_max, 7), v_n_max);
            if (all || suite == "thm4") run_thm45(cells, Parity::Even, bound(v_m_max, 6), v_n_max);
            if (all || suite == "thm5") run_thm45(cells, Parity::Odd, bound(v_m_max, 6), v_n_max);
            if (all || suite == "eq25")
                run_eq25(cells, bound(v_m_max, 4), std::min(v_n_max, 20LL));
            if (all || suite == "eq28") run_eq28(cells, bound(v_m_max, 10), bound(v_k_max, 5));
            if (all || suite == "eq36")
                run_eq36(cells, bound(v_m_max, 5), bound(v_k_max, 4), std::min(v_n_max, 25LL));
            if (all || suite == "factors") run_factors(cells, bound(v_m_max, 12));
            if (all || suite == "subseq")
                run_subseq(cells, bound(v_m_max, 6), std::min(v_n_max, 15LL));
            if (all || suite == "dangelo") run_dangelo(cells, bound(v_m_max, 8), bound(v_k_max, 5));
            if (v_m_max >= 0) params["m_max"] = std::to_string(v_m_max);
            if (v_k_max >= 0) params["k_max"] = std::to_string(v_k_max);
            // Reports default to JSON; --format text/csv overrides.
            std::string fmt = app.count("--format") ? format : std::string("json");
            emit_report(suite, params, cells, fmt, !no_timestamp);
            bool all_pass = true;
            for (const auto& c : cells) all_pass = all_pass && c.pass;
            return all_pass ? 0 : 1;
        }
        if (*conjecture) {
            auto reports = check_conjectures(c_m_max);
            verify_extraction_roundtrip(4 * c_m_max + 3);
            if (format == "csv") {
                std::cout << "formula,m,predicted,actual,match,pole\n";
                for (const auto& rep : reports)
                    for (const auto& e : rep.entries)
                        std::cout << "\"" << rep.formula << "\"," << e.m << "," << e.predicted
                                  << "," << e.actual << "," << (e.match ? "true" : "false") << ","
                                  << (e.skipped_at_pole ? "true" : "false") << "\n";
                return 0;
            }
            json rep;
            rep["suite"] = "conjecture";
            rep["parameters"] = {{"m_max", std::to_string(c_m_max)}};
            json cells = json::array();
            long long matching = 0;
            for (const auto& r : reports) {
                json c;
                c["id"] = r.formula;
                c["tail_from"] = r.tail_from ? std::to_string(*r.tail_from) : "none";
                c["contiguous_tail"] = r.contiguous_tail;
                json entries = json::array();
                for (const auto& e : r.entries)
                    entries.push_back({{"m", std::to_string(e.m)},
                                       {"predicted", e.predicted},
                                       {"actual", e.actual},
                                       {"match", e.match},
                                       {"pole", e.skipped_at_pole}});
                c["entries"] = std::move(entries);
                cells.push_back(std::move(c));
                matching += r.contiguous_tail ? 1 : 0;
            }
            rep["cells"] = std::move(cells);
            rep["summary"] = {{"total", std::to_string(reports.size())},
                              {"with_contiguous_tail", std::to_string(matching)}};
            if (!no_timestamp) {
                auto now = std::chrono::system_clock::now().time_since_epoch();
                rep["timestamp"] =
                    std::to_string(std::chrono::duration_cast<std::chrono::seconds>(now).count());
            }
            std::cout << rep.dump(2) << "\n";
            return 0;  // informational, never a failure exit
        }
        if (*oeis) {
            OeisOptions opts;
            opts.offline = offline;
            opts.cache_dir = cache_dir;
            opts.refresh = refresh;
            auto results = oeis_check(opts);
            std::vector<Cell> cells;
            for (const auto& r : results) {
                Cell c;
                c.id = r.id;
                c.params = r.description + " [" + r.source + ", " +
                           std::to_string(r.terms_compared) + " terms" +
                           (r.bfile_offset ? ", offset " + std::to_string(*r.bfile_offset) : "") +
                           "]";
                c.pass = r.prefix_match;
                if (!r.prefix_match)
                    c.counterexample = "first mismatch at " + std::to_string(r.first_mismatch);
                if (!r.note.empty())
                    c.counterexample += (c.counterexample.empty() ? "" : "; ") + r.note;
                cells.push_back(std::move(c));
            }
            json params;
            params["offline"] = offline;
            emit_report("oeis-check", params, cells,
                        app.count("--format") ? format : std::string("json"), !no_timestamp);
            for (const auto& c : cells)
                if (!c.pass) return 1;
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
