#ifndef FIBREC_CONJLAB_HPP
#define FIBREC_CONJLAB_HPP

#include "fibrec/ints.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fibrec {

/// Coefficient a(m_arg, 4, j) of s^j x^(2*m_arg - 4j) in p_2(m_arg, 4, x, s).
/// Indices outside the support window read as 0.
Int extract_a(long long m_arg, long long j);

/// A conjectured closed form for one diagonal of the a(.,4,.) coefficients:
/// the first argument runs over one residue class mod 4 and the coefficient
/// index sits at a fixed offset from the top of the support window. The
/// expression is exact-rational in m, with poles where a denominator
/// polynomial vanishes.
struct ConjFormula {
    std::string name;          // e.g. "a(4m,4,2m-1)"
    long long m_start;         // first m with a nonnegative first argument
    std::function<long long(long long)> m_arg;  // m -> first argument
    std::function<long long(long long)> j_of;   // m -> coefficient index
    // Returns nullopt at a pole of the rational prefactor.
    std::function<std::optional<Rat>(long long)> predict;
};

struct ConjEntry {
    long long m;
    std::string predicted;  // decimal or "pole"
    std::string actual;
    bool match = false;
    bool skipped_at_pole = false;
};

struct ConjReport {
    std::string formula;
    std::vector<ConjEntry> entries;
    // Trailing range [tail_from, m_max] on which every non-pole entry matches;
    // nullopt when even the last entry mismatches.
    std::optional<long long> tail_from;
    bool contiguous_tail = false;  // every match belongs to the trailing range
};

/// All conjectured closed forms, one per diagonal.
std::vector<ConjFormula> conjectured_formulas();

std::vector<ConjReport> check_conjectures(long long m_max);

/// Reassemble p_2(m_arg, 4, x, s) from extract_a via the two displayed
/// shapes (x-exponents 4j for even m_arg, 4j+2 for odd) and compare; a
/// mismatch is a hard error (extraction bug).
void verify_extraction_roundtrip(long long m_arg_max);

}  // namespace fibrec

#endif
