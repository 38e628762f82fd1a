#ifndef FIBREC_OEIS_HPP
#define FIBREC_OEIS_HPP

#include "fibrec/ints.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fibrec {

/// One embedded sequence fixture: the OEIS id, the printed prefix it must
/// match, and a generator description resolved by oeis_check. Fetched
/// b-file terms may extend the prefix, never contradict it.
struct OeisFixture {
    std::string id;            // e.g. "A000045"
    std::string description;   // which computed row this is checked against
    std::vector<Int> prefix;   // printed terms, starting at our n = 0
};

/// The printed table rows and remarks, as immutable fixtures.
const std::vector<OeisFixture>& embedded_fixtures();

/// Parse OEIS b-file text: "index value" pairs, '#' comments ignored.
std::vector<std::pair<long long, Int>> parse_b_file(const std::string& text);

struct OeisComparison {
    std::string id;
    std::string description;
    bool prefix_match = false;       // computed row vs embedded prefix
    long long first_mismatch = -1;   // index of first difference, -1 if none
    std::string source = "embedded"; // or "fetched"
    long long terms_compared = 0;
    std::optional<long long> bfile_offset;  // alignment of the b-file against our n = 0
    std::string note;
};

struct OeisOptions {
    bool offline = true;
    std::string cache_dir;  // empty: no cache
    bool refresh = false;
    long long fetch_terms = 50;
};

/// Compare every fixture's computed row against the embedded prefix and,
/// when online, against the (cached) b-file. Network failure degrades to
/// embedded-only with a note.
std::vector<OeisComparison> oeis_check(const OeisOptions& opts);

/// Compute the row a fixture refers to (exposed for tests).
std::vector<Int> computed_row(const OeisFixture& fixture, long long count);

}  // namespace fibrec

#endif
