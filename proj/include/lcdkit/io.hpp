#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lcdkit/classifier.hpp"
#include "lcdkit/gf_matrix.hpp"

namespace lcdkit {

/// Matrix text format: a header line "q=<2|3>" followed by one line per row,
/// each a string of digits with no separators.
std::string format_matrix(const GFMatrix& g);
GFMatrix parse_matrix(std::string_view text);

/// One JSON object per line: {"q":..,"k":..,"n":..,"d":..,"m":[..],"canonical":true}.
void write_jsonl(std::ostream& out, const ClassificationResult& result);
/// Header "q,k,n,d,count" and one data line.
void write_csv(std::ostream& out, const ClassificationResult& result);

struct StoredRecord {
    int q;
    int k;
    int n;
    int d;
    std::vector<int> m;
};

/// Parses line records; blank lines are skipped. Throws ParameterError on malformed input.
std::vector<StoredRecord> read_jsonl(std::istream& in);

/// Parses "4,4,3,0" or "4 4 3 0" into integers.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace lcdkit
