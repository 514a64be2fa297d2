#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "lcdkit/gf_matrix.hpp"

namespace lcdkit {

struct OracleClass {
    GFMatrix generator;
    int d;
};

/// Every inequivalent LCD [n,k] code over GF(q) with d-perp >= 2, found by
/// listing generators [I_k | A] with sorted nonzero columns in A and merging
/// them with bruteforce_equiv_oracle. Works only at oracle scale (n <= 8
/// binary, n <= 6 ternary).
std::vector<OracleClass> bruteforce_lcd_classes(int q, int k, int n);

/// Class counts keyed by minimum weight.
std::map<int, std::size_t> bruteforce_lcd_counts(int q, int k, int n);

}  // namespace lcdkit
