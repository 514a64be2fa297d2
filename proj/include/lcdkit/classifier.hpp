#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lcdkit/code.hpp"
#include "lcdkit/gf_matrix.hpp"

namespace lcdkit {

enum class WeightMode {
    exact,     // minimum weight == d
    at_least,  // minimum weight >= d
};

/// How the search removes symmetry before canonical deduplication.
enum class Normalization {
    // No restriction beyond the multiplicity bounds and rank k.
    none,
    // Unit-vector columns present: m_i >= 1 at every pivot index.
    pivot,
    // Flag normalization: for each b, the multiplicity at pivot e_{b+1} is
    // the largest multiplicity among points outside span(e_1, ..., e_b).
    // Every orbit of the point group contains such a vector.
    flag_max,
};

struct SearchBounds {
    int lo;
    int hi;
    std::vector<std::size_t> pivot_indices;  // 0-based

    bool empty() const noexcept { return hi < lo; }
};

/// Per-coordinate bounds implied by minimum weight >= d:
///   max(0, q d - (q-1) n) <= m_i <= n - (q^{k-1} - 1) / ((q-1) q^{k-2}) * d.
SearchBounds multiplicity_bounds(int q, int k, int n, int d);

struct SearchParams {
    int q;
    int k;
    int n;
    int d;
    WeightMode mode = WeightMode::exact;
    Normalization normalization = Normalization::pivot;
};

using CandidateVisitor = std::function<void(std::span<const int>)>;

/// Visits every multiplicity vector m with sum n inside the bounds, satisfying
/// the normalization, of rank k, LCD, and with minimum weight per `mode`.
void enumerate_candidates(const SearchParams& params, const CandidateVisitor& visit);

/// Lexicographically least vector of the orbit {m o pi : pi in the induced
/// point group}, where (m o pi)_i = m_{pi(i)}.
MultiplicityVector canonical_form(const MultiplicityVector& mv);

bool are_equivalent(const MultiplicityVector& a, const MultiplicityVector& b);

/// Independent equivalence test by enumerating every n x n monomial matrix.
/// Refuses n > 8 (binary) or n > 6 (ternary).
bool bruteforce_equiv_oracle(const GFMatrix& g1, const GFMatrix& g2);

struct ClassificationResult {
    int q;
    int k;
    int n;
    int d;
    WeightMode mode;
    std::vector<MultiplicityVector> representatives;  // canonical, sorted

    std::size_t count() const noexcept { return representatives.size(); }
};

struct ClassifyOptions {
    Normalization normalization = Normalization::flag_max;
    int workers = 1;
};

/// Inequivalent LCD [n,k,d] codes with d-perp >= 2 for
/// (q,k) in {(2,3), (2,4), (3,2), (3,3)}.
ClassificationResult classify(int q, int k, int n, int d, WeightMode mode, const ClassifyOptions& options = {});

bool classification_supported(int q, int k);

}  // namespace lcdkit
