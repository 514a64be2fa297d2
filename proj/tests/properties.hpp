#pragma once

// Randomized property checks. Each returns the number of failing cases and
// appends a description of the first few failures to `log`.

#include <random>
#include <string>
#include <vector>

#include "lcdkit/classifier.hpp"
#include "lcdkit/code.hpp"
#include "support.hpp"

namespace lcdkit::check {

struct PropertyLog {
    std::vector<std::string> lines;
    void fail(const std::string& what) {
        if (lines.size() < 5) lines.push_back(what);
    }
};

inline std::string show(const std::vector<int>& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + ")";
}

inline const std::pair<int, int> kSupported[] = {{2, 3}, {2, 4}, {3, 2}, {3, 3}};

inline int check_min_weight(int iterations, std::uint64_t seed, PropertyLog& log) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int i = 0; i < iterations; ++i) {
        const auto [q, k] = kSupported[i % 4];
        const auto m = random_full_rank(rng, q, k, 3);
        const int fast = min_weight(m);
        const int slow = min_weight_bruteforce(generator_from_multiplicity(m));
        if (fast != slow) {
            ++failures;
            log.fail("min_weight " + show(m.m) + ": " + std::to_string(fast) + " vs " + std::to_string(slow));
        }
    }
    return failures;
}

inline int check_orbit_invariance(int iterations, std::uint64_t seed, PropertyLog& log) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int i = 0; i < iterations; ++i) {
        const auto [q, k] = kSupported[i % 4];
        const auto frame = simplex_matrix(FieldOrder(q), k);
        const auto m = random_full_rank(rng, q, k, 4);
        const auto perm = induced_permutation(frame, random_invertible(rng, q, static_cast<std::size_t>(k)));
        const MultiplicityVector image(FieldOrder(q), k, permuted(m.m, perm));
        const auto c = canonical_form(m);
        if (!(canonical_form(image) == c) || !(canonical_form(c) == c)) {
            ++failures;
            log.fail("canonical_form not orbit invariant at " + show(m.m));
        }
    }
    return failures;
}

inline int check_juxtaposition(int iterations, std::uint64_t seed, PropertyLog& log) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int i = 0; i < iterations; ++i) {
        const auto [q, k] = kSupported[i % 4];
        const auto m = random_lcd(rng, q, k, 3);
        const int s = 1 + static_cast<int>(rng() % 3);
        const auto lifted = juxtapose_with_simplex(m, s);
        const auto g = generator_from_multiplicity(lifted);
        const int expect = min_weight_bruteforce(generator_from_multiplicity(m)) + static_cast<int>(power(q, k - 1)) * s;
        const bool ok = lifted.length() == m.length() + static_cast<int>(gaussian_count(q, k)) * s &&
                        leibniz_det(gram(g)) != 0 && min_weight_bruteforce(g) == expect;
        if (!ok) {
            ++failures;
            log.fail("juxtaposition " + show(m.m) + " s=" + std::to_string(s));
        }
    }
    return failures;
}

inline bool binary_code_is_odd(const GFMatrix& g) {
    for (std::size_t r = 0; r < g.rows(); ++r) {
        int w = 0;
        for (auto x : g.row(r)) w += x;
        if (w % 2) return true;
    }
    return false;
}

inline int check_gram_normalize(int iterations, std::uint64_t seed, PropertyLog& log) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int i = 0; i < iterations; ++i) {
        const int q = 2 + i % 2;
        const std::size_t k = 2 + rng() % 3;
        const std::size_t n = k + rng() % 6;
        const auto g = random_lcd_generator(rng, q, k, n);
        const auto out = gram_normalize(g);
        const auto gr = gram(out);
        bool ok = same_row_space(out, g) && out.rows() == k;
        for (std::size_t a = 0; a < k && ok; ++a) {
            for (std::size_t b = 0; b < k && ok; ++b) {
                int want;
                if (q == 3) {
                    want = a == b ? -1 : 0;  // -1: any nonzero value
                } else if (binary_code_is_odd(g)) {
                    want = a == b ? 1 : 0;
                } else {
                    want = (a / 2 == b / 2 && a != b) ? 1 : 0;
                }
                ok = want == -1 ? gr.at(a, b) != 0 : gr.at(a, b) == want;
            }
        }
        if (q == 2 && !binary_code_is_odd(g) && k % 2 == 1) ok = false;  // alternating forms have even rank
        if (!ok) {
            ++failures;
            log.fail("gram_normalize q=" + std::to_string(q) + " k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    }
    return failures;
}

inline int check_extend_by_one(int iterations, std::uint64_t seed, PropertyLog& log) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int i = 0; i < iterations; ++i) {
        const int q = 2 + i % 2;
        const std::size_t k = 2 + rng() % 3;
        const std::size_t n = k + rng() % 6;
        const auto g = random_lcd_generator(rng, q, k, n);
        const auto e = extend_by_one(g);
        GFMatrix head(g.field(), k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c) head.set(r, c, e.at(r, c));
        const int d0 = min_weight_bruteforce(g);
        const int d = min_weight_bruteforce(e);
        const bool ok = e.cols() == n + 1 && same_row_space(head, g) && leibniz_det(gram(e)) != 0 &&
                        (d == d0 || d == d0 + 1) && dual_distance_upto(e, 1) >= 2;
        if (!ok) {
            ++failures;
            log.fail("extend_by_one q=" + std::to_string(q) + " k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    }
    return failures;
}

}  // namespace lcdkit::check
