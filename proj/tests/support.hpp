#pragma once

// Independent oracles and random generators shared by the unit, property
// and acceptance tests. Nothing here calls the classifier or the weight
// machinery it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "lcdkit/code.hpp"
#include "lcdkit/gf_matrix.hpp"
#include "lcdkit/simplex.hpp"

namespace lcdkit::check {

inline long long power(long long b, int e) {
    long long out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
}

/// Leibniz expansion mod q.
inline int leibniz_det(const GFMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    long long total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        long long term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= a.at(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    const int q = a.q();
    return static_cast<int>(((total % q) + q) % q);
}

/// Rank as log_q of the number of distinct codewords spanned by the rows.
inline std::size_t rank_by_span(const GFMatrix& a) {
    const int q = a.q();
    std::vector<std::vector<std::uint8_t>> words;
    std::vector<int> msg(a.rows(), 0);
    while (true) {
        std::vector<std::uint8_t> w(a.cols());
        for (std::size_t c = 0; c < a.cols(); ++c) {
            int acc = 0;
            for (std::size_t r = 0; r < a.rows(); ++r) acc += msg[r] * a.at(r, c);
            w[c] = static_cast<std::uint8_t>(acc % q);
        }
        words.push_back(std::move(w));
        std::size_t pos = 0;
        while (pos < a.rows() && ++msg[pos] == q) msg[pos++] = 0;
        if (pos == a.rows()) break;
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    std::size_t r = 0;
    for (std::size_t size = 1; size < words.size(); size *= static_cast<std::size_t>(q)) ++r;
    return r;
}

/// Exact dual distance when it is at most `limit`: the size of the smallest
/// linearly dependent multiset of columns. Returns limit + 1 if none of
/// size <= limit exists.
inline int dual_distance_upto(const GFMatrix& g, int limit) {
    const int q = g.q();
    const std::size_t n = g.cols();
    const std::size_t k = g.rows();
    std::vector<std::size_t> idx;
    std::vector<int> coef;
    for (int size = 1; size <= limit && static_cast<std::size_t>(size) <= n; ++size) {
        idx.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        while (true) {
            coef.assign(static_cast<std::size_t>(size), 1);
            while (true) {
                bool zero = true;
                for (std::size_t r = 0; r < k && zero; ++r) {
                    int acc = 0;
                    for (int i = 0; i < size; ++i) acc += coef[static_cast<std::size_t>(i)] * g.at(r, idx[static_cast<std::size_t>(i)]);
                    zero = acc % q == 0;
                }
                if (zero) return size;
                int pos = 0;
                while (pos < size && ++coef[static_cast<std::size_t>(pos)] == q) coef[static_cast<std::size_t>(pos++)] = 1;
                if (pos == size) break;
            }
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - static_cast<std::size_t>(size - i)) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return limit + 1;
}

inline GFMatrix random_matrix(std::mt19937_64& rng, int q, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> entry(0, q - 1);
    GFMatrix m(FieldOrder(q), rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, entry(rng));
    return m;
}

inline GFMatrix random_invertible(std::mt19937_64& rng, int q, std::size_t k) {
    while (true) {
        GFMatrix u = random_matrix(rng, q, k, k);
        if (leibniz_det(u) != 0) return u;
    }
}

/// Point permutation induced by U, computed from first principles.
inline std::vector<std::size_t> induced_permutation(const SimplexFrame& frame, const GFMatrix& u) {
    std::vector<std::size_t> perm(frame.size());
    const auto k = static_cast<std::size_t>(frame.k);
    for (std::size_t i = 0; i < frame.size(); ++i) {
        std::vector<std::uint8_t> image(k);
        for (std::size_t r = 0; r < k; ++r) {
            int acc = 0;
            for (std::size_t c = 0; c < k; ++c) acc += u.at(r, c) * frame.points[i][c];
            image[r] = static_cast<std::uint8_t>(acc % frame.q.value());
        }
        perm[i] = point_index(frame, image);
    }
    return perm;
}

inline std::vector<int> permuted(const std::vector<int>& m, const std::vector<std::size_t>& perm) {
    std::vector<int> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[perm[i]];
    return out;
}

/// Random multiplicity vector of rank k with entries in [0, top].
inline MultiplicityVector random_full_rank(std::mt19937_64& rng, int q, int k, int top) {
    const auto v = static_cast<std::size_t>(gaussian_count(q, k));
    std::uniform_int_distribution<int> entry(0, top);
    while (true) {
        std::vector<int> m(v);
        for (auto& x : m) x = entry(rng);
        MultiplicityVector mv(FieldOrder(q), k, m);
        if (mv.length() >= k && code_rank(mv) == static_cast<std::size_t>(k)) return mv;
    }
}

inline MultiplicityVector random_lcd(std::mt19937_64& rng, int q, int k, int top) {
    while (true) {
        auto mv = random_full_rank(rng, q, k, top);
        if (leibniz_det(gram(generator_from_multiplicity(mv))) != 0) return mv;
    }
}

/// Random LCD generator matrix of full rank without zero columns.
inline GFMatrix random_lcd_generator(std::mt19937_64& rng, int q, std::size_t k, std::size_t n) {
    while (true) {
        GFMatrix g = random_matrix(rng, q, k, n);
        bool zero_col = false;
        for (std::size_t c = 0; c < n && !zero_col; ++c) {
            auto col = g.column(c);
            zero_col = std::all_of(col.begin(), col.end(), [](std::uint8_t x) { return x == 0; });
        }
        if (zero_col || rank_by_span(g) != k) continue;
        if (leibniz_det(gram(g)) != 0) return g;
    }
}

inline GFMatrix stack_rows(const GFMatrix& a, const GFMatrix& b) {
    GFMatrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(a.rows() + r, c, b.at(r, c));
    return out;
}

/// True when the rows of a and b span the same subspace.
inline bool same_row_space(const GFMatrix& a, const GFMatrix& b) {
    const std::size_t ra = rank_by_span(a);
    return ra == rank_by_span(b) && ra == rank_by_span(stack_rows(a, b));
}

}  // namespace lcdkit::check
