#include "lcdkit/code.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "lcdkit/simplex.hpp"

namespace lcdkit {

MultiplicityVector::MultiplicityVector(FieldOrder q_, int k_, std::vector<int> m_) : q(q_), k(k_), m(std::move(m_)) {
    if (k < 1 || k > 4) throw ParameterError("multiplicity vector dimension must be in [1, 4]");
    const auto v = static_cast<std::size_t>(gaussian_count(q.value(), k));
    if (m.size() != v) {
        throw ShapeError("multiplicity vector for (q=" + std::to_string(q.value()) + ", k=" + std::to_string(k) +
                         ") needs " + std::to_string(v) + " entries, got " + std::to_string(m.size()));
    }
    if (std::any_of(m.begin(), m.end(), [](int x) { return x < 0; })) {
        throw DomainError("multiplicities must be nonnegative");
    }
}

int MultiplicityVector::length() const { return std::accumulate(m.begin(), m.end(), 0); }

bool simplex_is_self_orthogonal(int q, int k) { return (q == 2 && k >= 3) || (q == 3 && k >= 2); }

GFMatrix generator_from_multiplicity(const MultiplicityVector& mv) {
    const int n = mv.length();
    if (n < 1) throw DomainError("multiplicity vector has no columns");
    const SimplexFrame frame = simplex_matrix(mv.q, mv.k);
    GFMatrix g(mv.q, static_cast<std::size_t>(mv.k), static_cast<std::size_t>(n));
    std::size_t col = 0;
    for (std::size_t i = 0; i < mv.m.size(); ++i) {
        for (int rep = 0; rep < mv.m[i]; ++rep, ++col) {
            for (int r = 0; r < mv.k; ++r) g.set(static_cast<std::size_t>(r), col, frame.points[i][static_cast<std::size_t>(r)]);
        }
    }
    return g;
}

std::size_t code_rank(const MultiplicityVector& mv) {
    if (mv.length() == 0) return 0;
    return rank(generator_from_multiplicity(mv));
}

bool is_lcd(const GFMatrix& g) {
    if (g.cols() == 0) return false;
    return det(gram(g)) != 0;
}

bool is_lcd(const MultiplicityVector& mv) {
    // G G^T = sum_i m_i h_i h_i^T, so the generator matrix is never expanded.
    const SimplexFrame frame = simplex_matrix(mv.q, mv.k);
    const auto k = static_cast<std::size_t>(mv.k);
    std::vector<int> acc(k * k, 0);
    for (std::size_t i = 0; i < mv.m.size(); ++i) {
        if (mv.m[i] == 0) continue;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) acc[a * k + b] += mv.m[i] * frame.points[i][a] * frame.points[i][b];
    }
    for (auto& x : acc) x %= mv.q.value();
    return det(GFMatrix(mv.q, k, k, acc)) != 0;
}

std::vector<int> weight_vector(const MultiplicityVector& mv) {
    const DesignIncidence design = design_incidence(mv.q, mv.k);
    std::vector<int> out(design.v, 0);
    for (std::size_t j = 0; j < design.v; ++j)
        for (std::size_t i = 0; i < design.v; ++i)
            if (design.at(j, i)) out[j] += mv.m[i];
    return out;
}

int min_weight(const MultiplicityVector& mv) {
    if (mv.length() < mv.k || code_rank(mv) != static_cast<std::size_t>(mv.k)) {
        throw DomainError("multiplicity vector does not define a code of dimension k");
    }
    if (!simplex_is_self_orthogonal(mv.q.value(), mv.k)) {
        return min_weight_bruteforce(generator_from_multiplicity(mv));
    }
    const auto w = weight_vector(mv);
    return *std::min_element(w.begin(), w.end());
}

int min_weight_bruteforce(const GFMatrix& g) {
    if (rank(g) != g.rows()) throw DomainError("generator matrix is rank deficient");
    const int q = g.q();
    const std::size_t k = g.rows();
    std::vector<int> msg(k, 0);
    std::vector<int> word(g.cols());
    int best = std::numeric_limits<int>::max();
    while (true) {
        std::size_t pos = 0;
        while (pos < k && ++msg[pos] == q) msg[pos++] = 0;
        if (pos == k) break;
        int w = 0;
        for (std::size_t c = 0; c < g.cols(); ++c) {
            int acc = 0;
            for (std::size_t r = 0; r < k; ++r) acc += msg[r] * g.at(r, c);
            if (acc % q != 0) ++w;
        }
        best = std::min(best, w);
    }
    return best;
}

bool dual_distance_at_least(const GFMatrix& g, int w) {
    if (w < 1 || w > 3) throw ParameterError("dual distance threshold must be 1, 2 or 3");
    if (w == 1) return true;
    std::set<std::vector<std::uint8_t>> seen;
    const FieldOrder f = g.field();
    for (std::size_t c = 0; c < g.cols(); ++c) {
        auto col = g.column(c);
        auto lead = std::find_if(col.begin(), col.end(), [](std::uint8_t x) { return x != 0; });
        if (lead == col.end()) return false;
        if (w == 3) {
            const std::uint8_t s = f.inv(*lead);
            for (auto& x : col) x = f.mul(x, s);
            if (!seen.insert(col).second) return false;
        }
    }
    return true;
}

GFMatrix pad_zero(const GFMatrix& g) { return hstack(g, GFMatrix(g.field(), g.rows(), 1)); }

GFMatrix pad_zero(const CodeRecord& record) { return pad_zero(generator_from_multiplicity(record.m)); }

MultiplicityVector juxtapose_with_simplex(const MultiplicityVector& mv, int s) {
    if (!simplex_is_self_orthogonal(mv.q.value(), mv.k)) {
        throw ParameterError("juxtaposition needs a self-orthogonal simplex code (k >= 3 binary, k >= 2 ternary)");
    }
    if (s < 0) throw ParameterError("number of simplex copies must be nonnegative");
    if (!is_lcd(mv)) throw PreconditionError("juxtapose_with_simplex: input code is not LCD");
    auto out = mv;
    for (auto& x : out.m) x += s;
    return out;
}

namespace {

using Vec = std::vector<std::uint8_t>;

std::uint8_t form(FieldOrder f, const Vec& a, const Vec& b) { return dot(f, a, b); }

// a + c * b
Vec axpy(FieldOrder f, const Vec& a, std::uint8_t c, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], f.mul(c, b[i]));
    return out;
}

std::vector<Vec> rows_of(const GFMatrix& g) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < g.rows(); ++r) rows.emplace_back(g.row(r).begin(), g.row(r).end());
    return rows;
}

GFMatrix from_rows(FieldOrder f, const std::vector<Vec>& rows, std::size_t cols) {
    GFMatrix out(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out.set(r, c, rows[r][c]);
    return out;
}

std::vector<Vec> normalize_ternary(FieldOrder f, std::vector<Vec> work) {
    std::vector<Vec> out;
    while (!work.empty()) {
        auto it = std::find_if(work.begin(), work.end(), [&](const Vec& w) { return form(f, w, w) != 0; });
        if (it == work.end()) {
            // Totally isotropic basis: B(a+b, a+b) = 2 B(a, b), nonzero for some pair.
            bool fixed = false;
            for (std::size_t i = 0; i < work.size() && !fixed; ++i) {
                for (std::size_t j = i + 1; j < work.size() && !fixed; ++j) {
                    if (form(f, work[i], work[j]) != 0) {
                        work[i] = axpy(f, work[i], 1, work[j]);
                        fixed = true;
                    }
                }
            }
            if (!fixed) throw PreconditionError("gram_normalize: Gram matrix is singular");
            continue;
        }
        Vec x = *it;
        work.erase(it);
        const std::uint8_t norm_inv = f.inv(form(f, x, x));
        for (auto& w : work) w = axpy(f, w, f.sub(0, f.mul(form(f, w, x), norm_inv)), x);
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Vec> normalize_binary(FieldOrder f, std::vector<Vec> work) {
    std::vector<Vec> odd;
    std::vector<std::pair<Vec, Vec>> pairs;
    while (!work.empty()) {
        auto it = std::find_if(work.begin(), work.end(), [&](const Vec& w) { return form(f, w, w) != 0; });
        if (it != work.end()) {
            Vec x = *it;
            work.erase(it);
            for (auto& w : work) w = axpy(f, w, form(f, w, x), x);
            odd.push_back(std::move(x));
            continue;
        }
        // Alternating remainder: split off a hyperbolic pair (u, v), B(u, v) = 1.
        Vec u = work.front();
        work.erase(work.begin());
        auto vit = std::find_if(work.begin(), work.end(), [&](const Vec& w) { return form(f, u, w) != 0; });
        if (vit == work.end()) throw PreconditionError("gram_normalize: Gram matrix is singular");
        Vec v = *vit;
        work.erase(vit);
        for (auto& w : work) {
            const std::uint8_t bu = form(f, w, u);
            const std::uint8_t bv = form(f, w, v);
            w = axpy(f, axpy(f, w, bv, u), bu, v);
        }
        pairs.emplace_back(std::move(u), std::move(v));
    }
    if (odd.empty()) {
        std::vector<Vec> out;
        for (auto& [u, v] : pairs) {
            out.push_back(std::move(u));
            out.push_back(std::move(v));
        }
        return out;
    }
    // x orthonormal and (u, v) hyperbolic, all mutually orthogonal:
    // x+u, x+v, x+u+v is an orthonormal basis of the same span.
    for (auto& [u, v] : pairs) {
        Vec x = std::move(odd.back());
        odd.pop_back();
        Vec a1 = axpy(f, x, 1, u);
        Vec a2 = axpy(f, x, 1, v);
        Vec a3 = axpy(f, a1, 1, v);
        odd.push_back(std::move(a1));
        odd.push_back(std::move(a2));
        odd.push_back(std::move(a3));
    }
    return odd;
}

}  // namespace

GFMatrix gram_normalize(const GFMatrix& g) {
    if (rank(g) != g.rows() || !is_lcd(g)) throw PreconditionError("gram_normalize: input code is not LCD");
    const FieldOrder f = g.field();
    auto rows = rows_of(g);
    auto out = f.value() == 2 ? normalize_binary(f, std::move(rows)) : normalize_ternary(f, std::move(rows));
    return from_rows(f, out, g.cols());
}

GFMatrix extend_by_one(const GFMatrix& g) {
    if (g.rows() < 2) throw ParameterError("extend_by_one needs k >= 2");
    if (rank(g) != g.rows() || !is_lcd(g)) throw PreconditionError("extend_by_one: input code is not LCD");
    if (!dual_distance_at_least(g, 2)) throw PreconditionError("extend_by_one: input has a zero column (d-perp = 1)");
    const GFMatrix g0 = gram_normalize(g);
    const GFMatrix gr = gram(g0);
    GFMatrix column(g.field(), g.rows(), 1);
    if (g.q() == 2) {
        column.set(0, 0, 1);
        column.set(1, 0, 1);
    } else if (gr.at(0, 0) == 1) {
        column.set(0, 0, 1);
    } else if (gr.at(1, 1) == 1) {
        column.set(1, 0, 1);
    } else {
        column.set(0, 0, 1);
        column.set(1, 0, 1);
    }
    return hstack(g0, column);
}

}  // namespace lcdkit
