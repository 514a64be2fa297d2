#include "lcdkit/gf_matrix.hpp"

#include <string>
#include <utility>

namespace lcdkit {

FieldOrder::FieldOrder(int q) : q_(q) {
    if (q != 2 && q != 3) {
        throw ParameterError("field order must be 2 or 3, got " + std::to_string(q));
    }
}

std::uint8_t FieldOrder::inv(std::uint8_t a) const {
    if (a % q_ == 0) throw DomainError("zero has no inverse");
    return static_cast<std::uint8_t>(a % q_);
}

GFMatrix::GFMatrix(FieldOrder q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), e_(rows * cols, 0) {
    if (rows == 0) throw ShapeError("matrix must have at least one row");
}

GFMatrix::GFMatrix(FieldOrder q, std::size_t rows, std::size_t cols, std::span<const int> entries)
    : GFMatrix(q, rows, cols) {
    if (entries.size() != rows * cols) throw ShapeError("entry count does not match shape");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0 || entries[i] >= q.value()) {
            throw DomainError("matrix entry out of range [0, q)");
        }
        e_[i] = static_cast<std::uint8_t>(entries[i]);
    }
}

GFMatrix::GFMatrix(FieldOrder q, std::initializer_list<std::initializer_list<int>> rows)
    : GFMatrix(q, rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeError("ragged matrix literal");
        std::size_t c = 0;
        for (int v : row) set(r, c++, v);
        ++r;
    }
}

GFMatrix GFMatrix::identity(FieldOrder q, std::size_t n) {
    GFMatrix out(q, n, n);
    for (std::size_t i = 0; i < n; ++i) out.e_[i * n + i] = 1;
    return out;
}

void GFMatrix::set(std::size_t r, std::size_t c, int value) {
    if (value < 0 || value >= q_.value()) throw DomainError("matrix entry out of range [0, q)");
    e_[r * cols_ + c] = static_cast<std::uint8_t>(value);
}

std::vector<std::uint8_t> GFMatrix::column(std::size_t c) const {
    std::vector<std::uint8_t> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

GFMatrix mat_mul(const GFMatrix& a, const GFMatrix& b) {
    if (!(a.field() == b.field())) throw ShapeError("field mismatch in mat_mul");
    if (a.cols() != b.rows()) throw ShapeError("dimension mismatch in mat_mul");
    const int q = a.q();
    GFMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            int acc = 0;
            for (std::size_t l = 0; l < a.cols(); ++l) acc += a.at(i, l) * b.at(l, j);
            out.set(i, j, acc % q);
        }
    }
    return out;
}

GFMatrix transpose(const GFMatrix& a) {
    if (a.cols() == 0) throw ShapeError("cannot transpose a matrix with no columns");
    GFMatrix out(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(j, i, a.at(i, j));
    return out;
}

GFMatrix hstack(const GFMatrix& a, const GFMatrix& b) {
    if (!(a.field() == b.field()) || a.rows() != b.rows()) throw ShapeError("hstack shape mismatch");
    GFMatrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.at(r, c));
    }
    return out;
}

GFMatrix gram(const GFMatrix& g) {
    const int q = g.q();
    GFMatrix out(g.field(), g.rows(), g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = i; j < g.rows(); ++j) {
            int acc = 0;
            for (std::size_t c = 0; c < g.cols(); ++c) acc += g.at(i, c) * g.at(j, c);
            out.set(i, j, acc % q);
            out.set(j, i, acc % q);
        }
    }
    return out;
}

namespace {

// Row-reduces `work` in place to reduced echelon form; returns pivot columns.
std::vector<std::size_t> reduce(std::vector<std::uint8_t>& work, std::size_t rows, std::size_t cols,
                                FieldOrder f) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && work[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(work[p * cols + j], work[r * cols + j]);
        }
        const std::uint8_t s = f.inv(work[r * cols + c]);
        for (std::size_t j = 0; j < cols; ++j) work[r * cols + j] = f.mul(work[r * cols + j], s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || work[i * cols + c] == 0) continue;
            const std::uint8_t factor = work[i * cols + c];
            for (std::size_t j = 0; j < cols; ++j) {
                work[i * cols + j] = f.sub(work[i * cols + j], f.mul(factor, work[r * cols + j]));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const GFMatrix& a) {
    std::vector<std::uint8_t> work = a.entries();
    auto pivots = reduce(work, a.rows(), a.cols(), a.field());
    std::vector<int> as_int(work.begin(), work.end());
    return {GFMatrix(a.field(), a.rows(), a.cols(), as_int), std::move(pivots)};
}

std::size_t rank(const GFMatrix& a) {
    std::vector<std::uint8_t> work = a.entries();
    return reduce(work, a.rows(), a.cols(), a.field()).size();
}

std::uint8_t det(const GFMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("determinant of a non-square matrix");
    const FieldOrder f = a.field();
    const std::size_t n = a.rows();
    std::vector<std::uint8_t> w = a.entries();
    std::uint8_t result = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w[p * n + c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w[p * n + j], w[c * n + j]);
            result = f.sub(0, result);
        }
        result = f.mul(result, w[c * n + c]);
        const std::uint8_t s = f.inv(w[c * n + c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (w[i * n + c] == 0) continue;
            const std::uint8_t factor = f.mul(w[i * n + c], s);
            for (std::size_t j = c; j < n; ++j) w[i * n + j] = f.sub(w[i * n + j], f.mul(factor, w[c * n + j]));
        }
    }
    return result;
}

std::uint8_t dot(FieldOrder q, std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
    if (x.size() != y.size()) throw ShapeError("dot product length mismatch");
    int acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return static_cast<std::uint8_t>(acc % q.value());
}

}  // namespace lcdkit
