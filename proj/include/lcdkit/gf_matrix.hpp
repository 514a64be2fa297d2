#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "lcdkit/errors.hpp"

namespace lcdkit {

/// Order of one of the two supported prime fields, GF(2) or GF(3).
class FieldOrder {
public:
    explicit FieldOrder(int q);

    int value() const noexcept { return q_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const noexcept {
        return static_cast<std::uint8_t>((a + b) % q_);
    }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const noexcept {
        return static_cast<std::uint8_t>((a + q_ - b) % q_);
    }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const noexcept {
        return static_cast<std::uint8_t>((a * b) % q_);
    }
    // In GF(2) and GF(3) every nonzero element is its own inverse.
    std::uint8_t inv(std::uint8_t a) const;

    friend bool operator==(FieldOrder a, FieldOrder b) noexcept { return a.q_ == b.q_; }

private:
    int q_;
};

/// Dense row-major matrix over GF(q) with entries stored in [0, q).
class GFMatrix {
public:
    GFMatrix(FieldOrder q, std::size_t rows, std::size_t cols);
    GFMatrix(FieldOrder q, std::size_t rows, std::size_t cols, std::span<const int> entries);
    GFMatrix(FieldOrder q, std::initializer_list<std::initializer_list<int>> rows);

    static GFMatrix identity(FieldOrder q, std::size_t n);

    FieldOrder field() const noexcept { return q_; }
    int q() const noexcept { return q_.value(); }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint8_t at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, int value);

    std::span<const std::uint8_t> row(std::size_t r) const {
        return {e_.data() + r * cols_, cols_};
    }
    std::vector<std::uint8_t> column(std::size_t c) const;
    const std::vector<std::uint8_t>& entries() const noexcept { return e_; }

    friend bool operator==(const GFMatrix& a, const GFMatrix& b) {
        return a.q_ == b.q_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    FieldOrder q_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> e_;
};

struct RrefResult {
    GFMatrix matrix;
    std::vector<std::size_t> pivots;  // 0-based, strictly increasing
};

GFMatrix mat_mul(const GFMatrix& a, const GFMatrix& b);
GFMatrix transpose(const GFMatrix& a);
GFMatrix hstack(const GFMatrix& a, const GFMatrix& b);
GFMatrix gram(const GFMatrix& g);  // g * g^T

std::size_t rank(const GFMatrix& a);
std::uint8_t det(const GFMatrix& a);

/// Pivots are taken as the first nonzero entry scanning columns left to
/// right, and within a column rows top to bottom.
RrefResult rref(const GFMatrix& a);

std::uint8_t dot(FieldOrder q, std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);

}  // namespace lcdkit
