#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lcdkit/gf_matrix.hpp"

namespace lcdkit {

/// Number of points of PG(k-1, q), i.e. (q^k - 1) / (q - 1).
long long gaussian_count(int q, int k);

/// Simplex generator matrix S_{q,k} and its ordered column list.
///
/// Columns follow the recursive construction
///   S_{q,1} = (1),
///   S_{2,k} = [S_{2,k-1} 0 S_{2,k-1}; 0 1 1...1],
///   S_{3,k} = [S_{3,k-1} 0 S_{3,k-1} S_{3,k-1}; 0 1 1...1 2...2],
/// so for q = 2 column i (1-based) is the binary expansion of i with the
/// first coordinate as least significant bit. Published multiplicity
/// vectors are indexed against this order, so it must not change.
struct SimplexFrame {
    FieldOrder q;
    int k;
    GFMatrix matrix;
    std::vector<std::vector<std::uint8_t>> points;

    std::size_t size() const noexcept { return points.size(); }
};

SimplexFrame simplex_matrix(FieldOrder q, int k);

/// 0-based index of the projective point containing the nonzero vector v.
std::size_t point_index(const SimplexFrame& frame, std::span<const std::uint8_t> v);

/// Permutation group induced on the points of PG(k-1, q) by GL(k, q).
/// perm(g)[i] is the index of the point U * h_i for the matrix U behind g.
class InducedPointGroup {
public:
    InducedPointGroup(FieldOrder q, int k, std::size_t degree, std::vector<std::uint8_t> perms);

    FieldOrder q;
    int k;

    std::size_t degree() const noexcept { return degree_; }
    std::size_t order() const noexcept { return perms_.size() / degree_; }
    std::span<const std::uint8_t> perm(std::size_t g) const {
        return {perms_.data() + g * degree_, degree_};
    }
    // Elements g with perm(g)[0] == a and perm(g)[1] == b.
    std::span<const std::uint32_t> with_prefix(std::size_t a, std::size_t b) const;

private:
    std::size_t degree_;
    std::vector<std::uint8_t> perms_;
    std::vector<std::uint32_t> bucket_start_;
    std::vector<std::uint32_t> bucket_items_;
};

InducedPointGroup induced_point_group(FieldOrder q, int k);

/// Row j is the support indicator of the simplex codewords in the projective
/// class of message h_j: a[j][i] = 1 iff h_j . h_i != 0.
struct DesignIncidence {
    FieldOrder q;
    int k;
    std::size_t v;
    std::vector<std::uint8_t> a;

    std::uint8_t at(std::size_t j, std::size_t i) const { return a[j * v + i]; }
};

DesignIncidence design_incidence(FieldOrder q, int k);

/// Everything the weight evaluator and the classifier need about PG(k-1, q),
/// built once per (q, k) and shared read-only.
struct PointGeometry {
    SimplexFrame frame;
    DesignIncidence design;
    InducedPointGroup group;
    std::size_t v;
    // Bit i of hyperplane_mask[j] is set iff h_j . h_i == 0.
    std::vector<std::uint32_t> hyperplane_mask;
    // pivots[b] is the index of the unit vector e_{b+1}, i.e. [b]_q.
    std::vector<std::size_t> pivots;
    // Flattened k x k outer products h_i h_i^T, reduced mod q.
    std::vector<std::uint8_t> outer;
    // full_rank_support[mask] != 0 iff the points in mask span GF(q)^k.
    std::vector<std::uint8_t> full_rank_support;

    int q() const noexcept { return frame.q.value(); }
    int k() const noexcept { return frame.k; }
};

/// Cached geometry for 2 <= k <= 4; thread-safe.
const PointGeometry& point_geometry(FieldOrder q, int k);

}  // namespace lcdkit
