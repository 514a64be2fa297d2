#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lcdkit/gf_matrix.hpp"

namespace lcdkit {

/// Multiplicity vector m over the points of PG(k-1, q): the code C_{q,k}(m)
/// has m[i] copies of simplex column h_i in its generator matrix.
/// Indices are 0-based here; published tables use 1-based positions.
struct MultiplicityVector {
    MultiplicityVector(FieldOrder q, int k, std::vector<int> m);

    FieldOrder q;
    int k;
    std::vector<int> m;

    int length() const;  // n = sum of m

    friend bool operator==(const MultiplicityVector& a, const MultiplicityVector& b) {
        return a.q == b.q && a.k == b.k && a.m == b.m;
    }
};

struct CodeRecord {
    int q;
    int k;
    int n;
    int d;
    bool dual_ge2;
    MultiplicityVector m;
};

/// True when (q, k) is in the range where the simplex code is self-orthogonal
/// and its supports form a symmetric design: k >= 3 for q = 2, k >= 2 for q = 3.
bool simplex_is_self_orthogonal(int q, int k);

GFMatrix generator_from_multiplicity(const MultiplicityVector& mv);

/// Rank of the generator matrix G_{q,k}(m).
std::size_t code_rank(const MultiplicityVector& mv);

bool is_lcd(const GFMatrix& g);
bool is_lcd(const MultiplicityVector& mv);

/// Entry j is the weight shared by every codeword in the projective class of
/// message h_j, i.e. (A m^T)_j for the support incidence A.
std::vector<int> weight_vector(const MultiplicityVector& mv);

/// Minimum weight of C_{q,k}(m). Throws DomainError when G_{q,k}(m) does not
/// have rank k.
int min_weight(const MultiplicityVector& mv);

/// Enumerates all q^k - 1 nonzero messages.
int min_weight_bruteforce(const GFMatrix& g);

/// d-perp >= w for w in {1, 2, 3}, decided from column structure alone.
bool dual_distance_at_least(const GFMatrix& g, int w);

GFMatrix pad_zero(const GFMatrix& g);
GFMatrix pad_zero(const CodeRecord& record);

/// m + s * (1, ..., 1); the code gains [k]_q * s in length and exactly
/// q^{k-1} * s in minimum weight.
MultiplicityVector juxtapose_with_simplex(const MultiplicityVector& mv, int s);

/// Another generator matrix of the same LCD code with a normalized Gram matrix:
///  - binary odd code:  G G^T = I_k
///  - binary even code: G G^T = diag(J_2, ..., J_2)
///  - ternary code:     G G^T diagonal with nonzero entries (each row is
///                      anisotropic and orthogonal to every later row)
GFMatrix gram_normalize(const GFMatrix& g);

/// One extra column turning an LCD [n,k,d0] code with d-perp >= 2 into an
/// LCD [n+1,k,d] code with d in {d0, d0+1} and d-perp >= 2.
GFMatrix extend_by_one(const GFMatrix& g);

}  // namespace lcdkit
