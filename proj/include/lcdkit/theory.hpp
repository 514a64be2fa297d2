#pragma once

#include <string>

#include "lcdkit/classifier.hpp"
#include "lcdkit/gf_matrix.hpp"

namespace lcdkit {

class FixtureStore;

/// Largest d >= 0 with n >= sum_{i<k} ceil(d / q^i).
int griesmer_bound(int q, int n, int k);

/// q^{k-1} n - [k]_q d; may be negative.
long long residual_r(int q, int n, int k, int d);

/// For the family n = [k]_q s + t, d = q^{k-1} s + alpha_t:
/// r = q^{k-1} t - [k]_q alpha_t and s' = (q r - t) / [k]_q + 1.
/// Throws AssumptionError when the division is not exact.
int threshold_s_prime(int q, int k, int t, int alpha_t);

struct OptimalWeightAnswer {
    int q;
    int k;
    int n;
    int d;
    int t;               // n mod [k]_q
    int alpha;           // d = q^{k-1} * (n div [k]_q) + alpha
    std::string branch;  // e.g. "n = 15s+5: d = 8s+2"
    std::string citation;
};

/// d_q(n,k): the largest minimum weight of an LCD [n,k] code, for
/// (q,k) in {(2,3),(2,4),(3,2),(3,3)}.
OptimalWeightAnswer largest_lcd_weight(int q, int k, int n);

/// Smallest n for which largest_lcd_weight is defined.
int largest_lcd_weight_floor(int q, int k);

struct ReductionPlan {
    int q;
    int k;
    int n;
    int d;
    int s;
    int t;
    long long r;
    long long s_prime;
    long long base_n;
    long long base_d;
    bool applicable;
};

/// Decomposes (n, d) against the base [q r, k, (q-1) r]; applicable when
/// q d - (q-1) n >= 1 and q r >= k.
ReductionPlan reduce_to_base(int q, int k, int n, int d);

/// Shifts every representative of the classification at length
/// [k]_q (s'-1) + t by s - (s'-1) simplex copies. Throws ParameterError for s < s'.
ClassificationResult lift_classification(const ClassificationResult& base, int s);

/// Generator matrix of an LCD [n, k, d_q(n,k)] code with d-perp >= 2 built
/// from a stored representative plus simplex copies. Throws DataUnavailable
/// when no stored length fits.
GFMatrix optimal_generator(int q, int k, int n);
GFMatrix optimal_generator(const FixtureStore& store, int q, int k, int n);

}  // namespace lcdkit
