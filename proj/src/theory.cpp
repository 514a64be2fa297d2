#include "lcdkit/theory.hpp"

#include <algorithm>
#include <string>

#include "lcdkit/simplex.hpp"
#include "lcdkit/store.hpp"

namespace lcdkit {

namespace {

long long ipow(long long base, int e) {
    long long out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

std::string signed_term(long long x) {
    if (x == 0) return "";
    return (x > 0 ? "+" : "") + std::to_string(x);
}

}  // namespace

int griesmer_bound(int q, int n, int k) {
    if (q != 2 && q != 3) throw ParameterError("q must be 2 or 3");
    if (k < 1 || n < k) throw ParameterError("griesmer_bound needs n >= k >= 1");
    auto length_needed = [&](long long d) {
        long long total = 0;
        for (int i = 0; i < k; ++i) total += ceil_div(d, ipow(q, i));
        return total;
    };
    // length_needed(d) >= d, so d <= n.
    int d = n;
    while (d > 0 && length_needed(d) > n) --d;
    return d;
}

long long residual_r(int q, int n, int k, int d) {
    return ipow(q, k - 1) * n - gaussian_count(q, k) * static_cast<long long>(d);
}

int threshold_s_prime(int q, int k, int t, int alpha_t) {
    const long long v = gaussian_count(q, k);
    const long long r = ipow(q, k - 1) * t - v * alpha_t;
    const long long num = q * r - t;
    if (num % v != 0) {
        throw AssumptionError("threshold_s_prime: q*r - t = " + std::to_string(num) + " is not divisible by " +
                              std::to_string(v));
    }
    return static_cast<int>(num / v + 1);
}

int largest_lcd_weight_floor(int q, int k) {
    if (q == 2 && k == 3) return 3;
    if (q == 2 && k == 4) return 4;
    if (q == 3 && k == 2) return 2;
    if (q == 3 && k == 3) return 3;
    throw ParameterError("largest_lcd_weight: unsupported (q,k) = (" + std::to_string(q) + "," + std::to_string(k) + ")");
}

OptimalWeightAnswer largest_lcd_weight(int q, int k, int n) {
    const int floor_n = largest_lcd_weight_floor(q, k);
    if (n < floor_n) {
        throw ParameterError("largest_lcd_weight(" + std::to_string(q) + "," + std::to_string(k) +
                             ") needs n >= " + std::to_string(floor_n));
    }
    const int v = static_cast<int>(gaussian_count(q, k));
    const int t = n % v;
    int d = 0;
    std::string citation;
    if (q == 2 && k == 3) {
        static const int alpha[7] = {-1, -1, 0, 1, 1, 2, 2};
        d = 4 * (n / 7) + alpha[t];
        citation = "d_2(n,3) table, rows n = 7s+t";
    } else if (q == 2 && k == 4) {
        const int base = 8 * n / 15;
        d = (t == 5 || t == 9 || t == 13) ? base : (t == 0 ? base - 2 : base - 1);
        citation = "d_2(n,4) = floor(8n/15) - {0 if n = 5,9,13; 2 if n = 0; 1 otherwise} (mod 15)";
    } else if (q == 3 && k == 2) {
        const int base = 3 * n / 4;
        d = (t == 1 || t == 2) ? base : base - 1;
        citation = "d_3(n,2) = floor(3n/4) - {0 if n = 1,2; 1 otherwise} (mod 4)";
    } else {
        const int base = 9 * n / 13;
        d = (t == 4 || t == 7 || t == 10) ? base : base - 1;
        citation = "d_3(n,3) = floor(9n/13) - {0 if n = 4,7,10; 1 otherwise} (mod 13)";
    }
    const int lead = static_cast<int>(ipow(q, k - 1));
    const int alpha = d - lead * (n / v);
    std::string branch = "n = " + std::to_string(v) + "s" + signed_term(t) + ": d = " + std::to_string(lead) + "s" +
                         signed_term(alpha);
    return {q, k, n, d, t, alpha, std::move(branch), std::move(citation)};
}

ReductionPlan reduce_to_base(int q, int k, int n, int d) {
    if (!simplex_is_self_orthogonal(q, k)) throw ParameterError("reduce_to_base needs k >= k0");
    const long long v = gaussian_count(q, k);
    ReductionPlan plan{};
    plan.q = q;
    plan.k = k;
    plan.n = n;
    plan.d = d;
    plan.s = static_cast<int>(n / v);
    plan.t = static_cast<int>(n % v);
    plan.r = residual_r(q, n, k, d);
    plan.base_n = q * plan.r;
    plan.base_d = (q - 1) * plan.r;
    // q r = q^k n - q [k] d is congruent to n modulo [k] because q^k = 1 (mod [k]).
    plan.s_prime = (plan.base_n - plan.t) / v + 1;
    const long long excess = static_cast<long long>(q) * d - static_cast<long long>(q - 1) * n;
    plan.applicable = excess >= 1 && plan.base_n >= k;
    return plan;
}

ClassificationResult lift_classification(const ClassificationResult& base, int s) {
    if (!simplex_is_self_orthogonal(base.q, base.k)) throw ParameterError("lift_classification needs k >= k0");
    const int v = static_cast<int>(gaussian_count(base.q, base.k));
    const int s_prime = base.n / v + 1;
    if (s < s_prime) {
        throw ParameterError("lift_classification: s = " + std::to_string(s) + " is below s' = " +
                             std::to_string(s_prime));
    }
    const int shift = s - (s_prime - 1);
    ClassificationResult out{base.q,
                             base.k,
                             base.n + v * shift,
                             base.d + static_cast<int>(ipow(base.q, base.k - 1)) * shift,
                             base.mode,
                             {}};
    for (const auto& rep : base.representatives) out.representatives.push_back(juxtapose_with_simplex(rep, shift));
    return out;
}

GFMatrix optimal_generator(int q, int k, int n) { return optimal_generator(FixtureStore::default_store(), q, k, n); }

GFMatrix optimal_generator(const FixtureStore& store, int q, int k, int n) {
    const OptimalWeightAnswer target = largest_lcd_weight(q, k, n);
    const int v = static_cast<int>(gaussian_count(q, k));
    const int lead = static_cast<int>(ipow(q, k - 1));
    std::optional<ClassificationResult> best;
    for (const auto& [n0, d0] : store.available(q, k)) {
        if (n0 > n || (n - n0) % v != 0) continue;
        if (d0 + lead * ((n - n0) / v) != target.d) continue;
        if (best && best->n >= n0) continue;
        auto loaded = store.load(q, k, n0, d0);
        if (loaded && loaded->count() > 0) best = std::move(loaded);
    }
    if (!best) {
        throw DataUnavailable("no stored representative extends to an optimal [" + std::to_string(n) + "," +
                              std::to_string(k) + "] code over GF(" + std::to_string(q) + ")");
    }
    const MultiplicityVector mv = juxtapose_with_simplex(best->representatives.front(), (n - best->n) / v);
    GFMatrix g = generator_from_multiplicity(mv);
    if (rank(g) != static_cast<std::size_t>(k) || !is_lcd(g) || min_weight(mv) != target.d ||
        !dual_distance_at_least(g, 2)) {
        throw Error("optimal_generator: stored representative failed re-verification");
    }
    return g;
}

}  // namespace lcdkit
