#include <gtest/gtest.h>

#include "lcdkit/store.hpp"
#include "lcdkit/theory.hpp"
#include "support.hpp"

using namespace lcdkit;

namespace {

// Published s-form rows: d = q^{k-1} s + alpha[t] for n = [k] s + t.
int row_form(int q, int k, int n) {
    static const int a23[] = {-1, -1, 0, 1, 1, 2, 2};
    static const int a24[] = {-2, -1, 0, 0, 1, 2, 2, 2, 3, 4, 4, 4, 5, 6, 6};
    static const int a32[] = {-1, 0, 1, 1};
    static const int a33[] = {-1, -1, 0, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7};
    const int v = static_cast<int>(gaussian_count(q, k));
    const int lead = static_cast<int>(check::power(q, k - 1));
    const int* a = q == 2 ? (k == 3 ? a23 : a24) : (k == 2 ? a32 : a33);
    return lead * (n / v) + a[n % v];
}

int griesmer_oracle(int q, int n, int k) {
    int best = 0;
    for (int d = 1; d <= n; ++d) {
        long long total = 0;
        for (int i = 0; i < k; ++i) {
            const long long p = check::power(q, i);
            total += (d + p - 1) / p;
        }
        if (total <= n) best = d;
    }
    return best;
}

}  // namespace

TEST(Griesmer, Examples) {
    for (int s = 0; s < 20; ++s) {
        EXPECT_EQ(griesmer_bound(3, 4 * s + 3, 2), 3 * s + 2);
        EXPECT_EQ(griesmer_bound(3, 13 * s + 4, 3), 9 * s + 2);
    }
    EXPECT_EQ(griesmer_bound(2, 10, 4), 4);
    EXPECT_THROW(griesmer_bound(2, 2, 3), ParameterError);
}

TEST(Griesmer, MatchesOracle) {
    for (int q : {2, 3})
        for (int k = 1; k <= 4; ++k)
            for (int n = k; n <= 120; ++n) ASSERT_EQ(griesmer_bound(q, n, k), griesmer_oracle(q, n, k));
}

TEST(Residual, Examples) {
    for (int s = 1; s < 10; ++s) {
        EXPECT_EQ(residual_r(2, 7 * s + 1, 3, 4 * s - 1), 11);
        EXPECT_EQ(residual_r(3, 13 * s + 1, 3, 9 * s - 1), 22);
    }
    EXPECT_EQ(residual_r(2, 7, 3, 4), 0);
    EXPECT_EQ(residual_r(2, 7, 3, 5), -7);
}

TEST(ThresholdSPrime, Examples) {
    EXPECT_EQ(threshold_s_prime(2, 3, 1, -1), 4);
    EXPECT_EQ(threshold_s_prime(3, 2, 3, 1), 4);
    EXPECT_EQ(threshold_s_prime(2, 4, 0, -2), 5);
}

TEST(LargestLcdWeight, Examples) {
    EXPECT_EQ(largest_lcd_weight(2, 4, 17).d, 8);
    EXPECT_EQ(largest_lcd_weight(3, 2, 11).d, 7);
    EXPECT_EQ(largest_lcd_weight(3, 3, 27).d, 17);
    EXPECT_EQ(largest_lcd_weight(3, 3, 40).d, 26);
    EXPECT_EQ(largest_lcd_weight(2, 4, 15).d, 6);
    const auto a = largest_lcd_weight(2, 4, 35);
    EXPECT_EQ(a.d, 18);
    EXPECT_EQ(a.t, 5);
    EXPECT_EQ(a.alpha, 2);
    EXPECT_EQ(a.branch, "n = 15s+5: d = 8s+2");
    EXPECT_FALSE(a.citation.empty());
    EXPECT_THROW(largest_lcd_weight(2, 2, 10), ParameterError);
    EXPECT_THROW(largest_lcd_weight(2, 4, 3), ParameterError);
    EXPECT_THROW(largest_lcd_weight(3, 2, 1), ParameterError);
}

TEST(LargestLcdWeight, MatchesRowFormsAndGriesmer) {
    const std::map<std::pair<int, int>, std::set<int>> equality{
        {{2, 3}, {2, 3, 5}}, {{2, 4}, {2, 3, 4, 5, 6, 9, 10, 13}}, {{3, 2}, {1, 2}}, {{3, 3}, {2, 3, 4, 6, 7, 10}}};
    for (const auto& [qk, residues] : equality) {
        const auto [q, k] = qk;
        const int v = static_cast<int>(gaussian_count(q, k));
        for (int n = largest_lcd_weight_floor(q, k); n <= 200; ++n) {
            const auto a = largest_lcd_weight(q, k, n);
            ASSERT_EQ(a.d, row_form(q, k, n)) << q << k << n;
            const int g = griesmer_bound(q, n, k);
            ASSERT_LE(a.d, g);
            if (n >= 2 * v) ASSERT_EQ(a.d == g, residues.count(n % v) == 1) << q << k << n;
        }
    }
}

TEST(ReduceToBase, Examples) {
    auto p = reduce_to_base(2, 4, 45, 22);
    EXPECT_EQ(p.r, 30);
    EXPECT_EQ(p.base_n, 60);
    EXPECT_EQ(p.base_d, 30);
    EXPECT_FALSE(p.applicable);  // below the base length
    EXPECT_EQ(p.s_prime, 5);

    p = reduce_to_base(2, 4, 75, 38);
    EXPECT_EQ(p.r, 30);
    EXPECT_EQ(p.base_n, 60);
    EXPECT_TRUE(p.applicable);

    p = reduce_to_base(3, 3, 40, 26);
    EXPECT_EQ(p.r, 22);
    EXPECT_EQ(p.base_n, 66);
    EXPECT_EQ(p.base_d, 44);
    EXPECT_FALSE(p.applicable);

    p = reduce_to_base(3, 3, 79, 53);
    EXPECT_EQ(p.r, 22);
    EXPECT_TRUE(p.applicable);

    p = reduce_to_base(2, 3, 7, 4);
    EXPECT_EQ(p.base_n, 0);
    EXPECT_FALSE(p.applicable);

    EXPECT_THROW(reduce_to_base(2, 2, 7, 4), ParameterError);
}

TEST(ReduceToBase, BaseClassificationMatchesDirect) {
    const auto p = reduce_to_base(2, 4, 45, 22);
    const auto direct = classify(2, 4, 45, 22, WeightMode::exact);
    const auto base = classify(2, 4, static_cast<int>(p.base_n), static_cast<int>(p.base_d), WeightMode::exact);
    EXPECT_EQ(direct.count(), 404u);
    EXPECT_EQ(base.count(), 404u);
}

TEST(LiftClassification, Examples) {
    const auto base = classify(3, 2, 15, 10, WeightMode::exact);
    ASSERT_EQ(base.count(), 3u);
    const auto lifted = lift_classification(base, 4);
    EXPECT_EQ(lifted.n, 19);
    EXPECT_EQ(lifted.d, 13);
    EXPECT_EQ(lifted.count(), 3u);
    const auto direct = classify(3, 2, 19, 13, WeightMode::exact);
    EXPECT_EQ(lifted.representatives, direct.representatives);
    for (const auto& rep : lifted.representatives) EXPECT_EQ(min_weight(rep), 13);
    EXPECT_THROW(lift_classification(base, 3), ParameterError);

    const auto b23 = classify(2, 3, 22, 11, WeightMode::exact);
    ASSERT_EQ(b23.count(), 7u);
    for (int s = 4; s <= 8; ++s) {
        const auto l = lift_classification(b23, s);
        EXPECT_EQ(l.n, 7 * s + 1);
        EXPECT_EQ(l.d, 4 * s - 1);
        EXPECT_EQ(l.count(), 7u);
    }
}

TEST(OptimalGenerator, Examples) {
    for (auto [q, k, n] : {std::tuple{3, 2, 15}, std::tuple{2, 4, 35}, std::tuple{3, 3, 40}, std::tuple{3, 2, 102},
                           std::tuple{2, 4, 60}, std::tuple{2, 3, 3}, std::tuple{2, 4, 200}}) {
        const auto g = optimal_generator(q, k, n);
        const int d = largest_lcd_weight(q, k, n).d;
        EXPECT_EQ(g.cols(), static_cast<std::size_t>(n));
        EXPECT_EQ(rank(g), static_cast<std::size_t>(k));
        EXPECT_NE(check::leibniz_det(gram(g)), 0);
        EXPECT_EQ(min_weight_bruteforce(g), d);
        EXPECT_TRUE(dual_distance_at_least(g, 2));
    }
}

TEST(OptimalGenerator, T15IsOneOfThePublishedClasses) {
    const auto g = optimal_generator(3, 2, 15);
    // recover the multiplicity vector from the columns
    const auto frame = simplex_matrix(FieldOrder(3), 2);
    std::vector<int> m(4, 0);
    for (std::size_t c = 0; c < g.cols(); ++c) ++m[point_index(frame, g.column(c))];
    const MultiplicityVector found(FieldOrder(3), 2, m);
    int matches = 0;
    for (const auto& t : {std::vector<int>{5, 5, 4, 1}, std::vector<int>{4, 5, 4, 2}, std::vector<int>{4, 5, 3, 3}})
        if (are_equivalent(found, MultiplicityVector(FieldOrder(3), 2, t))) ++matches;
    EXPECT_EQ(matches, 1);
}

TEST(OptimalGenerator, EmptyStoreIsDataUnavailable) {
    const FixtureStore empty(std::filesystem::temp_directory_path() / "lcdkit-no-such-store");
    EXPECT_THROW(optimal_generator(empty, 2, 4, 60), DataUnavailable);
    EXPECT_THROW(optimal_generator(empty, 2, 2, 60), ParameterError);
}
