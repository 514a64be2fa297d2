// Regenerates data/fixtures/classes from the classifier.
#include <cstdio>
#include <filesystem>
#include <string>

#include "lcdkit/classifier.hpp"
#include "lcdkit/store.hpp"
#include "lcdkit/theory.hpp"

int main(int argc, char** argv) {
    const std::filesystem::path root = argc > 1 ? argv[1] : lcdkit::fixture_root();
    struct Range {
        int q, k, last;
    };
    for (const Range r : {Range{2, 3, 25}, Range{3, 2, 15}, Range{2, 4, 60}, Range{3, 3, 66}}) {
        for (int n = lcdkit::largest_lcd_weight_floor(r.q, r.k); n <= r.last; ++n) {
            const int d = lcdkit::largest_lcd_weight(r.q, r.k, n).d;
            const auto result = lcdkit::classify(r.q, r.k, n, d, lcdkit::WeightMode::exact);
            if (result.count() == 0) continue;
            lcdkit::FixtureStore::save(root, result);
            std::printf("q=%d k=%d n=%d d=%d count=%zu\n", r.q, r.k, n, d, result.count());
        }
    }
    return 0;
}
