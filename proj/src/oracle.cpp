#include "lcdkit/oracle.hpp"

#include <string>

#include "lcdkit/classifier.hpp"
#include "lcdkit/code.hpp"

namespace lcdkit {

namespace {

std::vector<int> weight_distribution(const GFMatrix& g) {
    const int q = g.q();
    const std::size_t k = g.rows();
    std::vector<int> dist(g.cols() + 1, 0);
    std::vector<int> msg(k, 0);
    while (true) {
        int w = 0;
        for (std::size_t c = 0; c < g.cols(); ++c) {
            int acc = 0;
            for (std::size_t r = 0; r < k; ++r) acc += msg[r] * g.at(r, c);
            if (acc % q != 0) ++w;
        }
        ++dist[static_cast<std::size_t>(w)];
        std::size_t pos = 0;
        while (pos < k && ++msg[pos] == q) msg[pos++] = 0;
        if (pos == k) break;
    }
    return dist;
}

}  // namespace

std::vector<OracleClass> bruteforce_lcd_classes(int q, int k, int n) {
    const FieldOrder f(q);
    if (k < 1 || n < k) throw ParameterError("bruteforce_lcd_classes needs n >= k >= 1");
    if ((q == 2 && n > 8) || (q == 3 && n > 6)) {
        throw ParameterError("bruteforce_lcd_classes refuses n > 8 (binary) or n > 6 (ternary)");
    }
    std::size_t nonzero = 1;
    for (int i = 0; i < k; ++i) nonzero *= static_cast<std::size_t>(q);
    --nonzero;
    auto column_of = [&](std::size_t code, GFMatrix& g, std::size_t col) {
        std::size_t x = code + 1;
        for (int r = 0; r < k; ++r) {
            g.set(static_cast<std::size_t>(r), col, static_cast<std::uint8_t>(x % static_cast<std::size_t>(q)));
            x /= static_cast<std::size_t>(q);
        }
    };

    std::map<std::vector<int>, std::vector<std::size_t>> groups;
    std::vector<OracleClass> classes;
    const std::size_t extra = static_cast<std::size_t>(n - k);
    std::vector<std::size_t> cols(extra, 0);  // nondecreasing codes of the columns of A
    while (true) {
        GFMatrix g(f, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
        for (int i = 0; i < k; ++i) g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), 1);
        for (std::size_t j = 0; j < extra; ++j) column_of(cols[j], g, static_cast<std::size_t>(k) + j);
        if (is_lcd(g)) {
            auto dist = weight_distribution(g);
            auto& members = groups[dist];
            bool known = false;
            for (std::size_t idx : members) {
                if (bruteforce_equiv_oracle(classes[idx].generator, g)) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                int d = 1;
                while (dist[static_cast<std::size_t>(d)] == 0) ++d;
                members.push_back(classes.size());
                classes.push_back({g, d});
            }
        }
        // next nondecreasing sequence
        std::size_t pos = extra;
        while (pos > 0 && cols[pos - 1] == nonzero - 1) --pos;
        if (pos == 0) break;
        ++cols[pos - 1];
        for (std::size_t j = pos; j < extra; ++j) cols[j] = cols[pos - 1];
    }
    return classes;
}

std::map<int, std::size_t> bruteforce_lcd_counts(int q, int k, int n) {
    std::map<int, std::size_t> out;
    for (const auto& c : bruteforce_lcd_classes(q, k, n)) ++out[c.d];
    return out;
}

}  // namespace lcdkit
