#include "lcdkit/simplex.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>

namespace lcdkit {

long long gaussian_count(int q, int k) {
    if (k < 1) throw ParameterError("gaussian_count needs k >= 1");
    long long power = 1;
    for (int i = 0; i < k; ++i) power *= q;
    return (power - 1) / (q - 1);
}

SimplexFrame simplex_matrix(FieldOrder q, int k) {
    if (k < 1 || k > 4) throw ParameterError("simplex dimension must be in [1, 4], got " + std::to_string(k));
    std::vector<std::vector<std::uint8_t>> cols{{1}};
    for (int level = 2; level <= k; ++level) {
        std::vector<std::vector<std::uint8_t>> next;
        auto extended = [](const std::vector<std::uint8_t>& c, std::uint8_t last) {
            auto out = c;
            out.push_back(last);
            return out;
        };
        for (const auto& c : cols) next.push_back(extended(c, 0));
        std::vector<std::uint8_t> unit(static_cast<std::size_t>(level), 0);
        unit.back() = 1;
        next.push_back(unit);
        for (std::uint8_t last = 1; last < q.value(); ++last) {
            for (const auto& c : cols) next.push_back(extended(c, last));
        }
        cols = std::move(next);
    }
    GFMatrix m(q, static_cast<std::size_t>(k), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < k; ++r) m.set(static_cast<std::size_t>(r), c, cols[c][static_cast<std::size_t>(r)]);
    return {q, k, std::move(m), std::move(cols)};
}

namespace {

// Scale so the first nonzero coordinate is 1; returns false for the zero vector.
bool normalize(FieldOrder q, std::vector<std::uint8_t>& v) {
    auto it = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
    if (it == v.end()) return false;
    const std::uint8_t s = q.inv(*it);
    for (auto& x : v) x = q.mul(x, s);
    return true;
}

}  // namespace

std::size_t point_index(const SimplexFrame& frame, std::span<const std::uint8_t> v) {
    if (v.size() != static_cast<std::size_t>(frame.k)) throw ShapeError("point_index: vector length must equal k");
    std::vector<std::uint8_t> w;
    for (auto x : v) w.push_back(static_cast<std::uint8_t>(x % frame.q.value()));
    if (!normalize(frame.q, w)) throw DomainError("point_index: zero vector has no projective point");
    for (std::size_t i = 0; i < frame.points.size(); ++i)
        if (frame.points[i] == w) return i;
    throw DomainError("point_index: vector not found among simplex columns");
}

InducedPointGroup::InducedPointGroup(FieldOrder q_, int k_, std::size_t degree, std::vector<std::uint8_t> perms)
    : q(q_), k(k_), degree_(degree), perms_(std::move(perms)) {
    const std::size_t n = order();
    const std::size_t buckets = degree_ * degree_;
    std::vector<std::uint32_t> counts(buckets + 1, 0);
    for (std::size_t g = 0; g < n; ++g) {
        auto p = perm(g);
        ++counts[p[0] * degree_ + (degree_ > 1 ? p[1] : 0) + 1];
    }
    for (std::size_t b = 0; b < buckets; ++b) counts[b + 1] += counts[b];
    bucket_start_ = counts;
    bucket_items_.assign(n, 0);
    auto fill = counts;
    for (std::size_t g = 0; g < n; ++g) {
        auto p = perm(g);
        bucket_items_[fill[p[0] * degree_ + (degree_ > 1 ? p[1] : 0)]++] = static_cast<std::uint32_t>(g);
    }
}

std::span<const std::uint32_t> InducedPointGroup::with_prefix(std::size_t a, std::size_t b) const {
    const std::size_t idx = a * degree_ + b;
    return {bucket_items_.data() + bucket_start_[idx], bucket_start_[idx + 1] - bucket_start_[idx]};
}

InducedPointGroup induced_point_group(FieldOrder q, int k) {
    if (k < 2 || k > 4) throw ParameterError("induced_point_group needs 2 <= k <= 4");
    // PG(3,3) has 40 points and |PGL(4,3)| > 10^7; not tabulated.
    if (gaussian_count(q.value(), k) > 16) throw ParameterError("induced_point_group: PG(k-1,q) too large");
    const SimplexFrame frame = simplex_matrix(q, k);
    const std::size_t v = frame.size();
    const int qv = q.value();
    const std::size_t entries = static_cast<std::size_t>(k * k);

    // Encoded lookup from a normalized vector (base-q digits) to its point.
    std::size_t space = 1;
    for (int i = 0; i < k; ++i) space *= static_cast<std::size_t>(qv);
    std::vector<int> lookup(space, -1);
    auto encode = [&](const std::vector<std::uint8_t>& x) {
        std::size_t code = 0;
        for (int i = k - 1; i >= 0; --i) code = code * static_cast<std::size_t>(qv) + x[static_cast<std::size_t>(i)];
        return code;
    };
    for (std::size_t i = 0; i < v; ++i) lookup[encode(frame.points[i])] = static_cast<int>(i);

    std::set<std::vector<std::uint8_t>> seen;
    std::vector<int> digits(entries, 0);
    std::vector<std::uint8_t> perm(v);
    std::vector<std::uint8_t> image(static_cast<std::size_t>(k));
    bool done = false;
    while (!done) {
        GFMatrix u(q, static_cast<std::size_t>(k), static_cast<std::size_t>(k), digits);
        if (det(u) != 0) {
            for (std::size_t i = 0; i < v; ++i) {
                for (int r = 0; r < k; ++r) {
                    int acc = 0;
                    for (int c = 0; c < k; ++c) acc += u.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) * frame.points[i][static_cast<std::size_t>(c)];
                    image[static_cast<std::size_t>(r)] = static_cast<std::uint8_t>(acc % qv);
                }
                normalize(q, image);
                perm[i] = static_cast<std::uint8_t>(lookup[encode(image)]);
            }
            seen.insert(perm);
        }
        std::size_t pos = 0;
        while (pos < entries && ++digits[pos] == qv) digits[pos++] = 0;
        done = pos == entries;
    }
    std::vector<std::uint8_t> flat;
    flat.reserve(seen.size() * v);
    for (const auto& p : seen) flat.insert(flat.end(), p.begin(), p.end());
    return InducedPointGroup(q, k, v, std::move(flat));
}

DesignIncidence design_incidence(FieldOrder q, int k) {
    const SimplexFrame frame = simplex_matrix(q, k);
    const std::size_t v = frame.size();
    DesignIncidence out{q, k, v, std::vector<std::uint8_t>(v * v, 0)};
    for (std::size_t j = 0; j < v; ++j)
        for (std::size_t i = 0; i < v; ++i)
            out.a[j * v + i] = dot(q, frame.points[j], frame.points[i]) != 0 ? 1 : 0;
    return out;
}

namespace {

std::unique_ptr<PointGeometry> build_geometry(FieldOrder q, int k) {
    SimplexFrame frame = simplex_matrix(q, k);
    DesignIncidence design = design_incidence(q, k);
    InducedPointGroup group = induced_point_group(q, k);
    const std::size_t v = frame.size();
    const auto ku = static_cast<std::size_t>(k);

    std::vector<std::uint32_t> hyper(v, 0);
    for (std::size_t j = 0; j < v; ++j)
        for (std::size_t i = 0; i < v; ++i)
            if (design.at(j, i) == 0) hyper[j] |= (1u << i);

    std::vector<std::size_t> pivots;
    for (int b = 0; b < k; ++b) pivots.push_back(b == 0 ? 0 : static_cast<std::size_t>(gaussian_count(q.value(), b)));

    std::vector<std::uint8_t> outer(v * ku * ku);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t a = 0; a < ku; ++a)
            for (std::size_t b = 0; b < ku; ++b)
                outer[i * ku * ku + a * ku + b] = q.mul(frame.points[i][a], frame.points[i][b]);

    std::vector<std::uint8_t> full(std::size_t{1} << v, 0);
    for (std::size_t mask = 1; mask < full.size(); ++mask) {
        const auto cols = static_cast<std::size_t>(__builtin_popcountll(mask));
        GFMatrix g(q, ku, cols);
        std::size_t c = 0;
        for (std::size_t i = 0; i < v; ++i) {
            if (!(mask >> i & 1u)) continue;
            for (std::size_t r = 0; r < ku; ++r) g.set(r, c, frame.points[i][r]);
            ++c;
        }
        full[mask] = rank(g) == ku ? 1 : 0;
    }

    return std::make_unique<PointGeometry>(PointGeometry{std::move(frame), std::move(design), std::move(group), v,
                                                         std::move(hyper), std::move(pivots), std::move(outer),
                                                         std::move(full)});
}

}  // namespace

const PointGeometry& point_geometry(FieldOrder q, int k) {
    if (k < 2 || k > 4 || gaussian_count(q.value(), k) > 16) {
        throw ParameterError("point geometry needs 2 <= k <= 4 and at most 16 points");
    }
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<PointGeometry>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{q.value(), k}];
    if (!slot) slot = build_geometry(q, k);
    return *slot;
}

}  // namespace lcdkit
