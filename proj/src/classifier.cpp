#include "lcdkit/classifier.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>

#include "lcdkit/simplex.hpp"

namespace lcdkit {

namespace {

long long ipow(long long base, int e) {
    long long out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

long long floor_div(long long a, long long b) {
    long long qt = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --qt;
    return qt;
}

// Determinant mod q of a small k x k integer matrix (entries already reduced).
int small_det(int q, int k, int* a) {
    int result = 1;
    for (int c = 0; c < k; ++c) {
        int p = c;
        while (p < k && a[p * k + c] == 0) ++p;
        if (p == k) return 0;
        if (p != c) {
            for (int j = 0; j < k; ++j) std::swap(a[p * k + j], a[c * k + j]);
            result = (q - result) % q;
        }
        const int pivot = a[c * k + c];
        result = (result * pivot) % q;
        const int inv = pivot;  // self-inverse in GF(2) and GF(3)
        for (int i = c + 1; i < k; ++i) {
            if (a[i * k + c] == 0) continue;
            const int factor = (a[i * k + c] * inv) % q;
            for (int j = c; j < k; ++j) a[i * k + j] = ((a[i * k + j] - factor * a[c * k + j]) % q + q) % q;
        }
    }
    return result;
}

bool lcd_from_multiplicities(const PointGeometry& geo, std::span<const int> m) {
    const int k = geo.k();
    const int q = geo.q();
    int acc[16] = {0};
    const std::size_t kk = static_cast<std::size_t>(k * k);
    for (std::size_t i = 0; i < geo.v; ++i) {
        const int mi = m[i] % q;
        if (mi == 0) continue;
        const std::uint8_t* o = geo.outer.data() + i * kk;
        for (std::size_t e = 0; e < kk; ++e) acc[e] += mi * o[e];
    }
    for (std::size_t e = 0; e < kk; ++e) acc[e] %= q;
    return small_det(q, k, acc) != 0;
}

std::uint32_t support_mask(std::span<const int> m) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) mask |= 1u << i;
    return mask;
}

// Writes the lexicographically least orbit element of m into out.
void canonical_into(const PointGeometry& geo, std::span<const int> m, std::span<int> out) {
    const std::size_t v = geo.v;
    const InducedPointGroup& group = geo.group;
    int first = std::numeric_limits<int>::max();
    int second = std::numeric_limits<int>::max();
    for (std::size_t a = 0; a < v; ++a) {
        for (std::size_t b = 0; b < v; ++b) {
            if (a == b || group.with_prefix(a, b).empty()) continue;
            if (m[a] < first || (m[a] == first && m[b] < second)) {
                first = m[a];
                second = m[b];
            }
        }
    }
    bool have = false;
    for (std::size_t a = 0; a < v; ++a) {
        if (m[a] != first) continue;
        for (std::size_t b = 0; b < v; ++b) {
            if (a == b || m[b] != second) continue;
            for (std::uint32_t g : group.with_prefix(a, b)) {
                const auto p = group.perm(g);
                if (!have) {
                    for (std::size_t i = 0; i < v; ++i) out[i] = m[p[i]];
                    have = true;
                    continue;
                }
                for (std::size_t i = 2; i < v; ++i) {
                    const int x = m[p[i]];
                    if (x > out[i]) break;
                    if (x < out[i]) {
                        for (std::size_t j = i; j < v; ++j) out[j] = m[p[j]];
                        break;
                    }
                }
            }
        }
    }
}

std::string pack_key(std::span<const int> m) {
    std::string key(m.size() * 2, '\0');
    for (std::size_t i = 0; i < m.size(); ++i) {
        key[2 * i] = static_cast<char>(m[i] & 0xff);
        key[2 * i + 1] = static_cast<char>((m[i] >> 8) & 0xff);
    }
    return key;
}

class Search {
public:
    Search(const SearchParams& params, std::size_t shard, std::size_t shards)
        : geo_(point_geometry(FieldOrder(params.q), params.k)),
          params_(params),
          v_(geo_.v),
          shard_(shard),
          shards_(shards) {
        bounds_ = multiplicity_bounds(params.q, params.k, params.n, params.d);
        cap_ = params.n - params.d;
        m_.assign(v_, 0);
        hsum_.assign(v_, 0);
        lower_.assign(v_, bounds_.lo);
        is_pivot_.assign(v_, 0);
        block_pivot_.assign(v_, 0);
        if (params.normalization != Normalization::none) {
            for (auto p : geo_.pivots) lower_[p] = std::max(bounds_.lo, 1);
        }
        for (auto p : geo_.pivots) is_pivot_[p] = 1;
        for (std::size_t i = 0, b = 0; i < v_; ++i) {
            if (b + 1 < geo_.pivots.size() && i >= geo_.pivots[b + 1]) ++b;
            block_pivot_[i] = geo_.pivots[b];
        }
        hyper_of_point_.assign(v_, {});
        for (std::size_t h = 0; h < v_; ++h)
            for (std::size_t i = 0; i < v_; ++i)
                if (geo_.hyperplane_mask[h] >> i & 1u) hyper_of_point_[i].push_back(h);

        // Per depth j (coordinates j..v-1 free): counts and lower-bound sums
        // inside and outside each hyperplane.
        const std::size_t stride = v_;
        out_free_.assign((v_ + 1) * stride, 0);
        in_free_.assign((v_ + 1) * stride, 0);
        lo_in_.assign((v_ + 1) * stride, 0);
        lo_out_.assign((v_ + 1) * stride, 0);
        lo_free_.assign(v_ + 1, 0);
        for (std::size_t j = v_; j-- > 0;) {
            lo_free_[j] = lo_free_[j + 1] + lower_[j];
            for (std::size_t h = 0; h < v_; ++h) {
                const bool inside = geo_.hyperplane_mask[h] >> j & 1u;
                out_free_[j * stride + h] = out_free_[(j + 1) * stride + h] + (inside ? 0 : 1);
                in_free_[j * stride + h] = in_free_[(j + 1) * stride + h] + (inside ? 1 : 0);
                lo_in_[j * stride + h] = lo_in_[(j + 1) * stride + h] + (inside ? lower_[j] : 0);
                lo_out_[j * stride + h] = lo_out_[(j + 1) * stride + h] + (inside ? 0 : lower_[j]);
            }
        }
        split_depth_ = std::min<std::size_t>(3, v_);
    }

    void run(const CandidateVisitor& visit) {
        if (bounds_.empty() || params_.n < params_.k || params_.d < 1) return;
        visit_ = &visit;
        dfs(0, params_.n);
    }

private:
    // Upper bound for coordinate j given earlier assignments.
    int coordinate_cap(std::size_t j) const {
        if (params_.normalization != Normalization::flag_max || j == 0) return bounds_.hi;
        if (is_pivot_[j]) {
            const auto it = std::find(geo_.pivots.begin(), geo_.pivots.end(), j);
            return std::min(bounds_.hi, m_[*(it - 1)]);
        }
        return std::min(bounds_.hi, m_[block_pivot_[j]]);
    }

    // Upper bound shared by every coordinate after j once j is assigned.
    int free_cap(std::size_t j) const {
        if (params_.normalization != Normalization::flag_max) return bounds_.hi;
        return std::min(bounds_.hi, m_[block_pivot_[j]]);
    }

    bool feasible(std::size_t next, int remaining, int cap) const {
        const std::size_t stride = v_;
        const int nfree = static_cast<int>(v_ - next);
        if (remaining < lo_free_[next] || remaining > cap * nfree) return false;
        bool can_hit = params_.mode != WeightMode::exact;
        for (std::size_t h = 0; h < v_; ++h) {
            const int forced = std::max(lo_in_[next * stride + h], remaining - cap * out_free_[next * stride + h]);
            if (hsum_[h] + forced > cap_) return false;
            if (!can_hit) {
                const int room = std::min(remaining - lo_out_[next * stride + h], cap * in_free_[next * stride + h]);
                if (hsum_[h] + room >= cap_) can_hit = true;
            }
        }
        return can_hit;
    }

    void leaf() {
        if (params_.normalization != Normalization::flag_max && !geo_.full_rank_support[support_mask(m_)]) return;
        if (params_.mode == WeightMode::exact &&
            std::none_of(hsum_.begin(), hsum_.end(), [&](int s) { return s == cap_; })) {
            return;
        }
        if (!lcd_from_multiplicities(geo_, m_)) return;
        (*visit_)(m_);
    }

    void dfs(std::size_t j, int remaining) {
        if (j == v_) {
            if (remaining == 0) leaf();
            return;
        }
        if (j == split_depth_ && shards_ > 1) {
            if (counter_++ % shards_ != shard_) return;
        }
        const int top = std::min(coordinate_cap(j), remaining - lo_free_[j + 1]);
        for (int val = top; val >= lower_[j]; --val) {
            m_[j] = val;
            bool ok = true;
            for (std::size_t h : hyper_of_point_[j]) {
                hsum_[h] += val;
                if (hsum_[h] > cap_) ok = false;
            }
            const int rest = remaining - val;
            const int cap = free_cap(j);
            if (rest > cap * static_cast<int>(v_ - j - 1)) {
                for (std::size_t h : hyper_of_point_[j]) hsum_[h] -= val;
                break;  // smaller values leave even more mass
            }
            if (ok && feasible(j + 1, rest, cap)) dfs(j + 1, rest);
            for (std::size_t h : hyper_of_point_[j]) hsum_[h] -= val;
        }
        m_[j] = 0;
    }

    const PointGeometry& geo_;
    SearchParams params_;
    std::size_t v_;
    std::size_t shard_;
    std::size_t shards_;
    SearchBounds bounds_{};
    int cap_ = 0;
    std::vector<int> m_;
    std::vector<int> hsum_;
    std::vector<int> lower_;
    std::vector<std::uint8_t> is_pivot_;
    std::vector<std::size_t> block_pivot_;
    std::vector<std::vector<std::size_t>> hyper_of_point_;
    std::vector<int> out_free_, in_free_, lo_in_, lo_out_, lo_free_;
    std::size_t split_depth_ = 0;
    std::size_t counter_ = 0;
    const CandidateVisitor* visit_ = nullptr;
};

void require_supported(int q, int k) {
    if (!classification_supported(q, k)) {
        throw ParameterError("classification supports (q,k) in {(2,3),(2,4),(3,2),(3,3)}, got (" + std::to_string(q) +
                             "," + std::to_string(k) + ")");
    }
}

}  // namespace

bool classification_supported(int q, int k) {
    return (q == 2 && (k == 3 || k == 4)) || (q == 3 && (k == 2 || k == 3));
}

SearchBounds multiplicity_bounds(int q, int k, int n, int d) {
    if (!simplex_is_self_orthogonal(q, k)) throw ParameterError("multiplicity bounds need k >= k0");
    const long long lo = std::max<long long>(0, static_cast<long long>(q) * d - static_cast<long long>(q - 1) * n);
    // hi = floor(n - (q^{k-1} - 1) d / ((q-1) q^{k-2})), evaluated exactly.
    const long long den = (q - 1) * ipow(q, k - 2);
    const long long num = static_cast<long long>(n) * den - (ipow(q, k - 1) - 1) * d;
    const long long hi = floor_div(num, den);
    std::vector<std::size_t> pivots;
    for (int b = 0; b < k; ++b) pivots.push_back(b == 0 ? 0 : static_cast<std::size_t>(gaussian_count(q, b)));
    return {static_cast<int>(lo), static_cast<int>(hi), std::move(pivots)};
}

void enumerate_candidates(const SearchParams& params, const CandidateVisitor& visit) {
    require_supported(params.q, params.k);
    Search search(params, 0, 1);
    search.run(visit);
}

MultiplicityVector canonical_form(const MultiplicityVector& mv) {
    const PointGeometry& geo = point_geometry(mv.q, mv.k);
    std::vector<int> out(geo.v);
    canonical_into(geo, mv.m, out);
    return {mv.q, mv.k, std::move(out)};
}

bool are_equivalent(const MultiplicityVector& a, const MultiplicityVector& b) {
    if (!(a.q == b.q) || a.k != b.k) return false;
    return canonical_form(a) == canonical_form(b);
}

bool bruteforce_equiv_oracle(const GFMatrix& g1, const GFMatrix& g2) {
    const int q = g1.q();
    const std::size_t n = g1.cols();
    if ((q == 2 && n > 8) || (q == 3 && n > 6)) {
        throw ParameterError("bruteforce_equiv_oracle refuses n > 8 (binary) or n > 6 (ternary)");
    }
    if (!(g1.field() == g2.field()) || g1.rows() != g2.rows() || n != g2.cols()) return false;
    const std::size_t k = g1.rows();
    if (rank(g1) != k || rank(g2) != k) throw DomainError("bruteforce_equiv_oracle needs full-rank generators");

    std::size_t space = 1;
    for (std::size_t i = 0; i < n; ++i) space *= static_cast<std::size_t>(q);
    std::vector<std::uint8_t> in_c2(space, 0);
    std::vector<int> msg(k, 0);
    while (true) {
        std::size_t code = 0;
        for (std::size_t c = n; c-- > 0;) {
            int acc = 0;
            for (std::size_t r = 0; r < k; ++r) acc += msg[r] * g2.at(r, c);
            code = code * static_cast<std::size_t>(q) + static_cast<std::size_t>(acc % q);
        }
        in_c2[code] = 1;
        std::size_t pos = 0;
        while (pos < k && ++msg[pos] == q) msg[pos++] = 0;
        if (pos == k) break;
    }

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> place(n);
    std::vector<int> scale(n, 1);
    std::vector<std::size_t> weights(n);
    for (std::size_t c = 0; c < n; ++c) {
        weights[c] = 1;
        for (std::size_t i = 0; i < c; ++i) weights[c] *= static_cast<std::size_t>(q);
    }
    do {
        std::fill(scale.begin(), scale.end(), 1);
        while (true) {
            bool all_in = true;
            for (std::size_t r = 0; r < k && all_in; ++r) {
                std::size_t code = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    const int x = (g1.at(r, c) * scale[c]) % q;
                    code += static_cast<std::size_t>(x) * weights[perm[c]];
                }
                all_in = in_c2[code] != 0;
            }
            if (all_in) return true;
            std::size_t pos = 0;
            while (pos < n && ++scale[pos] == q) scale[pos++] = 1;
            if (pos == n) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

ClassificationResult classify(int q, int k, int n, int d, WeightMode mode, const ClassifyOptions& options) {
    require_supported(q, k);
    ClassificationResult result{q, k, n, d, mode, {}};
    const SearchParams params{q, k, n, d, mode, options.normalization};
    const PointGeometry& geo = point_geometry(FieldOrder(q), k);
    const std::size_t shards = static_cast<std::size_t>(std::max(1, options.workers));

    std::vector<std::unordered_set<std::string>> found(shards);
    std::vector<std::vector<std::vector<int>>> reps(shards);
    auto work = [&](std::size_t shard) {
        std::vector<int> canon(geo.v);
        Search search(params, shard, shards);
        search.run([&](std::span<const int> m) {
            canonical_into(geo, m, canon);
            if (found[shard].insert(pack_key(canon)).second) reps[shard].push_back(canon);
        });
    };
    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t s = 0; s < shards; ++s) threads.emplace_back(work, s);
        for (auto& t : threads) t.join();
    }

    std::vector<std::vector<int>> merged;
    for (auto& r : reps) merged.insert(merged.end(), r.begin(), r.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    for (auto& m : merged) result.representatives.emplace_back(FieldOrder(q), k, std::move(m));
    return result;
}

}  // namespace lcdkit
