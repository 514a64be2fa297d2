#include "lcdkit/store.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>

#include "lcdkit/io.hpp"
#include "lcdkit/simplex.hpp"

#ifndef LCDKIT_DEFAULT_FIXTURES
#define LCDKIT_DEFAULT_FIXTURES "data/fixtures"
#endif

namespace lcdkit {

std::filesystem::path fixture_root() {
    if (const char* env = std::getenv("LCDKIT_FIXTURES"); env != nullptr && *env != '\0') return env;
    return LCDKIT_DEFAULT_FIXTURES;
}

FixtureStore::FixtureStore(std::filesystem::path root) : root_(std::move(root)) {}

const FixtureStore& FixtureStore::default_store() {
    static const FixtureStore store(fixture_root());
    return store;
}

std::string FixtureStore::file_name(int q, int k, int n, int d) {
    return "q" + std::to_string(q) + "_k" + std::to_string(k) + "_n" + std::to_string(n) + "_d" + std::to_string(d) +
           ".jsonl";
}

std::vector<std::pair<int, int>> FixtureStore::available(int q, int k) const {
    std::vector<std::pair<int, int>> out;
    const auto dir = root_ / "classes";
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) return out;
    static const std::regex pattern(R"(q(\d+)_k(\d+)_n(\d+)_d(\d+)\.jsonl)");
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        std::smatch match;
        const std::string name = entry.path().filename().string();
        if (!std::regex_match(name, match, pattern)) continue;
        if (std::stoi(match[1]) != q || std::stoi(match[2]) != k) continue;
        out.emplace_back(std::stoi(match[3]), std::stoi(match[4]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> validate_record(int q, int k, int n, int d, const std::vector<int>& m) {
    std::vector<std::string> problems;
    try {
        const MultiplicityVector mv(FieldOrder(q), k, m);
        if (mv.length() != n) problems.push_back("length " + std::to_string(mv.length()) + " != n");
        if (code_rank(mv) != static_cast<std::size_t>(k)) {
            problems.push_back("rank below k");
            return problems;
        }
        if (!is_lcd(mv)) problems.push_back("not LCD");
        const int w = min_weight(mv);
        if (w != d) problems.push_back("minimum weight " + std::to_string(w) + " != d");
        if (!dual_distance_at_least(generator_from_multiplicity(mv), 2)) problems.push_back("zero column");
        if (classification_supported(q, k) && !(canonical_form(mv) == mv)) problems.push_back("not canonical");
    } catch (const Error& e) {
        problems.push_back(e.what());
    }
    return problems;
}

std::optional<ClassificationResult> FixtureStore::load(int q, int k, int n, int d) const {
    std::lock_guard lock(mutex_);
    const auto key = std::make_tuple(q, k, n, d);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const auto path = root_ / "classes" / file_name(q, k, n, d);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    ClassificationResult result{q, k, n, d, WeightMode::exact, {}};
    for (auto& rec : read_jsonl(in)) {
        if (rec.q != q || rec.k != k || rec.n != n || rec.d != d) {
            throw Error(path.string() + ": record parameters do not match the file name");
        }
        if (auto problems = validate_record(q, k, n, d, rec.m); !problems.empty()) {
            throw Error(path.string() + ": invalid record: " + problems.front());
        }
        result.representatives.emplace_back(FieldOrder(q), k, std::move(rec.m));
    }
    cache_.emplace(key, result);
    return result;
}

void FixtureStore::save(const std::filesystem::path& root, const ClassificationResult& result) {
    const auto dir = root / "classes";
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / file_name(result.q, result.k, result.n, result.d));
    if (!out) throw Error("cannot write " + (dir / file_name(result.q, result.k, result.n, result.d)).string());
    write_jsonl(out, result);
}

}  // namespace lcdkit
