#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lcdkit/classifier.hpp"

namespace lcdkit {

/// $LCDKIT_FIXTURES if set, else the data/fixtures directory of the source tree.
std::filesystem::path fixture_root();

/// Classification results stored as classes/q<q>_k<k>_n<n>_d<d>.jsonl.
/// Files are read lazily and validated (rank, LCD, d-perp >= 2, exact
/// minimum weight, canonical form) the first time they are loaded.
class FixtureStore {
public:
    explicit FixtureStore(std::filesystem::path root);

    static const FixtureStore& default_store();

    const std::filesystem::path& root() const noexcept { return root_; }

    /// (n, d) pairs with a stored file for (q, k), ascending in n.
    std::vector<std::pair<int, int>> available(int q, int k) const;

    /// Throws Error when a stored file fails validation.
    std::optional<ClassificationResult> load(int q, int k, int n, int d) const;

    static std::string file_name(int q, int k, int n, int d);

    /// Writes result in line-record format to its slot under root/classes.
    static void save(const std::filesystem::path& root, const ClassificationResult& result);

private:
    std::filesystem::path root_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<int, int, int, int>, ClassificationResult> cache_;
};

/// Validation failures of one stored record, empty when it is sound.
std::vector<std::string> validate_record(int q, int k, int n, int d, const std::vector<int>& m);

}  // namespace lcdkit
