#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace lcdkit {

/// FAST < 1 s, MEDIUM < 5 min, HEAVY < 2 h at desk scale.
enum class CostClass { fast, medium, heavy };

CostClass parse_cost_class(const std::string& text);
const char* cost_class_name(CostClass c);

/// Number of inequivalent optimal LCD [n,k,d] codes with d-perp >= 2.
struct CountEntry {
    std::string table;
    int q;
    int k;
    int n;
    int d;
    std::size_t count;
    CostClass cost;
    std::string citation;
};

/// A published multiplicity vector, positions in simplex column order.
struct VectorEntry {
    std::string table;
    std::string name;
    int q;
    int k;
    int n;
    int d;
    std::vector<int> m;
    std::string citation;
};

/// Family n = [k]_q s + t, d = q^{k-1} s + alpha with its threshold s',
/// residual r and class count for s >= s'.
struct FamilyRow {
    std::string table;
    int q;
    int k;
    int t;
    int alpha;
    int s_prime;
    long long r;
    std::size_t count;
    std::string citation;
};

struct ExpectedTables {
    std::vector<CountEntry> counts;
    std::vector<VectorEntry> vectors;
    std::vector<FamilyRow> families;
};

/// Reads every root/expected/*.json file. Throws ParameterError on malformed data.
ExpectedTables load_expected_tables(const std::filesystem::path& root);

}  // namespace lcdkit
