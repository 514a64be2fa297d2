#include "lcdkit/expected.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "lcdkit/errors.hpp"

namespace lcdkit {

CostClass parse_cost_class(const std::string& text) {
    if (text == "FAST") return CostClass::fast;
    if (text == "MEDIUM") return CostClass::medium;
    if (text == "HEAVY") return CostClass::heavy;
    throw ParameterError("unknown cost class: " + text);
}

const char* cost_class_name(CostClass c) {
    switch (c) {
        case CostClass::fast: return "FAST";
        case CostClass::medium: return "MEDIUM";
        case CostClass::heavy: return "HEAVY";
    }
    return "?";
}

ExpectedTables load_expected_tables(const std::filesystem::path& root) {
    ExpectedTables out;
    const auto dir = root / "expected";
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    if (ec) throw ParameterError("cannot read expected tables in " + dir.string());
    std::sort(files.begin(), files.end());

    for (const auto& path : files) {
        std::ifstream in(path);
        try {
            const auto doc = nlohmann::json::parse(in);
            const auto table = doc.at("name").get<std::string>();
            const auto kind = doc.at("kind").get<std::string>();
            const int q = doc.at("q").get<int>();
            const int k = doc.at("k").get<int>();
            for (const auto& e : doc.at("entries")) {
                const auto citation = e.at("citation").get<std::string>();
                if (kind == "counts") {
                    out.counts.push_back({table, q, k, e.at("n").get<int>(), e.at("d").get<int>(),
                                          e.at("count").get<std::size_t>(),
                                          parse_cost_class(e.at("cost").get<std::string>()), citation});
                } else if (kind == "vectors") {
                    out.vectors.push_back({table, e.at("name").get<std::string>(), q, k, e.at("n").get<int>(),
                                           e.at("d").get<int>(), e.at("m").get<std::vector<int>>(), citation});
                } else if (kind == "families") {
                    out.families.push_back({table, q, k, e.at("t").get<int>(), e.at("alpha").get<int>(),
                                            e.at("s_prime").get<int>(), e.at("r").get<long long>(),
                                            e.at("count").get<std::size_t>(), citation});
                } else {
                    throw ParameterError("unknown table kind: " + kind);
                }
            }
        } catch (const nlohmann::json::exception& e) {
            throw ParameterError(path.string() + ": " + e.what());
        }
    }
    return out;
}

}  // namespace lcdkit
