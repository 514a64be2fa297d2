#include "lcdkit/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace lcdkit {

std::string format_matrix(const GFMatrix& g) {
    std::string out = "q=" + std::to_string(g.q()) + "\n";
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) out.push_back(static_cast<char>('0' + g.at(r, c)));
        out.push_back('\n');
    }
    return out;
}

GFMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int q = 0;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        if (line.empty()) continue;
        if (q == 0) {
            if (line.rfind("q=", 0) != 0) throw ParameterError("matrix text must start with a q=<2|3> line");
            try {
                q = std::stoi(line.substr(2));
            } catch (const std::exception&) {
                throw ParameterError("bad field header: " + line);
            }
            continue;
        }
        rows.push_back(line);
    }
    if (q == 0) throw ParameterError("matrix text is empty");
    const FieldOrder f(q);
    if (rows.empty()) throw ShapeError("matrix text has no rows");
    GFMatrix g(f, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.front().size()) throw ShapeError("matrix rows have different lengths");
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const char ch = rows[r][c];
            if (ch < '0' || ch - '0' >= q) throw ParameterError(std::string("entry '") + ch + "' is not in GF(q)");
            g.set(r, c, static_cast<std::uint8_t>(ch - '0'));
        }
    }
    return g;
}

void write_jsonl(std::ostream& out, const ClassificationResult& result) {
    for (const auto& rep : result.representatives) {
        nlohmann::ordered_json line;
        line["q"] = result.q;
        line["k"] = result.k;
        line["n"] = result.n;
        line["d"] = result.d;
        line["m"] = rep.m;
        line["canonical"] = true;
        out << line.dump() << '\n';
    }
}

void write_csv(std::ostream& out, const ClassificationResult& result) {
    out << "q,k,n,d,count\n"
        << result.q << ',' << result.k << ',' << result.n << ',' << result.d << ',' << result.count() << '\n';
}

std::vector<StoredRecord> read_jsonl(std::istream& in) {
    std::vector<StoredRecord> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            out.push_back({j.at("q").get<int>(), j.at("k").get<int>(), j.at("n").get<int>(), j.at("d").get<int>(),
                           j.at("m").get<std::vector<int>>()});
        } catch (const nlohmann::json::exception& e) {
            throw ParameterError("record line " + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(token, &used));
            if (used != token.size()) throw ParameterError("not an integer: " + token);
        } catch (const std::logic_error&) {
            throw ParameterError("not an integer: " + token);
        }
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '(' || ch == ')' || ch == '[' || ch == ']') {
            flush();
        } else {
            token.push_back(ch);
        }
    }
    flush();
    return out;
}

}  // namespace lcdkit
