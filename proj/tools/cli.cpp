#include "cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcdkit/classifier.hpp"
#include "lcdkit/expected.hpp"
#include "lcdkit/io.hpp"
#include "lcdkit/oracle.hpp"
#include "lcdkit/simplex.hpp"
#include "lcdkit/store.hpp"
#include "lcdkit/theory.hpp"

namespace lcdkit::cli {

namespace {

struct Common {
    int q = 0;
    int k = 0;
};

void add_qk(CLI::App* cmd, Common& c) {
    cmd->add_option("--q", c.q, "field order (2 or 3)")->required();
    cmd->add_option("--k", c.k, "dimension")->required();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_dmax(const Common& c, int n, const std::string& format, std::ostream& out) {
    const auto a = largest_lcd_weight(c.q, c.k, n);
    if (format == "jsonl") {
        nlohmann::ordered_json j;
        j["q"] = a.q;
        j["k"] = a.k;
        j["n"] = a.n;
        j["d"] = a.d;
        j["t"] = a.t;
        j["branch"] = a.branch;
        j["citation"] = a.citation;
        out << j.dump() << '\n';
    } else if (format == "csv") {
        out << "q,k,n,d,t\n" << a.q << ',' << a.k << ',' << a.n << ',' << a.d << ',' << a.t << '\n';
    } else {
        out << a.d << '\n' << "branch: " << a.branch << '\n' << "citation: " << a.citation << '\n';
    }
    return ok;
}

WeightMode parse_mode(const std::string& mode) {
    if (mode == "exact") return WeightMode::exact;
    if (mode == "at-least") return WeightMode::at_least;
    throw ParameterError("mode must be exact or at-least");
}

Normalization parse_normalization(const std::string& s) {
    if (s == "flag") return Normalization::flag_max;
    if (s == "pivot") return Normalization::pivot;
    if (s == "none") return Normalization::none;
    throw ParameterError("normalization must be flag, pivot or none");
}

void emit(const ClassificationResult& r, const std::string& format, std::ostream& out) {
    if (format == "csv") {
        write_csv(out, r);
    } else {
        write_jsonl(out, r);
    }
}

int cmd_classify(const Common& c, int n, int d, const std::string& mode, const std::string& out_path,
                 const std::string& format, int workers, const std::string& normalization, std::ostream& out) {
    if (workers < 1) throw ParameterError("--workers must be at least 1");
    ClassifyOptions options{parse_normalization(normalization), workers};
    const auto result = classify(c.q, c.k, n, d, parse_mode(mode), options);
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw ParameterError("cannot write " + out_path);
        emit(result, format == "text" ? "jsonl" : format, file);
        out << "count: " << result.count() << '\n';
    } else if (format == "text") {
        out << "count: " << result.count() << '\n';
    } else {
        emit(result, format, out);
    }
    return ok;
}

int cmd_equiv(const Common& c, const std::string& m1, const std::string& m2, std::ostream& out) {
    const MultiplicityVector a(FieldOrder(c.q), c.k, parse_int_list(m1));
    const MultiplicityVector b(FieldOrder(c.q), c.k, parse_int_list(m2));
    if (!classification_supported(c.q, c.k)) throw ParameterError("equiv supports (2,3), (2,4), (3,2), (3,3)");
    if (code_rank(a) != static_cast<std::size_t>(c.k) || code_rank(b) != static_cast<std::size_t>(c.k)) {
        throw ParameterError("both multiplicity vectors must have rank k");
    }
    out << (are_equivalent(a, b) ? "true" : "false") << '\n';
    return ok;
}

int cmd_oracle(const Common& c, int n, bool compare, const std::string& g1, const std::string& g2,
               std::ostream& out) {
    if (!g1.empty() || !g2.empty()) {
        if (g1.empty() || g2.empty()) throw ParameterError("--g1 and --g2 go together");
        const bool eq = bruteforce_equiv_oracle(parse_matrix(read_file(g1)), parse_matrix(read_file(g2)));
        out << (eq ? "true" : "false") << '\n';
        return ok;
    }
    if (n < 1) throw ParameterError("--n is required");
    const auto counts = bruteforce_lcd_counts(c.q, c.k, n);
    int status = ok;
    for (int d = 1; d <= n; ++d) {
        const auto it = counts.find(d);
        const std::size_t expected = it == counts.end() ? 0 : it->second;
        if (!compare) {
            if (expected > 0) out << "d=" << d << " count=" << expected << '\n';
            continue;
        }
        const std::size_t got = classify(c.q, c.k, n, d, WeightMode::exact).count();
        if (expected == 0 && got == 0) continue;
        out << (expected == got ? "PASS" : "FAIL") << " d=" << d << " oracle=" << expected << " classify=" << got
            << '\n';
        if (expected != got) status = mismatch;
    }
    return status;
}

class Verifier {
public:
    Verifier(int workers, std::ostream& out) : workers_(workers), out_(out) {}

    const ClassificationResult& classified(int q, int k, int n, int d) {
        const auto key = std::make_tuple(q, k, n, d);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, classify(q, k, n, d, WeightMode::exact, {Normalization::flag_max, workers_}))
                     .first;
        }
        return it->second;
    }

    void check(bool pass, const std::string& table, const std::string& row, const std::string& expected,
               const std::string& got) {
        if (pass) {
            ++passed_;
            out_ << "PASS " << table << " | " << row << " | " << expected << '\n';
        } else {
            ++failed_;
            out_ << "FAIL " << table << " | " << row << " | expected " << expected << " | got " << got << '\n';
        }
    }

    void skip() { ++skipped_; }

    int finish() {
        out_ << "verify-tables: " << passed_ << " passed, " << failed_ << " failed, " << skipped_ << " skipped\n";
        return failed_ == 0 ? ok : mismatch;
    }

private:
    int workers_;
    std::ostream& out_;
    std::map<std::tuple<int, int, int, int>, ClassificationResult> cache_;
    int passed_ = 0;
    int failed_ = 0;
    int skipped_ = 0;
};

std::string nd(int n, int d) { return "n=" + std::to_string(n) + " d=" + std::to_string(d); }

int cmd_verify_tables(const std::string& filter, bool all, int workers, std::ostream& out) {
    if (workers < 1) throw ParameterError("--workers must be at least 1");
    const auto root = fixture_root();
    if (!std::filesystem::is_directory(root / "expected")) {
        throw DataUnavailable("no expected tables under " + root.string());
    }
    const auto tables = load_expected_tables(root);
    const FixtureStore store(root);
    Verifier v(workers, out);
    auto selected = [&](const std::string& table) { return filter.empty() || table.find(filter) != std::string::npos; };

    std::map<std::tuple<int, int, int, int>, std::size_t> expected_counts;
    for (const auto& e : tables.counts) {
        expected_counts[{e.q, e.k, e.n, e.d}] = e.count;
        if (!selected(e.table)) continue;
        if (e.cost == CostClass::heavy && !all) {
            v.skip();
            continue;
        }
        const std::string row = nd(e.n, e.d);
        const int dmax = largest_lcd_weight(e.q, e.k, e.n).d;
        v.check(dmax == e.d, e.table, row + " (d_q(n,k))", std::to_string(e.d), std::to_string(dmax));
        const auto got = v.classified(e.q, e.k, e.n, e.d).count();
        v.check(got == e.count, e.table, row, "count " + std::to_string(e.count), std::to_string(got));
    }

    for (const auto& e : tables.vectors) {
        if (!selected(e.table)) continue;
        const auto problems = validate_record(e.q, e.k, e.n, e.d, e.m);
        bool sound = true;
        std::string why;
        for (const auto& p : problems) {
            if (p == "not canonical") continue;
            sound = false;
            why = p;
        }
        v.check(sound, e.table, e.name, "LCD " + nd(e.n, e.d) + " d-perp>=2", why);
        if (!sound) continue;
        const MultiplicityVector mv(FieldOrder(e.q), e.k, e.m);
        std::size_t matches = 0;
        for (const auto& rep : v.classified(e.q, e.k, e.n, e.d).representatives)
            if (are_equivalent(mv, rep)) ++matches;
        v.check(matches == 1, e.table, e.name, "equivalent to exactly 1 class",
                std::to_string(matches) + " classes");
    }

    for (const auto& e : tables.families) {
        if (!selected(e.table)) continue;
        const int size = static_cast<int>(gaussian_count(e.q, e.k));
        int lead = 1;
        for (int i = 1; i < e.k; ++i) lead *= e.q;
        const std::string row = "t=" + std::to_string(e.t);
        const int s = e.s_prime;
        const int n = size * s + e.t;
        const int d = lead * s + e.alpha;
        const long long r = residual_r(e.q, n, e.k, d);
        v.check(r == e.r, e.table, row + " r", std::to_string(e.r), std::to_string(r));
        const int sp = threshold_s_prime(e.q, e.k, e.t, e.alpha);
        v.check(sp == e.s_prime, e.table, row + " s'", std::to_string(e.s_prime), std::to_string(sp));
        const int dmax = largest_lcd_weight(e.q, e.k, n).d;
        v.check(dmax == d, e.table, row + " d at s=s'", std::to_string(d), std::to_string(dmax));
        const auto got = v.classified(e.q, e.k, n, d).count();
        v.check(got == e.count, e.table, row + " count at s=s'", std::to_string(e.count), std::to_string(got));
    }

    if (selected("classes")) {
        for (auto [q, k] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 2}, std::pair{3, 3}}) {
            for (auto [n, d] : store.available(q, k)) {
                const std::string table = "classes q=" + std::to_string(q) + " k=" + std::to_string(k);
                try {
                    const auto loaded = store.load(q, k, n, d);
                    const auto it = expected_counts.find({q, k, n, d});
                    if (it != expected_counts.end()) {
                        v.check(loaded->count() == it->second, table, nd(n, d), "count " + std::to_string(it->second),
                                std::to_string(loaded->count()));
                    } else {
                        v.check(true, table, nd(n, d), "valid records", "");
                    }
                } catch (const Error& e) {
                    v.check(false, table, nd(n, d), "valid records", e.what());
                }
            }
        }
    }
    return v.finish();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classification and construction of optimal LCD codes over GF(2) and GF(3)", "lcdkit"};
    app.require_subcommand(1);

    Common c;
    int n = 0;
    int d = 0;
    int workers = 1;
    std::string format = "text";
    const std::vector<std::string> formats{"text", "jsonl", "csv"};

    auto* dmax = app.add_subcommand("dmax", "largest minimum weight of an LCD [n,k] code");
    add_qk(dmax, c);
    dmax->add_option("--n", n)->required();
    dmax->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* cls = app.add_subcommand("classify", "inequivalent LCD [n,k,d] codes with d-perp >= 2");
    add_qk(cls, c);
    std::string mode = "exact";
    std::string out_path;
    std::string normalization = "flag";
    cls->add_option("--n", n)->required();
    cls->add_option("--d", d)->required();
    cls->add_option("--mode", mode, "exact or at-least");
    cls->add_option("--out", out_path, "write records here");
    cls->add_option("--format", format)->check(CLI::IsMember(formats));
    cls->add_option("--workers", workers);
    cls->add_option("--normalization", normalization, "flag, pivot or none");

    auto* expand = app.add_subcommand("expand", "generator matrix of an optimal LCD [n,k] code");
    add_qk(expand, c);
    expand->add_option("--n", n)->required();

    auto* equiv = app.add_subcommand("equiv", "equivalence of two multiplicity vectors");
    add_qk(equiv, c);
    std::string m1;
    std::string m2;
    equiv->add_option("--m1", m1)->required();
    equiv->add_option("--m2", m2)->required();

    auto* verify = app.add_subcommand("verify-tables", "recompute the expected tables");
    std::string filter;
    bool all = false;
    verify->add_option("--table", filter, "only tables whose name contains this");
    verify->add_flag("--all", all, "include HEAVY entries");
    verify->add_option("--workers", workers);

    auto* oracle = app.add_subcommand("oracle", "brute-force classification or equivalence");
    add_qk(oracle, c);
    bool compare = false;
    std::string g1;
    std::string g2;
    oracle->add_option("--n", n);
    oracle->add_flag("--compare", compare, "compare counts with classify");
    oracle->add_option("--g1", g1, "matrix file");
    oracle->add_option("--g2", g2, "matrix file");

    std::vector<const char*> argv{"lcdkit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : parameter_error;
    }

    try {
        if (*dmax) return cmd_dmax(c, n, format, out);
        if (*cls) return cmd_classify(c, n, d, mode, out_path, format, workers, normalization, out);
        if (*expand) {
            out << format_matrix(optimal_generator(FixtureStore(fixture_root()), c.q, c.k, n));
            return ok;
        }
        if (*equiv) return cmd_equiv(c, m1, m2, out);
        if (*verify) return cmd_verify_tables(filter, all, workers, out);
        if (*oracle) return cmd_oracle(c, n, compare, g1, g2, out);
    } catch (const DataUnavailable& e) {
        err << "error: " << e.what() << '\n';
        return data_unavailable;
    } catch (const ParameterError& e) {
        err << "error: unsupported or invalid parameters: " << e.what() << '\n';
        return parameter_error;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << '\n';
        return parameter_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return parameter_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return mismatch;
    }
    return parameter_error;
}

}  // namespace lcdkit::cli
