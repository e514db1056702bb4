#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "mirrorgw/alpha_spec.hpp"
#include "mirrorgw/mirror_engine.hpp"
#include "mirrorgw/parallel.hpp"
#include "mirrorgw/suites.hpp"

namespace mgw::cli {

using nlohmann::ordered_json;

namespace {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_insertion(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw ConfigError("--insertion expects a,b: " + text);
    try {
        size_t used = 0;
        int a = std::stoi(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(text);
        std::string rest = text.substr(comma + 1);
        int b = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        return {a, b};
    } catch (const std::logic_error&) {
        throw ConfigError("--insertion expects two integers a,b: " + text);
    }
}

std::unique_ptr<SeriesCache> open_cache(const RunConfig& cfg) {
    if (const char* env = std::getenv("MIRROR_GW_CACHE"); env && *env) return std::make_unique<SeriesCache>(env);
    if (cfg.cache_dir) return std::make_unique<SeriesCache>(*cfg.cache_dir);
    return nullptr;
}

struct Geometry {
    int n = 0, a = 0, d_max = 0, u_order = 0;
};

Geometry resolve(const RunConfig& cfg, int default_n, int default_d_max) {
    Geometry g;
    g.n = cfg.n.value_or(default_n);
    g.a = cfg.a.value_or(g.n);
    g.d_max = cfg.d_max.value_or(default_d_max);
    g.u_order = cfg.u_order.value_or(g.d_max);
    try {
        validate_geometry(g.n, g.a);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (g.d_max < 1) throw ConfigError("--d-max must be at least 1");
    if (g.u_order < g.d_max) throw ConfigError("--u-order must be at least --d-max");
    if (cfg.threads < 1) throw ConfigError("--threads must be at least 1");
    return g;
}

// Builds the engine on first use, so a fully cached run never computes series.
class LazyEngine {
public:
    LazyEngine(int n, int a, int u_order, int threads) : n_(n), a_(a), u_order_(u_order), threads_(threads) {}
    const MirrorEngine& get() {
        if (!engine_) engine_ = std::make_unique<MirrorEngine>(n_, a_, u_order_, threads_);
        return *engine_;
    }

private:
    int n_, a_, u_order_, threads_;
    std::unique_ptr<MirrorEngine> engine_;
};

std::string key_id(const InvariantKey& k) {
    return std::to_string(k.d) + ":" + std::to_string(k.a1) + "," + std::to_string(k.b1) + ";" + std::to_string(k.a2) +
           "," + std::to_string(k.b2);
}

// Invariants for the given keys, served from the cache when an entry exists.
std::vector<GwValue> invariants_for(const std::vector<InvariantKey>& keys, const Geometry& g, LazyEngine& engine,
                                    SeriesCache* cache) {
    std::string id = "gw";
    for (const auto& k : keys) id += "|" + key_id(k);
    CacheKey ck{g.n, g.a, "gw#" + fnv1a_hex(id), g.u_order};
    std::vector<GwValue> out;
    if (cache) {
        if (auto hit = cache->load(ck); hit && hit->size() == keys.size()) {
            for (size_t i = 0; i < keys.size(); ++i)
                out.push_back({Rational::parse((*hit)[i]), dimension_ok(g.n, g.a, keys[i]) ? "" : "dimension"});
            return out;
        }
    }
    std::vector<std::string> payload;
    for (const auto& k : keys) {
        out.push_back(engine.get().invariant(k));
        payload.push_back(out.back().value.str());
    }
    if (cache) cache->store(ck, payload);
    return out;
}

void check_key_ranges(int n, const std::pair<int, int>& ins) {
    if (ins.first < 0) throw ConfigError("descendant exponent must be nonnegative");
    if (ins.second < 0 || ins.second >= n) throw ConfigError("H exponent must lie in [0, n-1]");
}

BPSTable bps_table(const Geometry& g, std::pair<int, int> i1, std::pair<int, int> i2, LazyEngine& engine,
                   SeriesCache* cache) {
    std::vector<InvariantKey> keys;
    for (int d = 1; d <= g.d_max; ++d) {
        InvariantKey k{d, i1.first, i1.second, i2.first, i2.second};
        if (!dimension_ok(g.n, g.a, k)) throw ConfigError("insertions fail the dimension condition in degree " + std::to_string(d));
        keys.push_back(k);
    }
    std::vector<GwValue> values = invariants_for(keys, g, engine, cache);
    std::map<int, Rational> gw;
    for (size_t i = 0; i < keys.size(); ++i) gw[keys[i].d] = values[i].value;
    BPSTable t = bps_transform(gw, g.d_max);
    t.n = g.n;
    t.a = g.a;
    t.a1 = i1.first;
    t.b1 = i1.second;
    t.a2 = i2.first;
    t.b2 = i2.second;
    return t;
}

ordered_json table_json(const BPSTable& t) {
    ordered_json j;
    j["n"] = t.n;
    j["a"] = t.a;
    j["insertions"] = ordered_json::array({ordered_json{{"a", t.a1}, {"b", t.b1}}, ordered_json{{"a", t.a2}, {"b", t.b2}}});
    j["rows"] = ordered_json::array();
    for (const auto& e : t.entries) j["rows"].push_back({{"d", e.d}, {"gw", e.gw.str()}, {"bps", e.bps.str()}});
    j["integral"] = t.all_integral();
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

constexpr const char* csv_header = "n,a,d,a1,b1,a2,b2,value";

void csv_row(std::ostream& out, int n, int a, const InvariantKey& k, const std::string& value) {
    out << n << ',' << a << ',' << k.d << ',' << k.a1 << ',' << k.b1 << ',' << k.a2 << ',' << k.b2 << ','
        << csv_field(value) << "\r\n";
}

void write_tables(std::ostream& out, const std::vector<BPSTable>& tables, const std::string& format, bool single) {
    if (format == "csv") {
        out << csv_header << "\r\n";
        for (const auto& t : tables)
            for (const auto& e : t.entries) csv_row(out, t.n, t.a, {e.d, t.a1, t.b1, t.a2, t.b2}, e.bps.str());
        return;
    }
    if (single) {
        out << table_json(tables.front()).dump(2) << '\n';
        return;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& t : tables) arr.push_back(table_json(t));
    out << arr.dump(2) << '\n';
}

std::pair<std::pair<int, int>, std::pair<int, int>> insertion_pair(const RunConfig& cfg, int n) {
    if (cfg.insertions.empty()) {
        int b1 = std::max(0, (n - 3) / 2);
        return {{0, b1}, {0, std::max(0, n - 3 - b1)}};
    }
    if (cfg.insertions.size() != 2) throw ConfigError("--insertion must be given exactly twice");
    check_key_ranges(n, cfg.insertions[0]);
    check_key_ranges(n, cfg.insertions[1]);
    return {cfg.insertions[0], cfg.insertions[1]};
}

int cmd_table(const RunConfig& cfg, std::ostream& out, int default_n) {
    Geometry g = resolve(cfg, default_n, 10);
    if (g.a != g.n) throw ConfigError("BPS numbers are defined here for a = n only");
    auto [i1, i2] = insertion_pair(cfg, g.n);
    auto cache = open_cache(cfg);
    LazyEngine engine(g.n, g.a, g.u_order, cfg.threads);
    BPSTable t = bps_table(g, i1, i2, engine, cache.get());
    write_tables(out, {t}, cfg.format, true);
    return t.all_integral() ? exit_ok : exit_failure;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.n) throw ConfigError("sweep needs --n-max");
    if (!cfg.insertions.empty()) throw ConfigError("sweep chooses its own insertion pairs");
    const int n_max = *cfg.n;
    if (cfg.n_min < 4 || cfg.n_min > n_max) throw ConfigError("need 4 <= --n-min <= --n-max");
    auto cache = open_cache(cfg);

    // one work item per n; every pair H^{b1}, H^{b2} with 1 <= b1 <= b2, b1 + b2 = n - 3
    const int count = n_max - cfg.n_min + 1;
    std::vector<std::vector<BPSTable>> per_n(static_cast<size_t>(count));
    std::vector<Geometry> geos;
    for (int n = cfg.n_min; n <= n_max; ++n) {
        RunConfig c = cfg;
        c.n = n;
        geos.push_back(resolve(c, n, 12));
    }
    parallel_for(count, cfg.threads, [&](int idx) {
        const Geometry& g = geos[static_cast<size_t>(idx)];
        LazyEngine engine(g.n, g.a, g.u_order, 1);
        for (int b1 = 1; 2 * b1 <= g.n - 3; ++b1)
            per_n[static_cast<size_t>(idx)].push_back(bps_table(g, {0, b1}, {0, g.n - 3 - b1}, engine, cache.get()));
    });
    std::vector<BPSTable> tables;
    for (auto& v : per_n)
        for (auto& t : v) tables.push_back(std::move(t));
    write_tables(out, tables, cfg.format, false);
    bool ok = std::all_of(tables.begin(), tables.end(), [](const BPSTable& t) { return t.all_integral(); });
    return ok ? exit_ok : exit_failure;
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.n) throw ConfigError("invariants needs --n");
    if (!cfg.d_max) throw ConfigError("invariants needs --d-max");
    Geometry g = resolve(cfg, *cfg.n, *cfg.d_max);
    std::vector<InvariantKey> keys;
    if (!cfg.insertions.empty()) {
        auto [i1, i2] = insertion_pair(cfg, g.n);
        for (int d = 1; d <= g.d_max; ++d) keys.push_back({d, i1.first, i1.second, i2.first, i2.second});
    } else {
        // every dimension-valid key, ordered by (d, a1, b1, a2, b2)
        for (int d = 1; d <= g.d_max; ++d) {
            const int total = g.n - 3 + (g.n - g.a) * d;
            for (int a1 = 0; a1 <= total; ++a1)
                for (int b1 = 0; b1 < g.n; ++b1)
                    for (int a2 = 0; a2 <= total; ++a2)
                        for (int b2 = 0; b2 < g.n; ++b2) {
                            InvariantKey k{d, a1, b1, a2, b2};
                            if (dimension_ok(g.n, g.a, k)) keys.push_back(k);
                        }
        }
    }
    auto cache = open_cache(cfg);
    LazyEngine engine(g.n, g.a, g.u_order, cfg.threads);
    std::vector<GwValue> values = invariants_for(keys, g, engine, cache.get());

    if (cfg.format == "csv") {
        out << csv_header << "\r\n";
        for (size_t i = 0; i < keys.size(); ++i) csv_row(out, g.n, g.a, keys[i], values[i].value.str());
        return exit_ok;
    }
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < keys.size(); ++i) {
        const auto& k = keys[i];
        ordered_json row{{"n", g.n}, {"a", g.a}, {"d", k.d}, {"a1", k.a1}, {"b1", k.b1},
                         {"a2", k.a2}, {"b2", k.b2}, {"value", values[i].value.str()}};
        if (!values[i].reason.empty()) row["reason"] = values[i].reason;
        arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
    return exit_ok;
}

ordered_json report_json(const Report& r) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    ordered_json failures = ordered_json::array();
    for (const auto& f : r.failures) {
        ordered_json fj;
        fj["i"] = f.i >= 0 ? ordered_json(f.i + 1) : ordered_json(nullptr);
        fj["d"] = f.d >= 0 ? ordered_json(f.d) : ordered_json(nullptr);
        fj["detail"] = f.detail;
        failures.push_back(std::move(fj));
    }
    return {{"suite", r.suite}, {"params", params}, {"status", r.passed() ? "PASS" : "FAIL"}, {"failures", failures}};
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    Geometry g = resolve(cfg, 3, 3);
    if (g.n < 2) throw ConfigError("verification needs n >= 2");
    if (cfg.format != "json") throw ConfigError("verification reports are JSON only");
    std::vector<std::string> suites = cfg.suites.empty() ? suite_names() : cfg.suites;
    for (const auto& s : suites)
        if (!is_suite_name(s)) throw ConfigError("unknown suite: " + s);
    std::unique_ptr<AlphaSpec> spec;
    try {
        spec = std::make_unique<AlphaSpec>(cfg.alpha ? AlphaSpec::parse(*cfg.alpha, g.a, g.d_max)
                                                     : AlphaSpec::default_for(g.n, g.a, g.d_max));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("rejected weights: ") + e.what());
    }
    if (spec->n() != g.n) throw ConfigError("--alpha must list exactly n weights");

    SuiteOptions opt;
    opt.max_degree = g.d_max;
    opt.mutate = cfg.mutate;
    std::vector<Report> reports = run_suites(suites, *spec, opt);
    ordered_json arr = ordered_json::array();
    bool ok = true;
    for (const auto& r : reports) {
        arr.push_back(report_json(r));
        ok = ok && r.passed();
    }
    out << arr.dump(2) << '\n';
    return ok ? exit_ok : exit_failure;
}

std::unique_ptr<SeriesCache> require_cache(const RunConfig& cfg) {
    auto c = open_cache(cfg);
    if (!c) throw ConfigError("no cache directory: pass --cache-dir or set MIRROR_GW_CACHE");
    return c;
}

int cmd_cache_stat(const RunConfig& cfg, std::ostream& out) {
    auto cache = require_cache(cfg);
    CacheStat s = cache->stat();
    ordered_json j{{"directory", cache->directory().string()},
                   {"format_version", SeriesCache::format_version},
                   {"entries", s.entries},
                   {"invalid", s.invalid},
                   {"bytes", s.bytes}};
    out << j.dump(2) << '\n';
    return exit_ok;
}

int cmd_cache_clear(const RunConfig& cfg, std::ostream& out) {
    auto cache = require_cache(cfg);
    std::size_t removed = cache->clear();
    out << ordered_json{{"directory", cache->directory().string()}, {"removed", removed}}.dump(2) << '\n';
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::vector<std::string> insertion_text;

    CLI::App app{"Genus-zero GW invariants and BPS counts of projective hypersurfaces", "mirrorgw"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto geometry = [&](CLI::App* s) {
        s->add_option("--n", cfg.n, "projective space P^{n-1}");
        s->add_option("--a", cfg.a, "hypersurface degree (default n)");
        s->add_option("--d-max", cfg.d_max, "largest curve degree");
        s->add_option("--u-order", cfg.u_order, "series truncation order (default d-max)");
        s->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    };
    auto output = [&](CLI::App* s) {
        s->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        s->add_option("--cache-dir", cfg.cache_dir, "series cache directory (MIRROR_GW_CACHE overrides)");
    };
    auto insertions = [&](CLI::App* s) {
        s->add_option("--insertion", insertion_text, "a,b for tau_a H^b; give exactly twice");
    };

    auto* table = app.add_subcommand("table", "BPS table of a Calabi-Yau hypersurface (default n = 7)");
    geometry(table);
    output(table);
    insertions(table);
    auto* bps = app.add_subcommand("bps", "GW and BPS numbers for one insertion pair");
    geometry(bps);
    output(bps);
    insertions(bps);
    bps->get_option("--n")->required();
    auto* sweep = app.add_subcommand("sweep", "integrality sweep over Calabi-Yau hypersurfaces");
    sweep->add_option("--n-min", cfg.n_min, "smallest n")->capture_default_str();
    sweep->add_option("--n-max", cfg.n, "largest n")->required();
    sweep->add_option("--d-max", cfg.d_max, "largest curve degree");
    sweep->add_option("--u-order", cfg.u_order, "series truncation order (default d-max)");
    sweep->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    output(sweep);
    auto* inv = app.add_subcommand("invariants", "two-point invariants <tau_a1 H^b1, tau_a2 H^b2>_d");
    geometry(inv);
    output(inv);
    insertions(inv);
    auto* verify = app.add_subcommand("verify", "equivariant verification suites");
    geometry(verify);
    verify->add_option("--alpha", cfg.alpha, "torus weights c1,...,cn");
    verify->add_option("--suite", cfg.suites, "suite to run (repeatable)");
    verify->add_flag("--mutate", cfg.mutate, "feed series with an injected pole");
    verify->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json", "csv"}));
    auto* cache = app.add_subcommand("cache", "inspect or clear the series cache");
    cache->require_subcommand(1);
    auto* clear = cache->add_subcommand("clear", "remove all entries");
    auto* stat = cache->add_subcommand("stat", "count entries");
    for (auto* s : {clear, stat}) s->add_option("--cache-dir", cfg.cache_dir, "series cache directory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        for (const auto& t : insertion_text) cfg.insertions.push_back(parse_insertion(t));
        if (table->parsed()) return cmd_table(cfg, out, 7);
        if (bps->parsed()) return cmd_table(cfg, out, 0);
        if (sweep->parsed()) return cmd_sweep(cfg, out);
        if (inv->parsed()) return cmd_invariants(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (clear->parsed()) return cmd_cache_clear(cfg, out);
        if (stat->parsed()) return cmd_cache_stat(cfg, out);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::invalid_argument& e) {
        err << "configuration error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::out_of_range& e) {
        err << "configuration error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_config;
}

}  // namespace mgw::cli
