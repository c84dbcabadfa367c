// tvpm: exact Tverberg plus-minus partitions from the command line.
//
// Exit codes: 0 found / certificate / verified, 1 not found / claim violated,
// 2 usage error, malformed input or degenerate configuration.

#include <tvpm/json_io.hpp>
#include <tvpm/tvpm.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace tvpm;
using io::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

void write_json(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump() << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump() << '\n';
}

json weights_json(const std::vector<Rat>& w) {
    json o = json::object();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!w[i].is_zero()) o[std::to_string(i)] = w[i].str();
    return o;
}

// --m / --prescribe when given, else the "m" field of the input, else empty.
IndexSet resolve_m(const std::optional<std::vector<std::size_t>>& flag, const json& in) {
    if (flag) return IndexSet(flag->begin(), flag->end());
    if (auto m = io::m_from_json(in)) return *m;
    return {};
}

json not_found_json(const SearchResult& res) {
    return json{{"schema", io::kSchema},
                {"result", "not_found"},
                {"partitions_scanned", res.partitions_scanned},
                {"degenerate_skipped", res.degenerate_skipped}};
}

// ---- gen / example ----

struct GenOpts {
    std::size_t d = 2, r = 3;
    std::uint64_t seed = 0;
    bool colored = false;
    std::string out;
};

int cmd_gen(const GenOpts& o) {
    json j;
    if (o.colored) j = io::classes_to_json(random_color_classes(o.d, o.r, o.seed));
    else j = io::config_to_json(random_config(o.d, o.r, o.seed));
    j["generator"] = o.colored ? "gen --colored" : "gen";
    j["seed"] = o.seed;
    write_json(j, o.out);
    return kOk;
}

struct ExampleOpts {
    int kind = 1;
    std::size_t d = 2, r = 3;
    std::string eps = "1/100";
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_example(const ExampleOpts& o) {
    const Rat eps = Rat::parse(o.eps);
    const Instance inst = o.kind == 1 ? example1(o.d, o.r, eps, o.seed) : example2(o.d, o.r, eps, o.seed);
    json j = io::config_to_json(inst.config, inst.m_set);
    j["generator"] = "example " + std::to_string(o.kind);
    j["eps"] = eps.str();
    j["seed"] = o.seed;
    write_json(j, o.out);
    return kOk;
}

// ---- solve ----

struct SolveOpts {
    std::string input, out;
    std::optional<std::vector<std::size_t>> m;
    bool trace = false;
};

int cmd_solve(const SolveOpts& o) {
    const json in = read_json(o.input);
    const PointConfig cfg = io::config_from_json(in);
    const IndexSet m = normalize_index_set(resolve_m(o.m, in), cfg.n());
    PivotObserver trace;
    if (o.trace)
        trace = [](const PivotStep& s) {
            json line{{"iteration", s.iteration}, {"choice", s.choice}, {"w", io::to_json(s.w)},
                      {"norm2", s.norm2.str()}};
            std::cerr << line.dump() << '\n';
        };
    const auto res = tverberg_pm(cfg, m, trace);
    if (!res.separated) std::cerr << "warning: conv(M) and conv(rest) intersect; no sign guarantee\n";
    const auto& rec = res.recovered;

    json j;
    switch (rec.kind) {
        case RecoverKind::Certificate:
            j = io::certificate_to_json(*rec.partition, *rec.cert);
            j["alternative"] = to_string(*rec.alternative);
            break;
        case RecoverKind::SeparationViolated: {
            j = json{{"schema", io::kSchema}, {"result", "separation_violated"}};
            json parts = json::array();
            for (const auto& p : rec.raw_parts) parts.push_back(io::to_json(p));
            j["raw_parts"] = std::move(parts);
            if (rec.evidence) {
                j["evidence"] = json{{"part", rec.evidence->part},
                                     {"point", io::to_json(rec.evidence->point)},
                                     {"weights_m", weights_json(rec.evidence->weights_m)},
                                     {"weights_rest", weights_json(rec.evidence->weights_rest)}};
            }
            break;
        }
        case RecoverKind::DegenerateGamma:
            j = json{{"schema", io::kSchema}, {"result", "degenerate_gamma"}};
            break;
    }
    j["m"] = io::to_json(m);
    j["separated"] = res.separated;
    j["pivots"] = res.run.norm_history.size() - 1;
    write_json(j, o.out);
    if (rec.kind == RecoverKind::Certificate) return kOk;
    if (rec.kind == RecoverKind::SeparationViolated) return kNegative;
    std::cerr << "degenerate input: gamma = 0\n";
    return kUsage;
}

// ---- search / spectrum / separation ----

struct SearchOpts {
    std::string input, out;
    std::optional<std::size_t> k;
    std::optional<std::vector<std::size_t>> prescribe;
};

int cmd_search(const SearchOpts& o) {
    const json in = read_json(o.input);
    const PointConfig cfg = io::config_from_json(in);
    SearchResult res;
    if (o.k) res = search_exact_k(cfg, *o.k);
    else res = search_prescribed(cfg, resolve_m(o.prescribe, in));
    if (!res.found()) {
        write_json(not_found_json(res), o.out);
        return kNegative;
    }
    json j = io::certificate_to_json(*res.partition, *res.cert);
    j["partitions_scanned"] = res.partitions_scanned;
    j["degenerate_skipped"] = res.degenerate_skipped;
    write_json(j, o.out);
    return kOk;
}

int cmd_spectrum(const std::string& input, const std::string& outp) {
    const PointConfig cfg = io::config_from_json(read_json(input));
    require_full(cfg, "spectrum");
    json j{{"schema", io::kSchema}, {"result", "spectrum"}};
    if (cfg.r() == 2 && cfg.n() == cfg.d() + 2) {
        const auto s = radon_spectrum(cfg);
        j["achievable"] = s.achievable;
        j["partitions_scanned"] = s.partitions_scanned;
        j["degenerate_skipped"] = s.degenerate_skipped;
        j["affine_dependence"] = io::to_json(s.affine_dependence);
    } else {
        const auto s = sign_census(cfg);
        j["achievable"] = s.counts;
        j["partitions_scanned"] = s.partitions_scanned;
        j["degenerate_skipped"] = s.degenerate_skipped;
    }
    write_json(j, outp);
    return kOk;
}

int cmd_separation(const std::string& input, const std::string& outp,
                   const std::optional<std::vector<std::size_t>>& mflag) {
    const json in = read_json(input);
    const PointConfig cfg = io::config_from_json(in);
    const IndexSet m = resolve_m(mflag, in);
    const auto s = check_separation(cfg, m);
    json j{{"schema", io::kSchema}, {"m", io::to_json(normalize_index_set(m, cfg.n()))}};
    if (s.separated) {
        j["result"] = "separated";
        j["normal"] = io::to_json(s.normal);
        j["offset"] = s.offset.str();
    } else {
        j["result"] = "not_separated";
        j["point"] = io::to_json(s.point);
        j["weights_m"] = weights_json(s.weights_m);
        j["weights_rest"] = weights_json(s.weights_rest);
    }
    write_json(j, outp);
    return s.separated ? kOk : kNegative;
}

// ---- colored ----

int cmd_colored(const std::string& input, const std::string& outp,
                const std::optional<std::vector<std::size_t>>& mflag) {
    const json in = read_json(input);
    const ColorClasses cc = io::classes_from_json(in);
    const IndexSet m = normalize_index_set(resolve_m(mflag, in), cc.n());
    const auto res = colored_tverberg_pm(cc, m);
    if (res.degenerate_gamma) {
        write_json(json{{"schema", io::kSchema}, {"result", "degenerate_gamma"}, {"m", io::to_json(m)}}, outp);
        std::cerr << "degenerate input: gamma = 0\n";
        return kUsage;
    }
    json j = io::colorful_to_json(*res.partition);
    j["m"] = io::to_json(m);
    j["alternative"] = res.alternative ? json(to_string(*res.alternative)) : json(nullptr);
    write_json(j, outp);
    return kOk;
}

// ---- verify ----

int cmd_verify(const std::string& input, const std::string& config_path) {
    const json cert = read_json(input);
    io::check_schema(cert);
    const json cfg_json = read_json(config_path);
    const std::string kind = cert.value("result", "");
    VerifyReport rep;
    if (kind == "certificate") {
        const PointConfig cfg = io::config_from_json(cfg_json);
        const auto [p, c] = io::certificate_from_json(cert);
        if (p.n() != cfg.n()) throw InputError("certificate partition does not cover the configuration");
        rep = verify_certificate(cfg, p, c);
    } else if (kind == "colored") {
        rep = verify_colorful(io::classes_from_json(cfg_json), io::colorful_from_json(cert));
    } else {
        throw InputError("verify: input has no verifiable result (\"" + kind + "\")");
    }
    for (const auto& v : rep.violations) std::cerr << "violated: " << v << '\n';
    write_json(json{{"schema", io::kSchema}, {"result", rep.ok ? "verified" : "violation"},
                    {"violations", rep.violations}},
               "");
    return rep.ok ? kOk : kNegative;
}

// ---- batch ----

struct BatchOpts {
    std::size_t d = 2, r = 3;
    std::optional<std::size_t> k, m_size;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::string out;
};

struct TrialRow {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string outcome;
    std::size_t negatives = 0;
    std::size_t scanned = 0;
};

// Trial t uses seed + t for the configuration (and the subset under --m-size).
TrialRow run_trial(const BatchOpts& o, std::size_t t) {
    TrialRow row;
    row.trial = t;
    row.seed = o.seed + t;
    const PointConfig cfg = random_config(o.d, o.r, row.seed);
    if (o.k) {
        const auto res = search_exact_k(cfg, *o.k);
        row.outcome = res.found() ? "found" : "not_found";
        row.negatives = res.found() ? res.cert->negatives.size() : 0;
        row.scanned = res.partitions_scanned;
    } else {
        const auto res = tverberg_pm(cfg, separated_subset(cfg, *o.m_size, row.seed));
        const auto& rec = res.recovered;
        row.outcome = rec.kind == RecoverKind::Certificate ? to_string(*rec.alternative) : to_string(rec.kind);
        row.negatives = rec.cert ? rec.cert->negatives.size() : 0;
        row.scanned = res.run.norm_history.size() - 1;
    }
    return row;
}

int cmd_batch(const BatchOpts& o) {
    if (o.k.has_value() == o.m_size.has_value()) throw CLI::ValidationError("batch: give exactly one of --k or --m-size");
    std::vector<TrialRow> rows(o.trials);
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::optional<std::string> failure;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<std::size_t>(o.threads ? o.threads : hw, std::max<std::size_t>(o.trials, 1));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t t; (t = next++) < o.trials;) {
                try {
                    rows[t] = run_trial(o, t);
                } catch (const std::exception& e) {
                    std::lock_guard lock(err_mu);
                    if (!failure) failure = "trial " + std::to_string(t) + ": " + e.what();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) throw std::runtime_error(*failure);

    std::map<std::string, std::size_t> counts;
    for (const auto& r : rows) ++counts[r.outcome];

    std::ostringstream csv;
    const std::string policy = o.k ? "k=" + std::to_string(*o.k) : "m_size=" + std::to_string(*o.m_size);
    csv << "# tvpm batch d=" << o.d << " r=" << o.r << ' ' << policy << " trials=" << o.trials
        << " seed=" << o.seed << '\n';
    csv << "# columns: trial,seed,d,r,policy,outcome,negatives,work"
           " (work = partitions scanned for k, pivots for m_size)\n";
    csv << "trial,seed,d,r,policy,outcome,negatives,work\n";
    for (const auto& r : rows)
        csv << r.trial << ',' << r.seed << ',' << o.d << ',' << o.r << ',' << policy << ',' << r.outcome << ','
            << r.negatives << ',' << r.scanned << '\n';
    csv << "# summary";
    for (const auto& [name, c] : counts) csv << ' ' << name << '=' << c << '/' << o.trials;
    csv << '\n';

    if (o.out.empty() || o.out == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream f(o.out);
        if (!f) throw InputError("cannot write " + o.out);
        f << csv.str();
    }
    std::cerr << csv.str().substr(csv.str().rfind("# summary"));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Tverberg plus-minus partitions"};
    app.require_subcommand(1);

    GenOpts gen;
    auto* g = app.add_subcommand("gen", "random full-size configuration in general position");
    g->add_option("--d", gen.d, "dimension")->check(CLI::Range(1, 64));
    g->add_option("--r", gen.r, "number of parts")->check(CLI::Range(2, 64));
    g->add_option("--seed", gen.seed, "RNG seed");
    g->add_flag("--colored", gen.colored, "emit (r-1)d+1 color classes of r points instead");
    g->add_option("--out", gen.out, "output file (default stdout)");

    ExampleOpts ex;
    auto* e = app.add_subcommand("example", "clustered counterexample configurations");
    e->add_option("--kind", ex.kind, "1: center plus vertex clusters, 2: r points at one vertex")
        ->check(CLI::IsMember({1, 2}));
    e->add_option("--d", ex.d, "dimension")->check(CLI::Range(1, 64));
    e->add_option("--r", ex.r, "number of parts")->check(CLI::Range(2, 64));
    e->add_option("--eps", ex.eps, "cluster radius as p/q");
    e->add_option("--seed", ex.seed, "RNG seed");
    e->add_option("--out", ex.out, "output file (default stdout)");

    SolveOpts so;
    auto* s = app.add_subcommand("solve", "lift and pivot to a certificate with sign pattern M");
    s->add_option("--input", so.input, "config JSON (default stdin)");
    s->add_option("--m", so.m, "comma separated indices of M (default: the input's \"m\")")->delimiter(',');
    s->add_flag("--trace", so.trace, "per-iteration JSON lines on stderr");
    s->add_option("--out", so.out, "output file (default stdout)");

    SearchOpts se;
    auto* sr = app.add_subcommand("search", "exhaustive scan of proper partitions");
    sr->add_option("--input", se.input, "config JSON (default stdin)");
    auto* k_opt = sr->add_option("--k", se.k, "exactly k negative coefficients");
    sr->add_option("--prescribe", se.prescribe, "negatives exactly these indices (default: the input's \"m\")")
        ->delimiter(',')
        ->excludes(k_opt);
    sr->add_option("--out", se.out, "output file (default stdout)");

    std::string sp_in, sp_out;
    auto* spc = app.add_subcommand("spectrum", "every achievable number of negatives");
    spc->add_option("--input", sp_in, "config JSON (default stdin)");
    spc->add_option("--out", sp_out, "output file (default stdout)");

    std::string sep_in, sep_out;
    std::optional<std::vector<std::size_t>> sep_m;
    auto* sep = app.add_subcommand("separation", "strict separation of conv M from the rest");
    sep->add_option("--input", sep_in, "config JSON (default stdin)");
    sep->add_option("--m", sep_m, "comma separated indices of M (default: the input's \"m\")")->delimiter(',');
    sep->add_option("--out", sep_out, "output file (default stdout)");

    std::string col_in, col_out;
    std::optional<std::vector<std::size_t>> col_m;
    auto* col = app.add_subcommand("colored", "colorful partition with equal coefficients per class");
    col->add_option("--input", col_in, "color classes JSON (default stdin)");
    col->add_option("--m", col_m, "comma separated class indices of M")->delimiter(',');
    col->add_option("--out", col_out, "output file (default stdout)");

    std::string ver_in, ver_cfg;
    auto* ver = app.add_subcommand("verify", "re-check a certificate against its input");
    ver->add_option("--input", ver_in, "certificate JSON (default stdin)");
    ver->add_option("--config", ver_cfg, "config or color classes JSON")->required();

    BatchOpts ba;
    auto* b = app.add_subcommand("batch", "seeded trials as CSV");
    b->add_option("--d", ba.d, "dimension")->check(CLI::Range(1, 64));
    b->add_option("--r", ba.r, "number of parts")->check(CLI::Range(2, 64));
    auto* bk = b->add_option("--k", ba.k, "search for exactly k negatives");
    b->add_option("--m-size", ba.m_size, "solve with a random separated M of this size")->excludes(bk);
    b->add_option("--trials", ba.trials, "number of trials");
    b->add_option("--seed", ba.seed, "base seed; trial t uses seed + t");
    b->add_option("--threads", ba.threads, "worker threads (default: hardware)");
    b->add_option("--out", ba.out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
        if (*g) return cmd_gen(gen);
        if (*e) return cmd_example(ex);
        if (*s) return cmd_solve(so);
        if (*sr) return cmd_search(se);
        if (*spc) return cmd_spectrum(sp_in, sp_out);
        if (*sep) return cmd_separation(sep_in, sep_out, sep_m);
        if (*col) return cmd_colored(col_in, col_out, col_m);
        if (*ver) return cmd_verify(ver_in, ver_cfg);
        if (*b) return cmd_batch(ba);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return err.get_exit_code() == 0 ? kOk : kUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
