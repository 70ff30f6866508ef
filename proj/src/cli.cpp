#include "invaut/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <ostream>
#include <sstream>

#include "invaut/aut_group.hpp"
#include "invaut/census.hpp"
#include "invaut/code_io.hpp"
#include "invaut/error.hpp"
#include "invaut/fixed_subcode.hpp"
#include "invaut/report_json.hpp"
#include "invaut/verifier.hpp"

namespace invaut {

namespace {

struct RunConfig {
    std::string input_path;
    std::string theorem_id;
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::optional<std::size_t> k_lo;
    std::optional<std::size_t> k_hi;
    std::size_t jobs = 1;
    std::string slice = "0/1";
    std::string journal_path;
    std::string output = "text";
    bool stable = false;

    std::size_t trials = 10'000;
    std::size_t n_max = 0;
    std::uint64_t seed = 1;
    std::size_t complements = 100;
    std::size_t chunks = 16;
    bool sigma_only = false;
    bool list = false;

    bool json() const { return output == "json"; }
};

Partition parse_slice(const std::string& text) {
    const auto slash = text.find('/');
    Partition p;
    auto number = [&](std::string_view s, std::size_t& v) {
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        return ec == std::errc() && end == s.data() + s.size() && !s.empty();
    };
    if (slash == std::string::npos || !number(std::string_view(text).substr(0, slash), p.index) ||
        !number(std::string_view(text).substr(slash + 1), p.total)) {
        throw InvalidInput("--slice expects i/t, got '" + text + "'");
    }
    if (p.total == 0 || p.index >= p.total) throw InvalidInput("--slice " + text + ": need 0 <= i < t");
    return p;
}

std::string join(const std::vector<std::uint64_t>& xs) {
    std::string s;
    for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

std::string join_perms(const std::vector<Perm>& ps) {
    if (ps.empty()) return "()";
    std::string s;
    for (const auto& p : ps) s += (s.empty() ? "" : ", ") + p.to_string();
    return s;
}

// analyze -------------------------------------------------------------------

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    const LinearCode code = read_code_file(cfg.input_path);
    const std::size_t n = code.length();
    Json doc;
    std::ostringstream text;
    int status = kExitClean;

    auto flush = [&] {
        if (cfg.json()) {
            out << doc.dump(2) << "\n";
        } else {
            out << text.str();
        }
    };

    doc["n"] = n;
    doc["k"] = code.dim();
    text << "n: " << n << "\nk: " << code.dim() << "\n";
    try {
        const auto wd = weight_distribution(code);
        const auto d = minimum_weight(code);
        doc["minimum_weight"] = d;
        doc["weight_distribution"] = wd.counts;
        text << "minimum weight: " << d << "\nweight distribution: " << join(wd.counts) << "\n";

        const auto group = paut(code);
        Json gens = Json::array();
        for (const auto& g : group.generators) gens.push_back(g.to_string());
        doc["paut_order"] = group.order;
        doc["paut_generators"] = gens;
        text << "PAut order: " << group.order << "\nPAut generators: " << join_perms(group.generators) << "\n";

        if (n <= kMaxGroupCodeLength) {
            const bool g = is_group_code(code);
            doc["group_code"] = g;
            text << "group code: " << (g ? "yes" : "no") << "\n";
        } else {
            doc["group_code"] = nullptr;
            text << "group code: not decided (n > " << kMaxGroupCodeLength << ")\n";
        }
        const bool quasi = is_quasi_group_code(code);
        doc["quasi_group_code"] = quasi;
        text << "quasi group code: " << (quasi ? "yes" : "no") << "\n";

        if (n % 2 != 0) {
            doc["sigma_in_paut"] = nullptr;
            text << "sigma: undefined for odd n\n";
        } else {
            const Perm sigma = canonical_sigma(n);
            const bool in = is_automorphism(code, sigma);
            doc["sigma_in_paut"] = in;
            text << "sigma " << sigma.to_string() << " in PAut: " << (in ? "yes" : "no") << "\n";
            if (in) {
                const auto f = fixed_subcode(code, sigma).dim();
                const auto t = t_sigma(code, sigma);
                doc["fixed_dim"] = f;
                doc["t_sigma"] = t.to_string();
                text << "dim F_sigma: " << f << "\nT(sigma): " << t.to_string() << "\n";
                if (!t.full() && n >= 4) {
                    const auto beta = fixed_point_witness(code, sigma);
                    doc["fixed_point_witness"] = beta->to_string();
                    text << "fixed-point witness: " << beta->to_string() << "\n";
                }
            }
        }
    } catch (const TooLarge& e) {
        doc["error"] = e.what();
        text << "stopped: " << e.what() << "\n";
        status = kExitTooLarge;
    }
    flush();
    return status;
}

// witness -------------------------------------------------------------------

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
    const LinearCode code = read_code_file(cfg.input_path);
    const std::size_t n = code.length();
    if (n % 2 != 0) throw NotInvariant("witness: sigma needs even length, got n = " + std::to_string(n));
    const Perm sigma = canonical_sigma(n);
    if (!is_automorphism(code, sigma)) {
        throw NotInvariant("witness: " + sigma.to_string() + " is not an automorphism of the code");
    }
    const auto w = extra_automorphism(code, sigma);
    if (cfg.json()) {
        Json doc;
        doc["sigma"] = sigma.to_string();
        doc["witness"] = w ? Json(w->perm.to_string()) : Json(nullptr);
        doc["path"] = w ? Json(to_string(w->path)) : Json(nullptr);
        out << doc.dump(2) << "\n";
    } else if (w) {
        out << w->perm.to_string() << " via " << to_string(w->path) << "\n";
    } else {
        out << "none\n";
    }
    return kExitClean;
}

// verify / conjecture ---------------------------------------------------------

void print_report(const VerifyReport& r, const RunConfig& cfg, std::ostream& out) {
    if (cfg.json()) {
        out << dump_report(r, cfg.stable);
        return;
    }
    out << "theorem: " << r.theorem_id << "\n"
        << "n: " << r.n << "\n"
        << "k: " << r.k_lo << ".." << r.k_hi << "\n"
        << "slice: " << r.slice.index << "/" << r.slice.total << "\n"
        << "scanned: " << r.scanned << "\n"
        << "witnesses checked: " << r.witnesses_checked << "\n"
        << "counterexamples: " << r.counterexamples.size() << "\n";
    for (const auto& ce : r.counterexamples) {
        out << "  [";
        bool first = true;
        for (const auto& g : ce.code.generators()) {
            out << (first ? "" : " ") << g.to_string();
            first = false;
        }
        out << "] " << ce.reason << "\n";
    }
    if (r.units_total != 0) {
        out << "units: " << r.units_total << " (" << r.units_resumed << " from journal)"
            << (r.complete ? "" : ", incomplete") << "\n";
    }
    if (!cfg.stable) out << "elapsed: " << r.elapsed_ms << " ms\n";
}

std::size_t n_or(const RunConfig& cfg, std::size_t fallback) { return cfg.n != 0 ? cfg.n : fallback; }

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const std::string& id = cfg.theorem_id;
    VerifyReport report;
    if (id == "lemma-2.1") {
        report = verify_half_dimension_bound(cfg.trials, cfg.n_max != 0 ? cfg.n_max : n_or(cfg, 12), cfg.seed);
    } else if (id == "lemma-2.2") {
        report = verify_partial_involution_bound(n_or(cfg, 6), cfg.jobs);
    } else if (id == "prop-3.1") {
        report = verify_dimension_one(n_or(cfg, 6));
    } else if (id == "thm-3.2") {
        report = verify_dimension_two(n_or(cfg, 6), cfg.k.value_or(2), cfg.jobs);
    } else if (id == "prop-3.4") {
        report = verify_length_four();
    } else if (id == "thm-4.2") {
        report = verify_fixed_dimension_interval(n_or(cfg, 6), cfg.jobs);
    } else if (id == "thm-4.4") {
        report = verify_dimension_four(n_or(cfg, 6), cfg.jobs);
    } else if (id == "thm-5.1") {
        report = verify_fixed_point_witnesses(cfg.trials, cfg.n_max != 0 ? cfg.n_max : n_or(cfg, 16), cfg.seed);
    } else if (id == "cor-4.8") {
        report = verify_no_sigma_only_codes(n_or(cfg, 6), cfg.jobs);
    } else if (id == "lemma-4.1") {
        report = verify_alpha_x_identity(cfg.trials, cfg.n_max != 0 ? cfg.n_max : n_or(cfg, 12), cfg.seed);
    } else if (id == "t-sigma") {
        report = verify_t_sigma_choice_free(std::min<std::size_t>(cfg.trials, 1000), cfg.complements,
                                            cfg.n_max != 0 ? cfg.n_max : n_or(cfg, 12), cfg.seed);
    } else {
        throw InvalidInput("unknown theorem id '" + id + "'");
    }
    print_report(report, cfg, out);
    return report.clean() ? kExitClean : kExitCounterexample;
}

int cmd_conjecture(const RunConfig& cfg, std::ostream& out) {
    ConjectureOptions opt;
    opt.n = n_or(cfg, 10);
    opt.k_lo = cfg.k ? *cfg.k : cfg.k_lo.value_or(5);
    opt.k_hi = cfg.k ? *cfg.k : cfg.k_hi.value_or(opt.n >= 5 ? opt.n - 5 : 0);
    opt.slice = parse_slice(cfg.slice);
    opt.jobs = cfg.jobs;
    opt.chunks = cfg.chunks;
    if (!cfg.journal_path.empty()) opt.journal = cfg.journal_path;
    const auto report = conjecture_search(opt);
    print_report(report, cfg, out);
    return report.clean() ? kExitClean : kExitCounterexample;
}

// census --------------------------------------------------------------------

int cmd_census(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n == 0) throw InvalidInput("census: --n is required");
    const std::size_t k_lo = cfg.k ? *cfg.k : cfg.k_lo.value_or(0);
    const std::size_t k_hi = cfg.k ? *cfg.k : cfg.k_hi.value_or(cfg.n);
    if (k_lo > k_hi || k_hi > cfg.n) throw InvalidInput("census: need k_lo <= k_hi <= n");
    const Partition slice = parse_slice(cfg.slice);
    Json rows = Json::array();
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
        CensusStream stream(CensusSlice{cfg.n, k, cfg.sigma_only, slice});
        std::uint64_t count = 0;
        LinearCode code;
        Json codes = Json::array();
        while (stream.next(code)) {
            ++count;
            if (cfg.list) {
                if (cfg.json()) {
                    codes.push_back(code_rows(code));
                } else {
                    out << "  [";
                    bool first = true;
                    for (const auto& g : code.generators()) {
                        out << (first ? "" : " ") << g.to_string();
                        first = false;
                    }
                    out << "]\n";
                }
            }
        }
        const std::uint64_t expected =
            cfg.sigma_only ? sigma_invariant_count(cfg.n, k) : gaussian_binomial(cfg.n, k);
        if (cfg.json()) {
            Json row{{"k", k}, {"count", count}, {"formula", expected}};
            if (cfg.list) row["codes"] = std::move(codes);
            rows.push_back(std::move(row));
        } else {
            out << "n=" << cfg.n << " k=" << k << ": " << count;
            if (slice.total == 1) out << (count == expected ? "" : "  (formula " + std::to_string(expected) + ")");
            out << "\n";
        }
    }
    if (cfg.json()) {
        Json doc;
        doc["n"] = cfg.n;
        doc["sigma_invariant_only"] = cfg.sigma_only;
        doc["slice"] = Json{{"index", slice.index}, {"total", slice.total}};
        doc["counts"] = std::move(rows);
        out << doc.dump(2) << "\n";
    }
    return kExitClean;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
}

void add_range(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--n", cfg.n, "code length");
    sub->add_option("--k", cfg.k, "dimension");
    sub->add_option("--k-lo", cfg.k_lo, "lowest dimension");
    sub->add_option("--k-hi", cfg.k_hi, "highest dimension");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Involutory automorphisms of binary linear codes", "invaut"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "Weights, PAut, sigma data of a code file");
    analyze->add_option("path", cfg.input_path, "code file")->required();
    add_common(analyze, cfg);

    auto* verify = app.add_subcommand("verify", "Run one verifier");
    verify->add_option("theorem", cfg.theorem_id, "lemma-2.1 lemma-2.2 prop-3.1 thm-3.2 prop-3.4 thm-4.2 thm-4.4 "
                                                  "thm-5.1 cor-4.8 lemma-4.1 t-sigma")
        ->required();
    add_range(verify, cfg);
    verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--trials", cfg.trials, "samples for property suites");
    verify->add_option("--n-max", cfg.n_max, "largest sampled length");
    verify->add_option("--seed", cfg.seed, "sampler seed");
    verify->add_option("--complements", cfg.complements, "complements per code (t-sigma)");
    verify->add_flag("--stable", cfg.stable, "report elapsed_ms as 0");
    add_common(verify, cfg);

    auto* conjecture = app.add_subcommand("conjecture", "Search sigma-invariant codes for PAut = <sigma>");
    add_range(conjecture, cfg);
    conjecture->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    conjecture->add_option("--slice", cfg.slice, "shard i/t");
    conjecture->add_option("--journal", cfg.journal_path, "NDJSON resume journal");
    conjecture->add_option("--chunks", cfg.chunks, "journal units per dimension")->check(CLI::PositiveNumber);
    conjecture->add_flag("--stable", cfg.stable, "report elapsed_ms as 0");
    add_common(conjecture, cfg);

    auto* witness = app.add_subcommand("witness", "Involution other than sigma for a sigma-invariant code");
    witness->add_option("path", cfg.input_path, "code file")->required();
    add_common(witness, cfg);

    auto* census = app.add_subcommand("census", "Count (or list) the codes of a census slice");
    add_range(census, cfg);
    census->add_option("--slice", cfg.slice, "shard i/t");
    census->add_flag("--sigma", cfg.sigma_only, "sigma-invariant codes only");
    census->add_flag("--list", cfg.list, "print every code");
    add_common(census, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitClean : kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(cfg, out);
        if (*verify) return cmd_verify(cfg, out);
        if (*conjecture) return cmd_conjecture(cfg, out);
        if (*witness) return cmd_witness(cfg, out);
        if (*census) return cmd_census(cfg, out);
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const NotInvariant& e) {
        err << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const NotFixed& e) {
        err << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace invaut
