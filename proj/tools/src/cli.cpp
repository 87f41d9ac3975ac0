#include "cli.hpp"

#include "qccs/analysis.hpp"
#include "qccs/construction.hpp"
#include "qccs/error.hpp"
#include "qccs/formats.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

namespace qccs::cli {
namespace {

class IoError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::optional<int> p;
    std::optional<int> m;
    std::optional<int> n;
    std::optional<int> lambda;
    std::string seed_path;
    std::string J_spec;
    std::string out_path;
    std::string format = "json";
    double tol = 1e-6;
    bool exact = false;
    unsigned threads = 0;
    bool ccc_only = false;
    std::optional<int> k;
    std::string input_path;
    std::vector<int> pair;
    std::optional<std::int64_t> K;
    std::optional<std::int64_t> M;
    std::optional<std::int64_t> L;
    std::optional<double> theta;
    bool table = false;
    std::optional<int> prior_size;
    std::vector<int> trend;
};

std::string num(double v) {
    if (!std::isfinite(v)) {
        return v > 0 ? "inf" : "nan";
    }
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw IoError("cannot write " + path);
    }
}

std::vector<int> parse_list(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::logic_error&) {
            throw InvalidInput("bad integer list \"" + spec + "\"");
        }
        if (used != item.size()) {
            throw InvalidInput("bad integer list \"" + spec + "\"");
        }
        out.push_back(v);
    }
    return out;
}

Params params_of(const RunConfig& cfg) {
    return Params::make(*cfg.p, *cfg.m, *cfg.n, cfg.lambda.value_or(*cfg.p));
}

CodeFamily load_family(const std::string& path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return formats::family_from_json(text);
    }
    return formats::family_from_csv(text);
}

SeedSpec seed_of(const RunConfig& cfg, const Params& params) {
    if (cfg.seed_path.empty()) {
        if (!cfg.J_spec.empty()) {
            throw InvalidInput("--J needs --seed");
        }
        return canonical_seed(params);
    }
    const Polynomial f = formats::polynomial_from_json(read_file(cfg.seed_path));
    const auto& s = f.space();
    if (s.p != params.p || s.m != params.m || s.lambda != params.lambda) {
        throw InvalidInput("seed function space (p, m, lambda) = (" + std::to_string(s.p) + ", " +
                           std::to_string(s.m) + ", " + std::to_string(s.lambda) + ") does not match the parameters");
    }
    std::vector<int> J(static_cast<std::size_t>(params.n));
    std::iota(J.begin(), J.end(), 0);
    if (!cfg.J_spec.empty()) {
        J = parse_list(cfg.J_spec);
        if (static_cast<int>(J.size()) != params.n) {
            throw InvalidInput("--J must list exactly n variables");
        }
    }
    return make_seed(f, J);
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    const Params params = params_of(cfg);
    const SeedSpec seed = seed_of(cfg, params);
    const CodeFamily family = cfg.ccc_only ? build_ccc_family(seed, *cfg.k, cfg.threads) : build_qccs(seed, cfg.threads);

    std::string path = cfg.out_path;
    if (path.empty()) {
        std::ostringstream name;
        name << "qccs_p" << params.p << "_m" << params.m << "_n" << params.n << "_l" << params.lambda;
        if (cfg.ccc_only) {
            name << "_k" << *cfg.k;
        }
        name << '.' << cfg.format;
        path = name.str();
    }
    write_file(path, cfg.format == "csv" ? formats::family_to_csv(family) : formats::family_to_json(family));

    const auto& d = family.descriptor;
    out << "kind: " << (family.kind == FamilyKind::ccc ? "ccc" : "qccs") << '\n'
        << "K: " << d.K << '\n'
        << "M: " << d.M << '\n'
        << "L: " << d.L << '\n'
        << "theta_bound: " << d.theta_bound << '\n'
        << "lambda: " << d.alphabet << '\n'
        << "path: " << path << '\n';
    return kPass;
}

void print_peak(std::ostream& out, const CorrelationPeak& peak) {
    out << "  peak at codes (" << peak.code_a << ", " << peak.code_b << "), tau " << peak.tau << ", |value| "
        << num(peak.magnitude) << '\n';
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const CodeFamily family = load_family(cfg.input_path);
    ReportOptions opts;
    opts.zero_tol = cfg.tol;
    opts.exact = cfg.exact;
    opts.threads = cfg.threads;
    const auto v = verify_family(family.codes, family.descriptor.theta_bound, opts);
    const auto& d = family.descriptor;
    const auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };

    out << "family: " << (family.kind == FamilyKind::ccc ? "ccc" : "qccs") << " K=" << d.K << " M=" << d.M
        << " L=" << d.L << " lambda=" << d.alphabet << '\n';
    for (const auto& s : v.per_set) {
        out << "set k=" << s.k << ": theta=" << num(s.report.theta) << " tol=" << num(cfg.tol) << ' '
            << verdict(s.pass) << '\n';
        if (!s.pass) {
            print_peak(out, s.report.peak);
        }
    }
    if (v.cross_set) {
        out << "cross-set: theta2=" << num(v.cross_set->theta2) << " bound=" << v.theta_bound << ' '
            << verdict(v.cross_set_pass) << '\n';
        if (!v.cross_set_pass) {
            print_peak(out, v.cross_set->cross_peak);
        }
    }
    out << "zero-shift energy: " << verdict(v.zero_shift_pass);
    if (!v.zero_shift_pass) {
        out << " (code " << v.zero_shift_failure << ")";
    }
    out << '\n' << "result: " << verdict(v.pass) << '\n';

    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, formats::verification_to_json(v) + "\n");
    }
    return v.pass ? kPass : kPropertyFailure;
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c + 1 < row.size(); ++c) {
            out << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
        }
        out << row.back();
        out << '\n';
    }
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    const bool raw = cfg.K || cfg.M || cfg.L;
    BoundsReport report;
    std::optional<Params> params;
    if (raw) {
        if (!(cfg.K && cfg.M && cfg.L && cfg.theta)) {
            throw InvalidInput("--K, --M, --L and --theta must be given together");
        }
        report = optimality(*cfg.K, *cfg.M, *cfg.L, *cfg.theta);
    } else {
        if (!(cfg.p && cfg.m && cfg.n)) {
            throw InvalidInput("give either --p/--m/--n or --K/--M/--L/--theta");
        }
        params = params_of(cfg);
        const double theta = cfg.theta.value_or(static_cast<double>(ipow(params->p, params->m)));
        report = optimality(*params, theta, cfg.theta ? ThetaSource::supplied : ThetaSource::guaranteed);
    }

    out << "K: " << report.K << '\n'
        << "M: " << report.M << '\n'
        << "L: " << report.L << '\n'
        << "theta: " << num(report.theta) << " (" << to_string(report.theta_source) << ")\n"
        << "welch_bound: " << num(report.welch_bound) << '\n'
        << "liu_bound: " << (report.liu_bound ? num(*report.liu_bound) : "n/a") << '\n'
        << "rho_welch: " << num(report.rho_welch) << '\n'
        << "rho_liu: " << (report.rho_liu ? num(*report.rho_liu) : "n/a") << '\n'
        << "applied_bound: " << report.applied_bound << '\n'
        << "rho: " << num(report.rho) << '\n'
        << "classification: " << to_string(report.classification) << '\n';
    if (report.closed_form_rho) {
        out << "closed_form_rho: " << num(*report.closed_form_rho) << '\n';
    }
    for (const auto& note : report.notes) {
        out << "note: " << note << '\n';
    }

    if (cfg.table) {
        if (!params) {
            throw InvalidInput("--table needs --p/--m/--n");
        }
        std::vector<std::vector<std::string>> rows{{"family", "K", "M", "L", "theta", "alphabet", "constraints"}};
        for (const auto& r : comparison_table(*params, cfg.prior_size)) {
            rows.push_back({r.reference, r.K, r.M, r.L, r.theta, r.alphabet, r.constraints});
        }
        out << '\n';
        print_table(out, rows);
    }
    if (!cfg.trend.empty()) {
        const int m = cfg.m.value_or(2);
        std::vector<std::vector<std::string>> rows{{"p", "K", "M", "L", "rho_liu"}};
        for (const auto& r : asymptotic_trend(cfg.trend, m)) {
            rows.push_back({std::to_string(r.p), std::to_string(r.K), std::to_string(r.M), std::to_string(r.L),
                            num(r.rho_liu)});
        }
        out << '\n';
        print_table(out, rows);
    }
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, formats::bounds_to_json(report) + "\n");
    }
    return kPass;
}

int cmd_correlate(const RunConfig& cfg, std::ostream& out) {
    const CodeFamily family = load_family(cfg.input_path);
    const auto count = static_cast<int>(family.codes.size());
    for (int i : cfg.pair) {
        if (i < 0 || i >= count) {
            throw InvalidInput("code index " + std::to_string(i) + " outside [0, " + std::to_string(count) + ")");
        }
    }
    ReportOptions opts;
    opts.exact = cfg.exact;
    const auto samples = shift_profile(family.codes[static_cast<std::size_t>(cfg.pair[0])],
                                       family.codes[static_cast<std::size_t>(cfg.pair[1])], opts);
    const auto csv = formats::shift_profile_to_csv(samples);
    if (cfg.out_path.empty()) {
        out << csv;
    } else {
        write_file(cfg.out_path, csv);
    }
    return kPass;
}

int cmd_certify_seed(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Polynomial f = formats::polynomial_from_json(read_file(cfg.seed_path));
    const auto J = parse_list(cfg.J_spec);
    const auto cert = certify_hamiltonian_path(f, J);
    out << formats::certificate_to_json(cert) << '\n';
    if (!cert.valid) {
        err << "seed invalid: " << cert.failure_reason.value_or("path condition failed") << '\n';
        return kSeedInvalid;
    }
    return kPass;
}

void add_params(CLI::App* cmd, RunConfig& cfg, bool required) {
    auto* p = cmd->add_option("--p", cfg.p, "odd prime p");
    auto* m = cmd->add_option("--m", cfg.m, "number of variables (L = p^m)");
    auto* n = cmd->add_option("--n", cfg.n, "number of restricted variables, 0 <= n < m");
    cmd->add_option("--lambda", cfg.lambda, "alphabet size, a multiple of p (default p)");
    if (required) {
        p->required();
        m->required();
        n->required();
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Construct and certify QCCS and CCC code families from multivariate functions", "qccs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qccs 1.0.0");

    auto* gen = app.add_subcommand("generate", "build a QCCS (or a single CCC) and write it to a file");
    add_params(gen, cfg, true);
    gen->add_option("--seed", cfg.seed_path, "seed function as polynomial JSON (default: canonical path seed)");
    gen->add_option("--J", cfg.J_spec, "restricted variables for --seed, comma separated (default 0..n-1)");
    gen->add_option("--out", cfg.out_path, "output file");
    gen->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    gen->add_option("--threads", cfg.threads, "worker threads (0: QCCS_THREADS or hardware)");
    auto* ccc = gen->add_flag("--ccc-only", cfg.ccc_only, "emit only the CCC with index --k");
    auto* k = gen->add_option("--k", cfg.k, "CCC index in [1, p-1]");
    ccc->needs(k);
    k->needs(ccc);

    auto* ver = app.add_subcommand("verify", "check a family file against its correlation guarantees");
    ver->add_option("family", cfg.input_path, "family file (json or csv)")->required();
    ver->add_option("--tol", cfg.tol, "zero tolerance")->check(CLI::NonNegativeNumber);
    ver->add_flag("--exact", cfg.exact, "zero-test correlation values exactly");
    ver->add_option("--threads", cfg.threads, "worker threads");
    ver->add_option("--out", cfg.out_path, "write the JSON report here");

    auto* bnd = app.add_subcommand("bounds", "Welch/Liu bounds, optimality factor and classification");
    add_params(bnd, cfg, false);
    auto* K = bnd->add_option("--K", cfg.K, "number of codes");
    auto* M = bnd->add_option("--M", cfg.M, "flock size");
    auto* L = bnd->add_option("--L", cfg.L, "sequence length");
    bnd->add_option("--theta", cfg.theta, "maximum correlation magnitude");
    for (auto* raw : {K, M, L}) {
        raw->excludes("--p")->excludes("--m")->excludes("--n")->excludes("--lambda");
    }
    bnd->add_flag("--table", cfg.table, "print the comparison table");
    bnd->add_option("--prior-size", cfg.prior_size, "instantiate prior families at this size");
    bnd->add_option("--trend", cfg.trend, "primes for the rho trend table (n = m-1)")->delimiter(',');
    bnd->add_option("--out", cfg.out_path, "write the JSON report here");

    auto* cor = app.add_subcommand("correlate", "per-shift |ACCF| of one code pair as CSV");
    cor->add_option("family", cfg.input_path, "family file (json or csv)")->required();
    cor->add_option("--pair", cfg.pair, "code indices i j")->expected(2)->required();
    cor->add_flag("--exact", cfg.exact, "report exact zeros as 0");
    cor->add_option("--out", cfg.out_path, "output CSV (default stdout)");

    auto* cert = app.add_subcommand("certify-seed", "check the Hamiltonian-path condition of a seed function");
    cert->add_option("--seed", cfg.seed_path, "polynomial JSON")->required();
    cert->add_option("--J", cfg.J_spec, "restricted variables, comma separated");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kPass : kUsage;
    }

    try {
        if (gen->parsed()) {
            return cmd_generate(cfg, out);
        }
        if (ver->parsed()) {
            return cmd_verify(cfg, out);
        }
        if (bnd->parsed()) {
            return cmd_bounds(cfg, out);
        }
        if (cor->parsed()) {
            return cmd_correlate(cfg, out);
        }
        return cmd_certify_seed(cfg, out, err);
    } catch (const SeedError& e) {
        err << "seed invalid: " << e.what() << '\n';
        return kSeedInvalid;
    } catch (const NotQuadratic& e) {
        err << "seed invalid: " << e.what() << '\n';
        return kSeedInvalid;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kIoError;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << '\n';
        return kIoError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace qccs::cli
