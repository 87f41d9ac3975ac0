#include "qccs/construction.hpp"

#include "qccs/error.hpp"
#include "qccs/sequence.hpp"
#include "qccs/threading.hpp"

#include <map>
#include <numeric>

namespace qccs {
namespace {

void check_indices(const SeedSpec& seed, int k, std::int64_t t) {
    const Params params = seed.params();
    if (k < 1 || k >= params.p) {
        throw InvalidInput("k must lie in [1, p-1], got " + std::to_string(k));
    }
    if (t < 0 || t >= ipow(params.p, params.n + 1)) {
        throw InvalidInput("code index t outside [0, p^(n+1))");
    }
}

} // namespace

Params SeedSpec::params() const {
    const auto& s = f.space();
    return Params{s.p, s.m, static_cast<int>(J.size()), s.lambda};
}

SeedSpec make_seed(const Polynomial& f, std::vector<int> J) {
    PathCertificate cert = certify_hamiltonian_path(f, J);
    if (!cert.valid) {
        throw SeedError(cert.failure_reason.value_or("path condition failed"));
    }
    SeedSpec seed;
    seed.f = f;
    seed.J = std::move(J);
    seed.pi_first = cert.free_vars.front();
    seed.pi_last = cert.free_vars.back();
    seed.path = std::move(cert);
    return seed;
}

SeedSpec canonical_seed(const Params& params, std::optional<std::vector<int>> affine, std::optional<int> constant) {
    params.validate();
    Polynomial f(params.space());
    for (int a = params.n; a + 1 < params.m; ++a) {
        f.add_quadratic(a, a + 1, params.unit());
    }
    if (affine) {
        if (static_cast<int>(affine->size()) != params.m) {
            throw InvalidInput("affine coefficient vector must have length m");
        }
        for (int v = 0; v < params.m; ++v) {
            f.add_linear(v, (*affine)[static_cast<std::size_t>(v)]);
        }
    }
    if (constant) {
        f.add_constant(*constant);
    }
    std::vector<int> J(static_cast<std::size_t>(params.n));
    std::iota(J.begin(), J.end(), 0);
    return make_seed(f, std::move(J));
}

FamilyDescriptor FamilyDescriptor::qccs(const Params& params) {
    params.validate();
    const std::int64_t M = ipow(params.p, params.n + 1);
    const std::int64_t L = ipow(params.p, params.m);
    return {M * (params.p - 1), M, L, L, params.lambda};
}

FamilyDescriptor FamilyDescriptor::ccc(const Params& params) {
    params.validate();
    const std::int64_t M = ipow(params.p, params.n + 1);
    return {M, M, ipow(params.p, params.m), 0, params.lambda};
}

Polynomial member_function(const SeedSpec& seed, int k, std::int64_t t, std::int64_t d) {
    check_indices(seed, k, t);
    const Params params = seed.params();
    if (d < 0 || d >= ipow(params.p, params.n + 1)) {
        throw InvalidInput("row index d outside [0, p^(n+1))");
    }
    const auto dd = index_to_digits(d, params.p, params.n + 1);
    const auto td = index_to_digits(t, params.p, params.n + 1);
    const long long unit = params.unit();

    Polynomial out = seed.f;
    for (int a = 0; a < params.n; ++a) {
        const auto sa = static_cast<std::size_t>(a);
        out.add_linear(seed.J[sa], unit * (static_cast<long long>(k) * dd[sa] + td[sa]));
    }
    const auto last = static_cast<std::size_t>(params.n);
    out.add_linear(seed.pi_first, unit * k * dd[last]);
    out.add_linear(seed.pi_last, unit * td[last]);
    return out;
}

Code build_code(const SeedSpec& seed, int k, std::int64_t t, unsigned threads) {
    check_indices(seed, k, t);
    const Params params = seed.params();
    const auto M = static_cast<std::size_t>(ipow(params.p, params.n + 1));
    Code code;
    code.label = {k, static_cast<int>(t)};
    code.rows.resize(M);
    parallel_chunks(M, resolve_threads(threads), M, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t d = begin; d < end; ++d) {
            code.rows[d] = sequence_of(member_function(seed, k, t, static_cast<std::int64_t>(d)));
        }
    });
    return code;
}

std::vector<Code> build_ccc(const SeedSpec& seed, int k, unsigned threads) {
    check_indices(seed, k, 0);
    const Params params = seed.params();
    const auto count = static_cast<std::size_t>(ipow(params.p, params.n + 1));
    std::vector<Code> codes(count);
    parallel_chunks(count, resolve_threads(threads), count, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t t = begin; t < end; ++t) {
            codes[t] = build_code(seed, k, static_cast<std::int64_t>(t), 1);
        }
    });
    return codes;
}

void check_qccs_layout(const SeedSpec& seed) {
    for (std::size_t a = 0; a < seed.J.size(); ++a) {
        if (seed.J[a] != static_cast<int>(a)) {
            throw ConstraintError("QCCS layout requires J = (0, 1, ..., n-1)");
        }
    }
    if (seed.pi_first != static_cast<int>(seed.J.size())) {
        throw ConstraintError("QCCS layout requires the path to start at l_pi(0) = n = " +
                              std::to_string(seed.J.size()) + ", but it starts at x" + std::to_string(seed.pi_first));
    }
}

CodeFamily build_qccs(const SeedSpec& seed, unsigned threads) {
    check_qccs_layout(seed);
    CodeFamily family;
    family.params = seed.params();
    family.seed = seed;
    family.descriptor = FamilyDescriptor::qccs(family.params);
    family.kind = FamilyKind::qccs;
    const int p = family.params.p;
    const auto per_set = static_cast<std::size_t>(ipow(p, family.params.n + 1));
    family.codes.resize(per_set * static_cast<std::size_t>(p - 1));
    parallel_chunks(family.codes.size(), resolve_threads(threads), family.codes.size(),
                    [&](std::size_t begin, std::size_t end, std::size_t) {
                        for (std::size_t i = begin; i < end; ++i) {
                            const int k = static_cast<int>(i / per_set) + 1;
                            family.codes[i] = build_code(seed, k, static_cast<std::int64_t>(i % per_set), 1);
                        }
                    });
    return family;
}

CodeFamily build_ccc_family(const SeedSpec& seed, int k, unsigned threads) {
    CodeFamily family;
    family.params = seed.params();
    family.seed = seed;
    family.descriptor = FamilyDescriptor::ccc(family.params);
    family.kind = FamilyKind::ccc;
    family.codes = build_ccc(seed, k, threads);
    return family;
}

FamilyVerification verify_family(std::span<const Code> codes, std::int64_t theta_bound,
                                 const ReportOptions& options) {
    if (codes.empty()) {
        throw InvalidInput("empty code family");
    }
    FamilyVerification out;
    out.theta_bound = theta_bound;

    // Per-set reports are computed on a subset; peaks are mapped back to family indices.
    std::map<int, std::vector<Code>> sets;
    std::map<int, std::vector<int>> positions;
    std::vector<int> groups;
    groups.reserve(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) {
        sets[codes[i].label.k].push_back(codes[i]);
        positions[codes[i].label.k].push_back(static_cast<int>(i));
        groups.push_back(codes[i].label.k);
    }
    for (const auto& [k, members] : sets) {
        FamilyVerification::PerSet entry;
        entry.k = k;
        entry.report = family_report(members, options);
        const auto& index = positions[k];
        for (CorrelationPeak* peak : {&entry.report.auto_peak, &entry.report.cross_peak, &entry.report.peak}) {
            if (peak->code_a >= 0) {
                peak->code_a = index[static_cast<std::size_t>(peak->code_a)];
                peak->code_b = index[static_cast<std::size_t>(peak->code_b)];
            }
        }
        entry.pass = entry.report.theta <= options.zero_tol;
        out.per_set.push_back(std::move(entry));
    }
    if (sets.size() > 1) {
        out.cross_set = grouped_report(codes, groups, options);
        out.cross_set_pass = out.cross_set->theta2 <= static_cast<double>(theta_bound) + options.zero_tol;
    }
    for (std::size_t i = 0; i < codes.size(); ++i) {
        const auto hist = code_accf_histogram(codes[i], codes[i], 0);
        const auto energy = static_cast<std::int64_t>(codes[i].flock_size() * codes[i].length());
        bool ok = hist[0] == energy;
        for (std::size_t j = 1; j < hist.size(); ++j) {
            ok = ok && hist[j] == 0;
        }
        if (!ok) {
            out.zero_shift_pass = false;
            out.zero_shift_failure = static_cast<int>(i);
            break;
        }
    }
    out.pass = out.zero_shift_pass && out.cross_set_pass;
    for (const auto& entry : out.per_set) {
        out.pass = out.pass && entry.pass;
    }
    return out;
}

} // namespace qccs
