#include "qccs/analysis.hpp"

#include "qccs/construction.hpp"
#include "qccs/correlation.hpp"
#include "qccs/error.hpp"
#include "qccs/sequence.hpp"
#include "qccs/threading.hpp"

#include <cmath>
#include <limits>
#include <span>

namespace qccs {
namespace {

constexpr double kRhoTolerance = 1e-9;

void check_shape(std::int64_t K, std::int64_t M, std::int64_t L) {
    if (M < 1 || K < M || L < 1) {
        throw InvalidInput("bounds need K >= M >= 1 and L >= 1");
    }
    if (K * (2 * L - 1) <= 1) {
        throw InvalidInput("bounds need K(2L-1) > 1");
    }
}

bool is_prime_power(std::int64_t u) {
    if (u < 2) {
        return false;
    }
    std::int64_t q = 2;
    while (u % q != 0) {
        ++q;
    }
    while (u % q == 0) {
        u /= q;
    }
    return u == 1;
}

std::int64_t smallest_prime_factor(std::int64_t v) {
    for (std::int64_t q = 2; q * q <= v; ++q) {
        if (v % q == 0) {
            return q;
        }
    }
    return v;
}

} // namespace

double welch_bound(std::int64_t K, std::int64_t M, std::int64_t L) {
    check_shape(K, M, L);
    const double ratio = static_cast<double>(K) / static_cast<double>(M) - 1.0;
    const double denom = static_cast<double>(K) * static_cast<double>(2 * L - 1) - 1.0;
    return static_cast<double>(M) * static_cast<double>(L) * std::sqrt(ratio / denom);
}

bool liu_applicable(std::int64_t K, std::int64_t M, std::int64_t L) {
    return K >= 3 * M && M >= 2 && L >= 2;
}

std::optional<double> liu_bound(std::int64_t K, std::int64_t M, std::int64_t L) {
    if (!liu_applicable(K, M, L)) {
        return std::nullopt;
    }
    const double inner = std::sqrt(static_cast<double>(M) / (3.0 * static_cast<double>(K)));
    return std::sqrt(static_cast<double>(M) * static_cast<double>(L) * (1.0 - 2.0 * inner));
}

std::string to_string(Optimality c) {
    switch (c) {
    case Optimality::optimal:
        return "optimal";
    case Optimality::near_optimal:
        return "near-optimal";
    case Optimality::asymptotically_tracked:
        return "asymptotically-tracked";
    case Optimality::none:
        break;
    }
    return "none";
}

std::string to_string(ThetaSource s) {
    switch (s) {
    case ThetaSource::guaranteed:
        return "guaranteed";
    case ThetaSource::measured:
        return "measured";
    case ThetaSource::supplied:
        break;
    }
    return "supplied";
}

Optimality classify(double rho) {
    if (std::abs(rho - 1.0) <= kRhoTolerance) {
        return Optimality::optimal;
    }
    if (rho > 1.0 && rho <= 2.0) {
        return Optimality::near_optimal;
    }
    return Optimality::none;
}

BoundsReport optimality(std::int64_t K, std::int64_t M, std::int64_t L, double theta) {
    check_shape(K, M, L);
    if (!(theta >= 0.0)) {
        throw InvalidInput("theta must be non-negative");
    }
    BoundsReport r;
    r.K = K;
    r.M = M;
    r.L = L;
    r.theta = theta;
    r.theta_source = ThetaSource::supplied;
    r.welch_bound = welch_bound(K, M, L);
    r.liu_bound = liu_bound(K, M, L);

    if (theta == 0.0) {
        if (r.welch_bound != 0.0) {
            throw InvalidInput("theta = 0 is below the Welch bound for K > M");
        }
        r.rho_welch = 1.0;
        r.rho = 1.0;
        r.applied_bound = "welch";
        r.classification = Optimality::optimal;
        r.notes.push_back("K == M: the Welch bound is 0 and a complete complementary code meets it");
        return r;
    }
    r.rho_welch = r.welch_bound > 0.0 ? theta / r.welch_bound : std::numeric_limits<double>::infinity();
    if (r.liu_bound) {
        r.rho_liu = theta / *r.liu_bound;
        r.applied_bound = "liu";
        r.rho = *r.rho_liu;
    } else {
        r.applied_bound = "welch";
        r.rho = r.rho_welch;
        r.notes.push_back("Liu bound not applicable (needs K >= 3M, M >= 2, L >= 2)");
    }
    r.classification = classify(r.rho);
    if (r.rho < 1.0 - kRhoTolerance) {
        r.notes.push_back("theta lies below the lower bound; check the inputs");
    }
    return r;
}

double closed_form_rho_welch(int m, int n) {
    const double a = 4.0 * std::pow(3.0, m - n - 1);
    const double b = 2.0 / std::pow(3.0, n + 1);
    const double c = 1.0 / std::pow(3.0, 2 * (n + 1));
    return std::sqrt(a - b - c);
}

double closed_form_rho_liu(int p, int m, int n) {
    const double num = std::pow(static_cast<double>(p), (m - n - 1) / 2.0);
    return num / std::sqrt(1.0 - 2.0 * std::sqrt(1.0 / (3.0 * (p - 1))));
}

BoundsReport optimality(const Params& params, double theta, ThetaSource source) {
    params.validate();
    if (!(theta > 0.0)) {
        throw InvalidInput("theta must be positive");
    }
    const auto desc = FamilyDescriptor::qccs(params);
    BoundsReport r;
    r.K = desc.K;
    r.M = desc.M;
    r.L = desc.L;
    r.theta = theta;
    r.theta_source = source;
    r.welch_bound = welch_bound(r.K, r.M, r.L);
    r.liu_bound = liu_bound(r.K, r.M, r.L);
    r.rho_welch = theta / r.welch_bound;
    if (r.liu_bound) {
        r.rho_liu = theta / *r.liu_bound;
    }

    if (params.p == 3) {
        r.applied_bound = "welch";
        r.rho = r.rho_welch;
        r.closed_form_rho = closed_form_rho_welch(params.m, params.n);
        r.notes.push_back("p = 3 gives K = 2M < 3M, so the Welch bound applies");
    } else {
        r.applied_bound = "liu";
        r.rho = *r.rho_liu;
        r.closed_form_rho = closed_form_rho_liu(params.p, params.m, params.n);
    }
    if (theta == static_cast<double>(desc.theta_bound)) {
        r.closed_form_agrees = std::abs(r.rho - *r.closed_form_rho) <= kRhoTolerance;
    }
    r.classification = classify(r.rho);
    const bool asymptotic_regime = params.p > 3 && params.n == params.m - 1;
    if (asymptotic_regime) {
        r.notes.push_back("n = m-1, p > 3: rho tends to 1 as p grows");
        if (r.classification == Optimality::none && r.rho > 2.0) {
            r.classification = Optimality::asymptotically_tracked;
        }
    }
    return r;
}

std::vector<TrendRow> asymptotic_trend(std::span<const int> primes, int m) {
    std::vector<TrendRow> rows;
    for (int p : primes) {
        const Params params = Params::make(p, m, m - 1, p);
        const auto desc = FamilyDescriptor::qccs(params);
        const auto report = optimality(params, static_cast<double>(desc.theta_bound));
        if (!report.rho_liu) {
            throw InvalidInput("Liu bound not applicable at p = " + std::to_string(p));
        }
        rows.push_back({p, desc.K, desc.M, desc.L, *report.rho_liu});
    }
    return rows;
}

std::vector<ComparisonRow> comparison_table(const Params& params, std::optional<int> prior_size) {
    params.validate();
    std::vector<ComparisonRow> rows;
    const auto s = [](std::int64_t v) { return std::to_string(v); };

    ComparisonRow a{"prime-power family A", "u(u+1)", "u", "u", "u", "Z_u", "u is a prime power"};
    ComparisonRow b{"prime-power family B", "u^2", "u", "u-1", "u", "Z_u", "u is a prime power, u >= 5"};
    ComparisonRow c{"permutation family", "N(t0-1)", "N", "N", "N", "Z_N",
                    "N >= 5 odd, t0 its smallest prime factor"};
    ComparisonRow d{"Florentine-rectangle family", "N*F(N)", "N", "N", "N", "Z_N",
                    "N >= 2, F(N) = max rows of an F(N) x N Florentine rectangle"};
    if (prior_size) {
        const std::int64_t u = *prior_size;
        if (is_prime_power(u)) {
            a = {a.reference, s(u * (u + 1)), s(u), s(u), s(u), "Z_" + s(u), a.constraints};
            if (u >= 5) {
                b = {b.reference, s(u * u), s(u), s(u - 1), s(u), "Z_" + s(u), b.constraints};
            }
        }
        if (u >= 5 && u % 2 == 1) {
            const auto t0 = smallest_prime_factor(u);
            c = {c.reference, s(u * (t0 - 1)), s(u), s(u), s(u), "Z_" + s(u), c.constraints};
        }
        if (u >= 2) {
            d = {d.reference, s(u) + "*F(" + s(u) + ")", s(u), s(u), s(u), "Z_" + s(u), d.constraints};
        }
    }
    rows.push_back(a);
    rows.push_back(b);
    rows.push_back(c);
    rows.push_back(d);

    const auto desc = FamilyDescriptor::qccs(params);
    rows.push_back({"this construction", s(desc.K), s(desc.M), s(desc.L), s(desc.theta_bound),
                    "Z_" + s(desc.alphabet),
                    "p odd prime, 0 <= n <= m-1, lambda a multiple of p"});
    return rows;
}

RestrictedSumResult restricted_sum_check(const Polynomial& g, const Polynomial& h, int k1, int k2, int w, double tol) {
    if (!(g.space() == h.space())) {
        throw InvalidInput("g and h live in different spaces");
    }
    const auto& space = g.space();
    const int p = space.p;
    if (w < 0 || w > space.m - 1) {
        throw InvalidInput("w must satisfy 0 <= w <= m-1");
    }
    if (k1 < 1 || k1 >= p || k2 < 1 || k2 >= p || k1 == k2) {
        throw InvalidInput("k1, k2 must be distinct elements of [1, p-1]");
    }

    std::vector<int> J1(static_cast<std::size_t>(w));
    for (int a = 0; a < w; ++a) {
        J1[static_cast<std::size_t>(a)] = a;
    }
    // S is enumerated over all of Z_p^w x Z_p^w rather than solved for e2.
    const std::int64_t count = ipow(p, w);
    std::vector<PhaseSequence> left;
    std::vector<PhaseSequence> right;
    for (std::int64_t i1 = 0; i1 < count; ++i1) {
        const auto e1 = index_to_digits(i1, p, w);
        for (std::int64_t i2 = 0; i2 < count; ++i2) {
            const auto e2 = index_to_digits(i2, p, w);
            bool member = true;
            for (std::size_t a = 0; a < e1.size() && member; ++a) {
                member = (k1 * e1[a] - k2 * e2[a]) % p == 0;
            }
            if (member) {
                left.push_back(restricted_sequence(g, Restriction{J1, e1}));
                right.push_back(restricted_sequence(h, Restriction{J1, e2}));
            }
        }
    }

    const std::int64_t L = space.length();
    const double bound = static_cast<double>(ipow(p, space.m - w));
    const CyclotomicRing ring(space.lambda);
    const auto shifts = static_cast<std::size_t>(2 * L - 1);
    const unsigned threads = resolve_threads(0);
    const std::size_t chunks = std::min<std::size_t>(shifts, std::size_t{threads} * 4);
    std::vector<std::pair<double, std::int64_t>> best(chunks, {-1.0, 0});
    parallel_chunks(shifts, threads, chunks, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        std::vector<std::int64_t> hist(static_cast<std::size_t>(space.lambda));
        for (std::size_t s = begin; s < end; ++s) {
            const std::int64_t tau = static_cast<std::int64_t>(s) - (L - 1);
            std::fill(hist.begin(), hist.end(), 0);
            for (std::size_t i = 0; i < left.size(); ++i) {
                accumulate_accf(left[i], right[i], tau, hist);
            }
            const double mag = std::abs(ring.to_complex(hist));
            if (mag > best[chunk].first) {
                best[chunk] = {mag, tau};
            }
        }
    });

    RestrictedSumResult out;
    out.set_size = static_cast<std::int64_t>(left.size());
    double worst = -1.0;
    for (const auto& [mag, tau] : best) {
        if (mag > worst) {
            worst = mag;
            out.worst_tau = tau;
        }
    }
    out.max_ratio = worst / bound;
    out.holds = worst <= bound + tol;
    return out;
}

} // namespace qccs
