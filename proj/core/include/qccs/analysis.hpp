#pragma once

#include "qccs/params.hpp"
#include "qccs/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qccs {

/// Welch lower bound on theta for a (K, M, L) code set: ML sqrt((K/M - 1) / (K(2L-1) - 1)).
double welch_bound(std::int64_t K, std::int64_t M, std::int64_t L);

/// Liu lower bound sqrt(ML (1 - 2 sqrt(M / 3K))); nullopt unless K >= 3M, M >= 2, L >= 2.
std::optional<double> liu_bound(std::int64_t K, std::int64_t M, std::int64_t L);

bool liu_applicable(std::int64_t K, std::int64_t M, std::int64_t L);

enum class Optimality { optimal, near_optimal, asymptotically_tracked, none };

std::string to_string(Optimality c);

enum class ThetaSource { guaranteed, measured, supplied };

std::string to_string(ThetaSource s);

struct BoundsReport {
    std::int64_t K = 0;
    std::int64_t M = 0;
    std::int64_t L = 0;
    double theta = 0.0;
    ThetaSource theta_source = ThetaSource::supplied;

    double welch_bound = 0.0;
    std::optional<double> liu_bound;
    double rho_welch = 0.0; ///< +inf when the Welch bound is 0 and theta > 0
    std::optional<double> rho_liu;

    /// Which bound the classification used: "welch" or "liu".
    std::string applied_bound;
    double rho = 0.0;
    Optimality classification = Optimality::none;

    /// Closed-form rho for a family at its guaranteed theta = p^m, when params are known.
    std::optional<double> closed_form_rho;
    /// |definitional rho - closed form| <= 1e-9 (only when theta is the guaranteed p^m).
    std::optional<bool> closed_form_agrees;

    std::vector<std::string> notes;
};

/// Classification band: optimal iff |rho - 1| <= 1e-9, near-optimal iff 1 < rho <= 2.
Optimality classify(double rho);

/// Bounds and rho for a raw (K, M, L, theta). Uses Liu when applicable, else Welch.
/// theta == 0 is accepted only when the Welch bound is 0 (a CCC); rho is then 1.
BoundsReport optimality(std::int64_t K, std::int64_t M, std::int64_t L, double theta);

/// Bounds for the QCCS built from params, classified by the p == 3 (Welch) / p > 3 (Liu) split.
/// Throws InvalidInput when theta <= 0.
BoundsReport optimality(const Params& params, double theta, ThetaSource source = ThetaSource::guaranteed);

/// sqrt(4 * 3^(m-n-1) - 2/3^(n+1) - 1/3^(2(n+1))): Welch rho at p = 3, theta = 3^m.
double closed_form_rho_welch(int m, int n);

/// p^((m-n-1)/2) / sqrt(1 - 2 sqrt(1/(3(p-1)))): Liu rho at theta = p^m.
double closed_form_rho_liu(int p, int m, int n);

struct TrendRow {
    int p = 0;
    std::int64_t K = 0;
    std::int64_t M = 0;
    std::int64_t L = 0;
    double rho_liu = 0.0;
};

/// Liu rho at theta = p^m with n = m-1 for each prime.
std::vector<TrendRow> asymptotic_trend(std::span<const int> primes, int m);

/// Parameter row for a comparison table; formulas rendered as text.
struct ComparisonRow {
    std::string reference;
    std::string K;
    std::string M;
    std::string L;
    std::string theta;
    std::string alphabet;
    std::string constraints;
};

/// Known aperiodic QCCS families next to this construction, instantiated where a
/// prior-work parameter (u or N) is supplied.
std::vector<ComparisonRow> comparison_table(const Params& params, std::optional<int> prior_size = std::nullopt);

struct RestrictedSumResult {
    bool holds = false;
    double max_ratio = 0.0;          ///< max over tau of |sum| / p^(m-w)
    std::int64_t set_size = 0;       ///< |S|
    std::int64_t worst_tau = 0;
};

/// Sum over (e1, e2) with k1 e1 == k2 e2 (mod p) of ACCF(psi(g|x_J1=e1), psi(h|x_J1=e2))(tau),
/// J1 = (0..w-1), checked against p^(m-w) for every -p^m < tau < p^m.
RestrictedSumResult restricted_sum_check(const Polynomial& g, const Polynomial& h, int k1, int k2, int w,
                                      double tol = 1e-9);

} // namespace qccs
