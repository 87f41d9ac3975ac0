#pragma once

#include "qccs/correlation.hpp"
#include "qccs/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qccs {

/// A seed function together with a certified restriction layout.
struct SeedSpec {
    Polynomial f;
    std::vector<int> J;
    PathCertificate path;
    int pi_first = 0; ///< l_{pi(0)}: receives the row (d) term
    int pi_last = 0;  ///< l_{pi(m-n-1)}: receives the code (t) term

    Params params() const;
};

/// Certifies f against J and packages it. Throws SeedError carrying the certificate's failure reason.
SeedSpec make_seed(const Polynomial& f, std::vector<int> J);

/// f = (lambda/p) * sum_{a=n}^{m-2} x_a x_{a+1} + affine part, with J = (0, ..., n-1).
/// `affine` (length m) gives linear coefficients; `constant` the degree-0 term.
SeedSpec canonical_seed(const Params& params, std::optional<std::vector<int>> affine = std::nullopt,
                        std::optional<int> constant = std::nullopt);

/// (K, M, L, theta) of a constructed family plus its alphabet size.
struct FamilyDescriptor {
    std::int64_t K = 0;
    std::int64_t M = 0;
    std::int64_t L = 0;
    std::int64_t theta_bound = 0;
    int alphabet = 0;

    /// (p^{n+1}(p-1), p^{n+1}, p^m, p^m) over Z_lambda.
    static FamilyDescriptor qccs(const Params& params);
    /// (p^{n+1}, p^{n+1}, p^m, 0): a single CCC.
    static FamilyDescriptor ccc(const Params& params);

    friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

enum class FamilyKind { qccs, ccc };

struct CodeFamily {
    Params params;
    SeedSpec seed;
    FamilyDescriptor descriptor;
    FamilyKind kind = FamilyKind::qccs;
    /// Ordered by (k, t); rows of each code ordered by d.
    std::vector<Code> codes;
};

/// f + (k*lambda/p)(d.x_J + d_n x_{pi_first}) + (lambda/p)(t.x_J + t_n x_{pi_last}),
/// with d and t expanded most-significant-first into n+1 base-p digits.
Polynomial member_function(const SeedSpec& seed, int k, std::int64_t t, std::int64_t d);

/// Code C_t^k: row d is psi(member_function(seed, k, t, d)).
Code build_code(const SeedSpec& seed, int k, std::int64_t t, unsigned threads = 0);

/// The p^{n+1} codes of C^k, t ascending.
std::vector<Code> build_ccc(const SeedSpec& seed, int k, unsigned threads = 0);

/// Throws ConstraintError naming the violated clause unless J == (0..n-1) and pi_first == n.
void check_qccs_layout(const SeedSpec& seed);

/// Union of C^1..C^{p-1}, ordered by (k, t).
CodeFamily build_qccs(const SeedSpec& seed, unsigned threads = 0);

/// Single CCC packaged as a family (kind ccc).
CodeFamily build_ccc_family(const SeedSpec& seed, int k, unsigned threads = 0);

/// Outcome of checking a family against its construction guarantees.
struct FamilyVerification {
    struct PerSet {
        int k = 0;
        CorrelationReport report;
        bool pass = false;
    };
    std::vector<PerSet> per_set;
    /// theta2 over code pairs from distinct CCCs (absent for single-CCC families).
    std::optional<CorrelationReport> cross_set;
    bool cross_set_pass = true;
    /// Every code's AACF at tau = 0 equals M*L exactly.
    bool zero_shift_pass = true;
    int zero_shift_failure = -1;
    std::int64_t theta_bound = 0;
    bool pass = false;
};

/// Per-CCC theta <= tol, cross-set theta2 <= theta_bound + tol, exact zero-shift energy.
FamilyVerification verify_family(std::span<const Code> codes, std::int64_t theta_bound,
                                 const ReportOptions& options = {});

} // namespace qccs
