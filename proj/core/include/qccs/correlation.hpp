#pragma once

#include "qccs/cyclotomic.hpp"
#include "qccs/polynomial.hpp"
#include "qccs/sequence.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qccs {

/// Family position of a constructed code: CCC index k and code index t within it.
struct CodeLabel {
    int k = 0;
    int t = 0;

    friend bool operator==(const CodeLabel&, const CodeLabel&) = default;
};

/// M x L matrix of phase sequences.
struct Code {
    std::vector<PhaseSequence> rows;
    CodeLabel label;

    std::size_t flock_size() const { return rows.size(); }
    std::size_t length() const { return rows.empty() ? 0 : rows.front().size(); }
    int lambda() const { return rows.empty() ? 0 : rows.front().lambda(); }

    /// Throws InvalidInput if empty or rows differ in length or alphabet.
    void validate() const;

    friend bool operator==(const Code&, const Code&) = default;
};

using CorrelationValue = std::complex<double>;

/// Multiset of phase differences a - b (mod lambda) over overlapping non-ZERO positions.
/// It is the exact correlation value in the power basis of Z[xi_lambda].
using PhaseHistogram = std::vector<std::int64_t>;

/// Adds the ACCF terms at shift tau to `hist` (size lambda).
void accumulate_accf(const PhaseSequence& a, const PhaseSequence& b, std::int64_t tau, std::span<std::int64_t> hist);

PhaseHistogram accf_histogram(const PhaseSequence& a, const PhaseSequence& b, std::int64_t tau);
PhaseHistogram code_accf_histogram(const Code& b1, const Code& b2, std::int64_t tau);

/// Aperiodic cross-correlation sum_a a_{a+tau} conj(b_a) (mirrored for tau < 0); ZERO entries contribute nothing.
CorrelationValue accf(const PhaseSequence& a, const PhaseSequence& b, std::int64_t tau);

/// Row-wise sum of sequence ACCFs.
CorrelationValue code_accf(const Code& b1, const Code& b2, std::int64_t tau);

/// Checks ACCF(psi(f), psi(f2))(tau) against the sum over (c1, c2) of restricted-sequence ACCFs.
bool decomposition_check(const Polynomial& f, const Polynomial& f2, std::span<const int> J, std::int64_t tau,
                            double tol = 1e-9);

struct ReportOptions {
    double zero_tol = 1e-6;
    /// Zero-test correlation values exactly in Z[xi_lambda]; magnitudes of exact zeros are reported as 0.
    bool exact = false;
    /// 0 picks resolve_threads(0).
    unsigned threads = 0;
};

/// Location of a maximum. code_b == code_a for auto-correlation peaks; -1 when nothing was scanned.
struct CorrelationPeak {
    double magnitude = 0.0;
    int code_a = -1;
    int code_b = -1;
    std::int64_t tau = 0;
};

struct CorrelationReport {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double theta = 0.0;
    CorrelationPeak auto_peak;
    CorrelationPeak cross_peak;
    CorrelationPeak peak;
    double tolerance = 1e-6;
    bool exact = false;
};

/// theta1 over every code and 0 < |tau| < L; theta2 over every unordered pair and |tau| < L.
/// Ties resolve to the lowest code index, then the lowest tau.
CorrelationReport family_report(std::span<const Code> codes, const ReportOptions& options = {});

/// As family_report, but theta2 only scans pairs whose group ids differ.
CorrelationReport grouped_report(std::span<const Code> codes, std::span<const int> groups,
                                 const ReportOptions& options = {});

struct ShiftSample {
    std::int64_t tau = 0;
    double magnitude = 0.0;
};

/// |code_accf(b1, b2, tau)| for every -L < tau < L.
std::vector<ShiftSample> shift_profile(const Code& b1, const Code& b2, const ReportOptions& options = {});

} // namespace qccs
