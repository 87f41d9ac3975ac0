#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qccs {

/// Coefficients (constant term first) of the n-th cyclotomic polynomial.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

/// Arithmetic in Z[xi_lambda] for values given as integer vectors over the
/// power basis {xi^0, ..., xi^(lambda-1)}.
///
/// The power basis is not a Z-basis; a vector is zero iff sum v_j x^j is
/// divisible by the lambda-th cyclotomic polynomial, which is what is_zero tests.
class CyclotomicRing {
public:
    explicit CyclotomicRing(int lambda);

    int lambda() const { return lambda_; }
    const std::vector<std::int64_t>& modulus() const { return phi_; }

    /// Remainder modulo the cyclotomic polynomial: the canonical representative, length phi(lambda).
    std::vector<std::int64_t> reduce(std::span<const std::int64_t> v) const;

    bool is_zero(std::span<const std::int64_t> v) const;

    std::complex<double> to_complex(std::span<const std::int64_t> v) const;

    /// xi_lambda^phase
    std::complex<double> root(int phase) const { return roots_[static_cast<std::size_t>(phase)]; }

private:
    int lambda_;
    std::vector<std::int64_t> phi_;
    std::vector<std::complex<double>> roots_;
};

} // namespace qccs
