#include "qccs/cyclotomic.hpp"

#include "qccs/error.hpp"

#include <cmath>
#include <numbers>

namespace qccs {
namespace {

// Exact division of integer polynomials by a monic divisor; the caller guarantees divisibility.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const std::int64_t c = num[i];
        quot[i - dn] = c;
        for (std::size_t k = 0; k <= dn; ++k) {
            num[i - dn + k] -= c * den[k];
        }
    }
    return quot;
}

} // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
    if (n < 1) {
        throw InvalidInput("cyclotomic index must be positive");
    }
    std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) {
            poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
        }
    }
    return poly;
}

CyclotomicRing::CyclotomicRing(int lambda) : lambda_(lambda), phi_(cyclotomic_polynomial(lambda)) {
    roots_.reserve(static_cast<std::size_t>(lambda));
    for (int j = 0; j < lambda; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / lambda;
        roots_.emplace_back(std::cos(angle), std::sin(angle));
    }
}

std::vector<std::int64_t> CyclotomicRing::reduce(std::span<const std::int64_t> v) const {
    if (static_cast<int>(v.size()) != lambda_) {
        throw InvalidInput("cyclotomic vector has the wrong length");
    }
    const std::size_t deg = phi_.size() - 1;
    std::vector<std::int64_t> r(v.begin(), v.end());
    for (std::size_t i = r.size(); i-- > deg;) {
        const std::int64_t c = r[i];
        if (c == 0) {
            continue;
        }
        for (std::size_t k = 0; k <= deg; ++k) {
            r[i - deg + k] -= c * phi_[k];
        }
    }
    r.resize(deg);
    return r;
}

bool CyclotomicRing::is_zero(std::span<const std::int64_t> v) const {
    for (std::int64_t c : reduce(v)) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

std::complex<double> CyclotomicRing::to_complex(std::span<const std::int64_t> v) const {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0) {
            sum += static_cast<double>(v[j]) * roots_[j];
        }
    }
    return sum;
}

} // namespace qccs
