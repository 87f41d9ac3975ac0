#include "qccs/params.hpp"

#include "qccs/error.hpp"

#include <limits>

namespace qccs {

std::int64_t ipow(std::int64_t base, int exp) {
    if (exp < 0) {
        throw InvalidInput("negative exponent");
    }
    std::int64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::int64_t>::max() / base) {
            throw InvalidInput("integer overflow in power");
        }
        out *= base;
    }
    return out;
}

bool is_prime(std::int64_t v) {
    if (v < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

void FunctionSpace::validate() const {
    if (!is_prime(p) || p == 2) {
        throw InvalidInput("p must be an odd prime, got " + std::to_string(p));
    }
    if (m < 1) {
        throw InvalidInput("m must be at least 1, got " + std::to_string(m));
    }
    if (lambda <= 0 || lambda % p != 0) {
        throw InvalidInput("lambda must be a positive multiple of p, got " + std::to_string(lambda));
    }
    if (m > 62 || ipow(p, m) > kMaxLength) {
        throw InvalidInput("p^m exceeds the supported sequence length");
    }
}

Params Params::make(int p, int m, int n, int lambda) {
    Params out{p, m, n, lambda};
    out.validate();
    return out;
}

void Params::validate() const {
    space().validate();
    if (n < 0 || n > m - 1) {
        throw InvalidInput("n must satisfy 0 <= n <= m-1, got n=" + std::to_string(n));
    }
}

std::string Params::to_string() const {
    return "(p=" + std::to_string(p) + ", m=" + std::to_string(m) + ", n=" + std::to_string(n) +
           ", lambda=" + std::to_string(lambda) + ")";
}

} // namespace qccs
