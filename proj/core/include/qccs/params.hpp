#pragma once

#include <cstdint>
#include <string>

namespace qccs {

/// Integer power with overflow check; throws InvalidInput on overflow.
std::int64_t ipow(std::int64_t base, int exp);

bool is_prime(std::int64_t v);

/// Domain Z_p^m and codomain Z_lambda of a multivariate function.
struct FunctionSpace {
    int p = 3;
    int m = 1;
    int lambda = 3;

    /// Throws InvalidInput unless p is an odd prime, m >= 1, p | lambda and p^m is small enough to materialize.
    void validate() const;

    /// Sequence length p^m.
    std::int64_t length() const { return ipow(p, m); }

    friend bool operator==(const FunctionSpace&, const FunctionSpace&) = default;
};

/// Construction parameters (p, m, n, lambda).
struct Params {
    int p = 3;
    int m = 1;
    int n = 0;
    int lambda = 3;

    static Params make(int p, int m, int n, int lambda);

    void validate() const;

    FunctionSpace space() const { return {p, m, lambda}; }

    /// lambda / p, the required path edge weight.
    int unit() const { return lambda / p; }

    std::string to_string() const;

    friend bool operator==(const Params&, const Params&) = default;
};

/// Largest sequence length accepted anywhere in the library.
inline constexpr std::int64_t kMaxLength = std::int64_t{1} << 24;

} // namespace qccs
