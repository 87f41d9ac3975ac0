#pragma once

#include "qccs/polynomial.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qccs {

/// Exact phase sequence: entry i is either ZERO or the exponent of xi_lambda.
///
/// ZERO is a separate symbol; phase 0 means xi^0 = 1.
class PhaseSequence {
public:
    static constexpr int kZero = -1;

    PhaseSequence() = default;
    /// All-ZERO sequence of the given length.
    PhaseSequence(int lambda, std::size_t length);
    /// Takes entries as given; kZero marks ZERO, everything else must be in [0, lambda).
    PhaseSequence(int lambda, std::vector<int> entries);

    int lambda() const { return lambda_; }
    std::size_t size() const { return entries_.size(); }
    std::span<const int> entries() const { return entries_; }

    bool is_zero(std::size_t i) const { return entries_[i] == kZero; }
    int operator[](std::size_t i) const { return entries_[i]; }
    void set(std::size_t i, int phase);
    void clear(std::size_t i) { entries_[i] = kZero; }

    /// Number of non-ZERO entries.
    std::size_t support_size() const;

    friend bool operator==(const PhaseSequence&, const PhaseSequence&) = default;

private:
    int lambda_ = 1;
    std::vector<int> entries_;
};

/// Most-significant-first base-p digits of i: i = sum_a digits[a] * p^(m-a-1).
std::vector<int> index_to_digits(std::int64_t i, int p, int m);
std::int64_t digits_to_index(std::span<const int> digits, int p);

/// psi(f): entry i is f at index_to_digits(i).
PhaseSequence sequence_of(const Polynomial& f);

/// psi(f|_{x_J=c}): entry i is f_i where the digits of i agree with c on J, ZERO elsewhere.
PhaseSequence restricted_sequence(const Polynomial& f, const Restriction& r);

/// Union of disjointly supported sequences. Throws InvalidSuperposition on overlap.
PhaseSequence superpose(std::span<const PhaseSequence> parts);

} // namespace qccs
