#include "qccs/sequence.hpp"

#include "qccs/error.hpp"

#include <algorithm>

namespace qccs {

PhaseSequence::PhaseSequence(int lambda, std::size_t length) : lambda_(lambda), entries_(length, kZero) {
    if (lambda <= 0) {
        throw InvalidInput("lambda must be positive");
    }
}

PhaseSequence::PhaseSequence(int lambda, std::vector<int> entries) : lambda_(lambda), entries_(std::move(entries)) {
    if (lambda <= 0) {
        throw InvalidInput("lambda must be positive");
    }
    for (int e : entries_) {
        if (e != kZero && (e < 0 || e >= lambda)) {
            throw InvalidInput("phase " + std::to_string(e) + " outside [0, lambda)");
        }
    }
}

void PhaseSequence::set(std::size_t i, int phase) {
    if (phase < 0 || phase >= lambda_) {
        throw InvalidInput("phase outside [0, lambda)");
    }
    entries_.at(i) = phase;
}

std::size_t PhaseSequence::support_size() const {
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](int e) { return e != kZero; }));
}

std::vector<int> index_to_digits(std::int64_t i, int p, int m) {
    if (p < 2 || m < 0) {
        throw InvalidInput("invalid base or digit count");
    }
    if (i < 0 || i >= ipow(p, m)) {
        throw InvalidInput("index " + std::to_string(i) + " outside [0, p^m)");
    }
    std::vector<int> digits(m, 0);
    for (int a = m - 1; a >= 0; --a) {
        digits[a] = static_cast<int>(i % p);
        i /= p;
    }
    return digits;
}

std::int64_t digits_to_index(std::span<const int> digits, int p) {
    std::int64_t i = 0;
    for (int d : digits) {
        if (d < 0 || d >= p) {
            throw InvalidInput("digit outside [0, p)");
        }
        i = i * p + d;
    }
    return i;
}

PhaseSequence sequence_of(const Polynomial& f) {
    const auto& space = f.space();
    const auto length = static_cast<std::size_t>(space.length());
    std::vector<int> entries(length);
    std::vector<int> digits(space.m, 0);
    for (std::size_t i = 0; i < length; ++i) {
        entries[i] = evaluate(f, digits);
        for (int a = space.m - 1; a >= 0; --a) {
            if (++digits[a] < space.p) {
                break;
            }
            digits[a] = 0;
        }
    }
    return PhaseSequence(space.lambda, std::move(entries));
}

PhaseSequence restricted_sequence(const Polynomial& f, const Restriction& r) {
    const auto& space = f.space();
    r.validate(space);
    const auto free = free_variables(space.m, r.J);
    PhaseSequence out(space.lambda, static_cast<std::size_t>(space.length()));
    std::vector<int> y(free.size(), 0);
    do {
        const auto point = merge_point(space.m, r, y);
        out.set(static_cast<std::size_t>(digits_to_index(point, space.p)), evaluate(f, point));
        std::size_t a = y.size();
        while (a-- > 0) {
            if (++y[a] < space.p) {
                break;
            }
            y[a] = 0;
        }
        if (a == static_cast<std::size_t>(-1)) {
            break;
        }
    } while (true);
    return out;
}

PhaseSequence superpose(std::span<const PhaseSequence> parts) {
    if (parts.empty()) {
        throw InvalidSuperposition("nothing to superpose");
    }
    PhaseSequence out(parts.front().lambda(), parts.front().size());
    for (const auto& part : parts) {
        if (part.size() != out.size() || part.lambda() != out.lambda()) {
            throw InvalidSuperposition("parts differ in length or alphabet");
        }
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (part.is_zero(i)) {
                continue;
            }
            if (!out.is_zero(i)) {
                throw InvalidSuperposition("supports overlap at index " + std::to_string(i));
            }
            out.set(i, part[i]);
        }
    }
    return out;
}

} // namespace qccs
