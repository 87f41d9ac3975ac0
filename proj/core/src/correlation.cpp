#include "qccs/correlation.hpp"

#include "qccs/error.hpp"
#include "qccs/threading.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace qccs {
namespace {

void check_shift(std::size_t length, std::int64_t tau) {
    const auto L = static_cast<std::int64_t>(length);
    if (tau <= -L || tau >= L) {
        throw InvalidInput("shift " + std::to_string(tau) + " outside (-L, L)");
    }
}

void check_pair(const PhaseSequence& a, const PhaseSequence& b) {
    if (a.size() != b.size()) {
        throw InvalidInput("sequences differ in length");
    }
    if (a.lambda() != b.lambda()) {
        throw InvalidInput("sequences use different alphabets");
    }
}

void check_codes(const Code& b1, const Code& b2) {
    b1.validate();
    b2.validate();
    if (b1.flock_size() != b2.flock_size() || b1.length() != b2.length() || b1.lambda() != b2.lambda()) {
        throw InvalidInput("codes differ in shape or alphabet");
    }
}

// Hot loop shared by every correlation path. Preconditions checked by callers.
void accumulate_unchecked(std::span<const int> a, std::span<const int> b, int lambda, std::int64_t tau,
                          std::int64_t* hist) {
    const auto L = static_cast<std::int64_t>(a.size());
    const int* pa = a.data();
    const int* pb = b.data();
    std::int64_t count = L - (tau >= 0 ? tau : -tau);
    if (tau >= 0) {
        pa += tau;
    } else {
        pb -= tau;
    }
    for (std::int64_t i = 0; i < count; ++i) {
        const int x = pa[i];
        const int y = pb[i];
        if (x < 0 || y < 0) {
            continue;
        }
        int d = x - y;
        if (d < 0) {
            d += lambda;
        }
        ++hist[d];
    }
}

void accumulate_code(const Code& b1, const Code& b2, std::int64_t tau, std::int64_t* hist) {
    const int lambda = b1.lambda();
    for (std::size_t r = 0; r < b1.rows.size(); ++r) {
        accumulate_unchecked(b1.rows[r].entries(), b2.rows[r].entries(), lambda, tau, hist);
    }
}

double magnitude(const CyclotomicRing& ring, std::span<const std::int64_t> hist, bool exact) {
    if (exact && ring.is_zero(hist)) {
        return 0.0;
    }
    return std::abs(ring.to_complex(hist));
}

struct ChunkPeaks {
    CorrelationPeak auto_peak;
    CorrelationPeak cross_peak;
};

void offer(CorrelationPeak& best, const CorrelationPeak& candidate) {
    if (candidate.code_a < 0) {
        return;
    }
    if (best.code_a < 0 || candidate.magnitude > best.magnitude) {
        best = candidate;
    }
}

CorrelationReport scan(std::span<const Code> codes, std::span<const int> groups, const ReportOptions& options) {
    if (codes.empty()) {
        throw InvalidInput("empty code family");
    }
    for (const auto& code : codes) {
        check_codes(codes.front(), code);
    }
    if (!groups.empty() && groups.size() != codes.size()) {
        throw InvalidInput("group ids must match the code count");
    }

    const int lambda = codes.front().lambda();
    const auto L = static_cast<std::int64_t>(codes.front().length());
    const CyclotomicRing ring(lambda);

    // Work items are (i, j) with i <= j in lexicographic order; i == j scans auto-correlation.
    std::vector<std::pair<int, int>> items;
    const int K = static_cast<int>(codes.size());
    for (int i = 0; i < K; ++i) {
        for (int j = i; j < K; ++j) {
            if (i == j || groups.empty() || groups[static_cast<std::size_t>(i)] != groups[static_cast<std::size_t>(j)]) {
                items.emplace_back(i, j);
            }
        }
    }

    const unsigned threads = resolve_threads(options.threads);
    const std::size_t chunks = std::min<std::size_t>(items.size(), std::size_t{threads} * 8);
    std::vector<ChunkPeaks> partial(chunks);

    parallel_chunks(items.size(), threads, chunks, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        std::vector<std::int64_t> hist(static_cast<std::size_t>(lambda));
        ChunkPeaks local;
        for (std::size_t w = begin; w < end; ++w) {
            const auto [i, j] = items[w];
            const Code& a = codes[static_cast<std::size_t>(i)];
            const Code& b = codes[static_cast<std::size_t>(j)];
            for (std::int64_t tau = -(L - 1); tau < L; ++tau) {
                if (i == j && tau == 0) {
                    continue;
                }
                std::fill(hist.begin(), hist.end(), 0);
                accumulate_code(a, b, tau, hist.data());
                const CorrelationPeak candidate{magnitude(ring, hist, options.exact), i, j, tau};
                offer(i == j ? local.auto_peak : local.cross_peak, candidate);
            }
        }
        partial[chunk] = local;
    });

    CorrelationReport report;
    report.tolerance = options.zero_tol;
    report.exact = options.exact;
    for (const auto& peaks : partial) {
        offer(report.auto_peak, peaks.auto_peak);
        offer(report.cross_peak, peaks.cross_peak);
    }
    report.theta1 = report.auto_peak.magnitude;
    report.theta2 = report.cross_peak.magnitude;
    report.theta = std::max(report.theta1, report.theta2);
    report.peak = report.auto_peak;
    const auto& cross = report.cross_peak;
    if (cross.code_a >= 0) {
        const auto key = [](const CorrelationPeak& p) { return std::tuple(p.code_a, p.code_b, p.tau); };
        if (report.peak.code_a < 0 || cross.magnitude > report.peak.magnitude ||
            (cross.magnitude == report.peak.magnitude && key(cross) < key(report.peak))) {
            report.peak = cross;
        }
    }
    return report;
}

} // namespace

void Code::validate() const {
    if (rows.empty()) {
        throw InvalidInput("code has no rows");
    }
    for (const auto& row : rows) {
        if (row.size() != rows.front().size() || row.lambda() != rows.front().lambda()) {
            throw InvalidInput("code rows differ in length or alphabet");
        }
    }
    if (rows.front().size() == 0) {
        throw InvalidInput("code rows are empty");
    }
}

void accumulate_accf(const PhaseSequence& a, const PhaseSequence& b, std::int64_t tau, std::span<std::int64_t> hist) {
    check_pair(a, b);
    check_shift(a.size(), tau);
    if (static_cast<int>(hist.size()) != a.lambda()) {
        throw InvalidInput("histogram size must equal lambda");
    }
    accumulate_unchecked(a.entries(), b.entries(), a.lambda(), tau, hist.data());
}

PhaseHistogram accf_histogram(const PhaseSequence& a, const PhaseSequence& b, std::int64_t tau) {
    PhaseHistogram hist(static_cast<std::size_t>(a.lambda()), 0);
    accumulate_accf(a, b, tau, hist);
    return hist;
}

PhaseHistogram code_accf_histogram(const Code& b1, const Code& b2, std::int64_t tau) {
    check_codes(b1, b2);
    check_shift(b1.length(), tau);
    PhaseHistogram hist(static_cast<std::size_t>(b1.lambda()), 0);
    accumulate_code(b1, b2, tau, hist.data());
    return hist;
}

CorrelationValue accf(const PhaseSequence& a, const PhaseSequence& b, std::int64_t tau) {
    return CyclotomicRing(a.lambda()).to_complex(accf_histogram(a, b, tau));
}

CorrelationValue code_accf(const Code& b1, const Code& b2, std::int64_t tau) {
    return CyclotomicRing(b1.lambda()).to_complex(code_accf_histogram(b1, b2, tau));
}

bool decomposition_check(const Polynomial& f, const Polynomial& f2, std::span<const int> J, std::int64_t tau,
                            double tol) {
    if (!(f.space() == f2.space())) {
        throw InvalidInput("functions live in different spaces");
    }
    const auto& space = f.space();
    const CorrelationValue whole = accf(sequence_of(f), sequence_of(f2), tau);

    const int n = static_cast<int>(J.size());
    const std::int64_t count = ipow(space.p, n);
    std::vector<PhaseSequence> parts_f;
    std::vector<PhaseSequence> parts_f2;
    for (std::int64_t c = 0; c < count; ++c) {
        const Restriction r{std::vector<int>(J.begin(), J.end()), index_to_digits(c, space.p, n)};
        parts_f.push_back(restricted_sequence(f, r));
        parts_f2.push_back(restricted_sequence(f2, r));
    }
    CorrelationValue sum{0.0, 0.0};
    for (const auto& a : parts_f) {
        for (const auto& b : parts_f2) {
            sum += accf(a, b, tau);
        }
    }
    return std::abs(whole - sum) <= tol;
}

CorrelationReport family_report(std::span<const Code> codes, const ReportOptions& options) {
    return scan(codes, {}, options);
}

CorrelationReport grouped_report(std::span<const Code> codes, std::span<const int> groups,
                                 const ReportOptions& options) {
    if (groups.size() != codes.size()) {
        throw InvalidInput("group ids must match the code count");
    }
    return scan(codes, groups, options);
}

std::vector<ShiftSample> shift_profile(const Code& b1, const Code& b2, const ReportOptions& options) {
    check_codes(b1, b2);
    const CyclotomicRing ring(b1.lambda());
    const auto L = static_cast<std::int64_t>(b1.length());
    std::vector<ShiftSample> out;
    out.reserve(static_cast<std::size_t>(2 * L - 1));
    std::vector<std::int64_t> hist(static_cast<std::size_t>(b1.lambda()));
    for (std::int64_t tau = -(L - 1); tau < L; ++tau) {
        std::fill(hist.begin(), hist.end(), 0);
        accumulate_code(b1, b2, tau, hist.data());
        out.push_back({tau, magnitude(ring, hist, options.exact)});
    }
    return out;
}

} // namespace qccs
