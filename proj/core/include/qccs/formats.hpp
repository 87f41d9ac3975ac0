#pragma once

#include "qccs/analysis.hpp"
#include "qccs/construction.hpp"
#include "qccs/correlation.hpp"
#include "qccs/polynomial.hpp"
#include "qccs/sequence.hpp"

#include <string>
#include <string_view>
#include <vector>

// Serialized forms. Every writer emits "schema_version"; readers throw ParseError on
// malformed input. Writers are deterministic, so write(read(write(x))) == write(x).
namespace qccs::formats {

inline constexpr int kSchemaVersion = 1;

/// {"schema_version":1,"p":3,"m":3,"lambda":3,"terms":[{"exp":[1,0,1],"coeff":1},...]}
/// schema_version is optional on read.
std::string polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(std::string_view text);

/// {"schema_version":1,"lambda":3,"entries":[...]} with -1 for ZERO.
std::string sequence_to_json(const PhaseSequence& s);
PhaseSequence sequence_from_json(std::string_view text);

/// "# schema_version,1" then "index,is_zero,phase"; ZERO rows leave phase empty.
std::string sequence_to_csv(const PhaseSequence& s);
PhaseSequence sequence_from_csv(std::string_view text, int lambda);

std::string certificate_to_json(const PathCertificate& cert);

/// {"theta1":..,"theta2":..,"theta":..,"argmax":{"codes":[i,j],"tau":t},"tolerance":..,...}
std::string report_to_json(const CorrelationReport& report);

/// "tau,|value|" rows for -L < tau < L.
std::string shift_profile_to_csv(const std::vector<ShiftSample>& samples);

std::string bounds_to_json(const BoundsReport& report);

std::string verification_to_json(const FamilyVerification& v);

std::string family_to_json(const CodeFamily& family);
CodeFamily family_from_json(std::string_view text);

/// Header as "# key,value" lines, then "k,t,d,phase_0,...,phase_{L-1}" with one row per (k,t,d).
std::string family_to_csv(const CodeFamily& family);
CodeFamily family_from_csv(std::string_view text);

} // namespace qccs::formats
