#include "qccs/formats.hpp"

#include "qccs/error.hpp"

#include <cmath>
#include <json.hpp>
#include <map>
#include <sstream>

namespace qccs::formats {
namespace {

using json = nlohmann::ordered_json;

json parse(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

template <typename T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
    }
}

void check_schema(const json& j, bool required) {
    if (!j.contains("schema_version")) {
        if (required) {
            throw ParseError("missing schema_version");
        }
        return;
    }
    if (field<int>(j, "schema_version") != kSchemaVersion) {
        throw ParseError("unsupported schema_version");
    }
}

json number_or_null(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

json polynomial_json(const Polynomial& f) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["p"] = f.space().p;
    j["m"] = f.space().m;
    j["lambda"] = f.space().lambda;
    json terms = json::array();
    for (const auto& [exp, coeff] : f.terms()) {
        terms.push_back({{"exp", exp}, {"coeff", coeff}});
    }
    j["terms"] = terms;
    return j;
}

Polynomial polynomial_from(const json& j) {
    check_schema(j, false);
    const FunctionSpace space{field<int>(j, "p"), field<int>(j, "m"), field<int>(j, "lambda")};
    Polynomial f;
    try {
        f = Polynomial(space);
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("invalid polynomial space: ") + e.what());
    }
    const auto terms = field<json>(j, "terms");
    if (!terms.is_array()) {
        throw ParseError("\"terms\" must be an array");
    }
    for (const auto& t : terms) {
        const auto exp = field<Exponent>(t, "exp");
        const auto coeff = field<long long>(t, "coeff");
        if (coeff < 0 || coeff >= space.lambda) {
            throw ParseError("coefficient outside [0, lambda)");
        }
        try {
            f.add_term(exp, coeff);
        } catch (const InvalidInput& e) {
            throw ParseError(e.what());
        }
    }
    return f;
}

json report_json(const CorrelationReport& r) {
    const auto peak = [](const CorrelationPeak& p) {
        json j;
        j["codes"] = json::array({p.code_a, p.code_b});
        j["tau"] = p.tau;
        j["magnitude"] = p.magnitude;
        return j;
    };
    json j;
    j["schema_version"] = kSchemaVersion;
    j["theta1"] = r.theta1;
    j["theta2"] = r.theta2;
    j["theta"] = r.theta;
    j["argmax"] = {{"codes", json::array({r.peak.code_a, r.peak.code_b})}, {"tau", r.peak.tau}};
    j["auto_argmax"] = peak(r.auto_peak);
    j["cross_argmax"] = peak(r.cross_peak);
    j["tolerance"] = r.tolerance;
    j["exact"] = r.exact;
    return j;
}

std::string kind_name(FamilyKind kind) {
    return kind == FamilyKind::qccs ? "qccs" : "ccc";
}

FamilyKind kind_from(const std::string& s) {
    if (s == "qccs") {
        return FamilyKind::qccs;
    }
    if (s == "ccc") {
        return FamilyKind::ccc;
    }
    throw ParseError("unknown family kind \"" + s + "\"");
}

// Shape and range checks shared by both family readers.
void validate_family(CodeFamily& family) {
    const auto& d = family.descriptor;
    const auto& params = family.params;
    try {
        params.validate();
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("invalid family parameters: ") + e.what());
    }
    const auto expected = family.kind == FamilyKind::qccs ? FamilyDescriptor::qccs(params) : FamilyDescriptor::ccc(params);
    if (!(d == expected)) {
        throw ParseError("family descriptor does not match (p, m, n, lambda)");
    }
    if (static_cast<std::int64_t>(family.codes.size()) != d.K) {
        throw ParseError("expected " + std::to_string(d.K) + " codes, found " + std::to_string(family.codes.size()));
    }
    for (const auto& code : family.codes) {
        if (static_cast<std::int64_t>(code.rows.size()) != d.M) {
            throw ParseError("code has " + std::to_string(code.rows.size()) + " rows, expected " + std::to_string(d.M));
        }
        for (const auto& row : code.rows) {
            if (static_cast<std::int64_t>(row.size()) != d.L) {
                throw ParseError("row length " + std::to_string(row.size()) + " != L = " + std::to_string(d.L));
            }
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (row.is_zero(i)) {
                    throw ParseError("constructed codes contain no ZERO entries");
                }
            }
        }
        if (code.label.k < 1 || code.label.k >= params.p || code.label.t < 0 || code.label.t >= d.M) {
            throw ParseError("code label (k, t) out of range");
        }
    }
}

PhaseSequence row_from(const std::vector<int>& phases, int lambda) {
    try {
        return PhaseSequence(lambda, phases);
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
}

SeedSpec seed_from(const Polynomial& f, std::vector<int> J, const std::vector<int>& path) {
    SeedSpec seed;
    seed.f = f;
    seed.J = std::move(J);
    try {
        seed.path = certify_hamiltonian_path(seed.f, seed.J);
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("invalid J: ") + e.what());
    }
    if (path.empty()) {
        throw ParseError("empty path order");
    }
    seed.path.free_vars = path;
    seed.pi_first = path.front();
    seed.pi_last = path.back();
    return seed;
}

std::string join_ints(const std::vector<int>& v, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            os << sep;
        }
        os << v[i];
    }
    return os.str();
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

long long to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) {
            throw ParseError("trailing characters in integer \"" + s + "\"");
        }
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("expected an integer, got \"" + s + "\"");
    }
}

std::vector<int> int_list(const std::string& s, char sep) {
    std::vector<int> out;
    if (s.empty()) {
        return out;
    }
    for (const auto& part : split(s, sep)) {
        out.push_back(static_cast<int>(to_int(part)));
    }
    return out;
}

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> lines;
    for (auto& line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(std::move(line));
    }
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    return lines;
}

} // namespace

std::string polynomial_to_json(const Polynomial& f) {
    return polynomial_json(f).dump();
}

Polynomial polynomial_from_json(std::string_view text) {
    return polynomial_from(parse(text));
}

std::string sequence_to_json(const PhaseSequence& s) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["lambda"] = s.lambda();
    j["entries"] = std::vector<int>(s.entries().begin(), s.entries().end());
    return j.dump();
}

PhaseSequence sequence_from_json(std::string_view text) {
    const auto j = parse(text);
    check_schema(j, true);
    return row_from(field<std::vector<int>>(j, "entries"), field<int>(j, "lambda"));
}

std::string sequence_to_csv(const PhaseSequence& s) {
    std::ostringstream os;
    os << "# schema_version," << kSchemaVersion << "\n";
    os << "index,is_zero,phase\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << i << ',' << (s.is_zero(i) ? 1 : 0) << ',';
        if (!s.is_zero(i)) {
            os << s[i];
        }
        os << '\n';
    }
    return os.str();
}

PhaseSequence sequence_from_csv(std::string_view text, int lambda) {
    const auto lines = lines_of(text);
    std::vector<int> entries;
    bool header = false;
    for (const auto& line : lines) {
        if (line.rfind("#", 0) == 0) {
            continue;
        }
        if (!header) {
            if (line != "index,is_zero,phase") {
                throw ParseError("unexpected sequence CSV header");
            }
            header = true;
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != 3 || to_int(cells[0]) != static_cast<long long>(entries.size())) {
            throw ParseError("malformed sequence CSV row: " + line);
        }
        const bool zero = to_int(cells[1]) != 0;
        entries.push_back(zero ? PhaseSequence::kZero : static_cast<int>(to_int(cells[2])));
    }
    if (!header) {
        throw ParseError("missing sequence CSV header");
    }
    return row_from(entries, lambda);
}

std::string certificate_to_json(const PathCertificate& cert) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["valid"] = cert.valid;
    j["path"] = cert.free_vars;
    j["edge_weight"] = cert.edge_weight;
    j["failure_reason"] = cert.failure_reason ? json(*cert.failure_reason) : json(nullptr);
    j["restrictions_checked"] = cert.restrictions_checked;
    return j.dump();
}

std::string report_to_json(const CorrelationReport& report) {
    return report_json(report).dump();
}

std::string shift_profile_to_csv(const std::vector<ShiftSample>& samples) {
    std::ostringstream os;
    os.precision(17);
    os << "# schema_version," << kSchemaVersion << "\n";
    os << "tau,|value|\n";
    for (const auto& s : samples) {
        os << s.tau << ',' << s.magnitude << '\n';
    }
    return os.str();
}

std::string bounds_to_json(const BoundsReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["K"] = r.K;
    j["M"] = r.M;
    j["L"] = r.L;
    j["theta"] = r.theta;
    j["theta_source"] = to_string(r.theta_source);
    j["welch_bound"] = r.welch_bound;
    j["liu_bound"] = r.liu_bound ? json(*r.liu_bound) : json(nullptr);
    j["rho_welch"] = number_or_null(r.rho_welch);
    j["rho_liu"] = r.rho_liu ? number_or_null(*r.rho_liu) : json(nullptr);
    j["applied_bound"] = r.applied_bound;
    j["rho"] = number_or_null(r.rho);
    j["classification"] = to_string(r.classification);
    j["closed_form_rho"] = r.closed_form_rho ? json(*r.closed_form_rho) : json(nullptr);
    j["closed_form_agrees"] = r.closed_form_agrees ? json(*r.closed_form_agrees) : json(nullptr);
    j["notes"] = r.notes;
    return j.dump();
}

std::string verification_to_json(const FamilyVerification& v) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["pass"] = v.pass;
    j["theta_bound"] = v.theta_bound;
    json sets = json::array();
    json failures = json::array();
    double tolerance = 0.0;
    bool exact = false;
    for (const auto& s : v.per_set) {
        sets.push_back({{"k", s.k}, {"pass", s.pass}, {"report", report_json(s.report)}});
        tolerance = s.report.tolerance;
        exact = s.report.exact;
        if (!s.pass) {
            failures.push_back({{"check", "ccc"},
                                {"k", s.k},
                                {"codes", json::array({s.report.peak.code_a, s.report.peak.code_b})},
                                {"tau", s.report.peak.tau},
                                {"magnitude", s.report.peak.magnitude}});
        }
    }
    j["tolerance"] = tolerance;
    j["exact"] = exact;
    j["per_set"] = sets;
    if (v.cross_set) {
        j["cross_set"] = {{"pass", v.cross_set_pass}, {"report", report_json(*v.cross_set)}};
        if (!v.cross_set_pass) {
            const auto& peak = v.cross_set->cross_peak;
            failures.push_back({{"check", "cross_set"},
                                {"codes", json::array({peak.code_a, peak.code_b})},
                                {"tau", peak.tau},
                                {"magnitude", peak.magnitude}});
        }
    } else {
        j["cross_set"] = nullptr;
    }
    j["zero_shift"] = {{"pass", v.zero_shift_pass},
                       {"failing_code", v.zero_shift_failure >= 0 ? json(v.zero_shift_failure) : json(nullptr)}};
    if (!v.zero_shift_pass) {
        failures.push_back({{"check", "zero_shift"},
                            {"codes", json::array({v.zero_shift_failure, v.zero_shift_failure})},
                            {"tau", 0}});
    }
    j["failures"] = failures;
    return j.dump();
}

std::string family_to_json(const CodeFamily& family) {
    const auto& d = family.descriptor;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind_name(family.kind);
    j["p"] = family.params.p;
    j["m"] = family.params.m;
    j["n"] = family.params.n;
    j["lambda"] = family.params.lambda;
    j["K"] = d.K;
    j["M"] = d.M;
    j["L"] = d.L;
    j["theta_bound"] = d.theta_bound;
    j["seed"] = polynomial_json(family.seed.f);
    j["J"] = family.seed.J;
    j["path"] = family.seed.path.free_vars;
    json codes = json::array();
    for (const auto& code : family.codes) {
        json rows = json::array();
        for (const auto& row : code.rows) {
            rows.push_back(std::vector<int>(row.entries().begin(), row.entries().end()));
        }
        codes.push_back({{"k", code.label.k}, {"t", code.label.t}, {"rows", rows}});
    }
    j["codes"] = codes;
    return j.dump();
}

CodeFamily family_from_json(std::string_view text) {
    const auto j = parse(text);
    check_schema(j, true);
    CodeFamily family;
    family.kind = kind_from(field<std::string>(j, "kind"));
    family.params = Params{field<int>(j, "p"), field<int>(j, "m"), field<int>(j, "n"), field<int>(j, "lambda")};
    family.descriptor = {field<std::int64_t>(j, "K"), field<std::int64_t>(j, "M"), field<std::int64_t>(j, "L"),
                         field<std::int64_t>(j, "theta_bound"), family.params.lambda};
    family.seed = seed_from(polynomial_from(field<json>(j, "seed")), field<std::vector<int>>(j, "J"),
                            field<std::vector<int>>(j, "path"));
    const auto codes = field<json>(j, "codes");
    if (!codes.is_array()) {
        throw ParseError("\"codes\" must be an array");
    }
    for (const auto& c : codes) {
        Code code;
        code.label = {field<int>(c, "k"), field<int>(c, "t")};
        for (const auto& row : field<std::vector<std::vector<int>>>(c, "rows")) {
            code.rows.push_back(row_from(row, family.params.lambda));
        }
        family.codes.push_back(std::move(code));
    }
    validate_family(family);
    return family;
}

std::string family_to_csv(const CodeFamily& family) {
    const auto& d = family.descriptor;
    std::ostringstream os;
    os << "# schema_version," << kSchemaVersion << "\n";
    os << "# kind," << kind_name(family.kind) << "\n";
    os << "# p," << family.params.p << "\n";
    os << "# m," << family.params.m << "\n";
    os << "# n," << family.params.n << "\n";
    os << "# lambda," << family.params.lambda << "\n";
    os << "# K," << d.K << "\n";
    os << "# M," << d.M << "\n";
    os << "# L," << d.L << "\n";
    os << "# theta_bound," << d.theta_bound << "\n";
    os << "# J," << join_ints(family.seed.J, ';') << "\n";
    os << "# path," << join_ints(family.seed.path.free_vars, ';') << "\n";
    os << "# seed," << polynomial_to_json(family.seed.f) << "\n";
    os << "k,t,d";
    for (std::int64_t i = 0; i < d.L; ++i) {
        os << ",phase_" << i;
    }
    os << "\n";
    for (const auto& code : family.codes) {
        for (std::size_t r = 0; r < code.rows.size(); ++r) {
            os << code.label.k << ',' << code.label.t << ',' << r;
            for (int v : code.rows[r].entries()) {
                os << ',' << v;
            }
            os << '\n';
        }
    }
    return os.str();
}

CodeFamily family_from_csv(std::string_view text) {
    const auto lines = lines_of(text);
    std::map<std::string, std::string> header;
    std::size_t i = 0;
    for (; i < lines.size() && lines[i].rfind("# ", 0) == 0; ++i) {
        const auto comma = lines[i].find(',');
        if (comma == std::string::npos) {
            throw ParseError("malformed header line: " + lines[i]);
        }
        header[lines[i].substr(2, comma - 2)] = lines[i].substr(comma + 1);
    }
    const auto get = [&](const std::string& key) {
        auto it = header.find(key);
        if (it == header.end()) {
            throw ParseError("missing header \"" + key + "\"");
        }
        return it->second;
    };
    if (to_int(get("schema_version")) != kSchemaVersion) {
        throw ParseError("unsupported schema_version");
    }
    CodeFamily family;
    family.kind = kind_from(get("kind"));
    family.params = Params{static_cast<int>(to_int(get("p"))), static_cast<int>(to_int(get("m"))),
                           static_cast<int>(to_int(get("n"))), static_cast<int>(to_int(get("lambda")))};
    family.descriptor = {to_int(get("K")), to_int(get("M")), to_int(get("L")), to_int(get("theta_bound")),
                         family.params.lambda};
    family.seed = seed_from(polynomial_from_json(get("seed")), int_list(get("J"), ';'), int_list(get("path"), ';'));

    if (i >= lines.size() || lines[i].rfind("k,t,d", 0) != 0) {
        throw ParseError("missing column header");
    }
    ++i;
    for (; i < lines.size(); ++i) {
        const auto cells = split(lines[i], ',');
        if (cells.size() < 4) {
            throw ParseError("short family CSV row");
        }
        const auto k = static_cast<int>(to_int(cells[0]));
        const auto t = static_cast<int>(to_int(cells[1]));
        const auto d = to_int(cells[2]);
        std::vector<int> phases;
        phases.reserve(cells.size() - 3);
        for (std::size_t c = 3; c < cells.size(); ++c) {
            phases.push_back(static_cast<int>(to_int(cells[c])));
        }
        if (d == 0) {
            family.codes.push_back(Code{{}, {k, t}});
        }
        if (family.codes.empty() || !(family.codes.back().label == CodeLabel{k, t}) ||
            static_cast<std::int64_t>(family.codes.back().rows.size()) != d) {
            throw ParseError("family CSV rows out of (k, t, d) order");
        }
        family.codes.back().rows.push_back(row_from(phases, family.params.lambda));
    }
    validate_family(family);
    return family;
}

} // namespace qccs::formats
