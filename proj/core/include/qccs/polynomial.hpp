#pragma once

#include "qccs/params.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qccs {

using Exponent = std::vector<int>;

/// Sparse multivariate function Z_p^m -> Z_lambda.
///
/// Terms map exponent vectors (length m) to coefficients in [1, lambda-1].
/// Exponents are never reduced; monomials are evaluated over the integers
/// {0,...,p-1} and only the sum is taken mod lambda.
class Polynomial {
public:
    using TermMap = std::map<Exponent, int>;

    Polynomial() = default;
    explicit Polynomial(FunctionSpace space);

    const FunctionSpace& space() const { return space_; }
    int arity() const { return space_.m; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff * x^exp, merging with an existing monomial and dropping zero sums.
    Polynomial& add_term(const Exponent& exp, long long coeff);

    Polynomial& add_constant(long long coeff);
    Polynomial& add_linear(int var, long long coeff);
    /// coeff * x_i * x_j; i == j gives a square term.
    Polynomial& add_quadratic(int i, int j, long long coeff);

    int coefficient(const Exponent& exp) const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    /// Variables that occur in at least one term.
    std::vector<int> support() const;

    /// Terms of exactly the given total degree.
    Polynomial homogeneous_part(int deg) const;

    Polynomial operator+(const Polynomial& other) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const;

private:
    FunctionSpace space_;
    TermMap terms_;
};

/// Value of f at a point of Z_p^m.
int evaluate(const Polynomial& f, std::span<const int> point);

/// Variables fixed to constants: x_{J[a]} := c[a].
struct Restriction {
    std::vector<int> J;
    std::vector<int> c;

    /// Throws InvalidInput unless J is strictly increasing within [0,m), |J| == |c| and c in Z_p.
    void validate(const FunctionSpace& space) const;
};

/// Indices of Z_m not in J, ascending.
std::vector<int> free_variables(int m, std::span<const int> J);

/// Full point from restricted coordinates c (on J) and free coordinates y (on the complement, ascending).
std::vector<int> merge_point(int m, const Restriction& r, std::span<const int> y);

/// f with x_J := c substituted. The result keeps arity m; restricted variables no longer occur.
Polynomial restrict(const Polynomial& f, const Restriction& r);

struct FunctionGraph {
    std::vector<int> vertices;
    std::map<std::pair<int, int>, int> edges; // key (i, j) with i < j
    std::map<int, int> loops;

    friend bool operator==(const FunctionGraph&, const FunctionGraph&) = default;
};

/// Graph of the quadratic part of f on all m variables. Throws NotQuadratic if deg f > 2.
FunctionGraph build_graph(const Polynomial& f);

/// Graph on the given vertex set. Throws InvalidInput if a quadratic term touches a vertex outside it.
FunctionGraph build_graph(const Polynomial& f, std::span<const int> vertices);

struct PathCertificate {
    /// Path order l_{pi(0)}, ..., l_{pi(m-n-1)}, starting at the smaller-index endpoint.
    std::vector<int> free_vars;
    int edge_weight = 0;
    bool valid = false;
    std::optional<std::string> failure_reason;
    /// Number of restrictions c actually examined (1 when f is globally quadratic).
    std::int64_t restrictions_checked = 0;
};

/// Single-graph check: loops, spanning simple path, all weights == required_weight.
PathCertificate check_path(const FunctionGraph& g, int required_weight);

/// Checks that every restriction f|_{x_J=c} has the same Hamiltonian path of weight lambda/p on the free variables.
PathCertificate certify_hamiltonian_path(const Polynomial& f, std::span<const int> J);

/// Same check without the globally-quadratic short circuit.
PathCertificate certify_hamiltonian_path_exhaustive(const Polynomial& f, std::span<const int> J);

} // namespace qccs
