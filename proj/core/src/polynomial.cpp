#include "qccs/polynomial.hpp"

#include "qccs/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qccs {
namespace {

int reduce(long long v, int lambda) {
    long long r = v % lambda;
    return static_cast<int>(r < 0 ? r + lambda : r);
}

int power_mod(int base, int exp, int lambda) {
    long long out = 1 % lambda;
    for (int i = 0; i < exp; ++i) {
        out = (out * base) % lambda;
    }
    return static_cast<int>(out);
}

std::string join(std::span<const int> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    os << ')';
    return os.str();
}

// Advances a base-p odometer (most significant digit first); false after the last value.
bool next_digits(std::vector<int>& digits, int p) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < p) {
            return true;
        }
        digits[i] = 0;
    }
    return false;
}

void validate_J(const FunctionSpace& space, std::span<const int> J) {
    for (std::size_t a = 0; a < J.size(); ++a) {
        if (J[a] < 0 || J[a] >= space.m) {
            throw InvalidInput("restriction index " + std::to_string(J[a]) + " outside [0, m)");
        }
        if (a > 0 && J[a] <= J[a - 1]) {
            throw InvalidInput("restriction indices must be strictly increasing");
        }
    }
    if (static_cast<int>(J.size()) > space.m - 1) {
        throw InvalidInput("at most m-1 variables may be restricted");
    }
}

} // namespace

Polynomial::Polynomial(FunctionSpace space) : space_(space) {
    space_.validate();
}

Polynomial& Polynomial::add_term(const Exponent& exp, long long coeff) {
    if (static_cast<int>(exp.size()) != space_.m) {
        throw InvalidInput("exponent vector length " + std::to_string(exp.size()) + " != m = " +
                           std::to_string(space_.m));
    }
    if (std::any_of(exp.begin(), exp.end(), [](int e) { return e < 0; })) {
        throw InvalidInput("negative exponent");
    }
    const int c = reduce(coeff, space_.lambda);
    if (c == 0) {
        return *this;
    }
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second = reduce(static_cast<long long>(it->second) + c, space_.lambda);
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::add_constant(long long coeff) {
    return add_term(Exponent(space_.m, 0), coeff);
}

Polynomial& Polynomial::add_linear(int var, long long coeff) {
    if (var < 0 || var >= space_.m) {
        throw InvalidInput("variable index out of range");
    }
    Exponent e(space_.m, 0);
    e[var] = 1;
    return add_term(e, coeff);
}

Polynomial& Polynomial::add_quadratic(int i, int j, long long coeff) {
    if (i < 0 || i >= space_.m || j < 0 || j >= space_.m) {
        throw InvalidInput("variable index out of range");
    }
    Exponent e(space_.m, 0);
    e[i] += 1;
    e[j] += 1;
    return add_term(e, coeff);
}

int Polynomial::coefficient(const Exponent& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

int Polynomial::degree() const {
    int deg = -1;
    for (const auto& [exp, coeff] : terms_) {
        deg = std::max(deg, std::accumulate(exp.begin(), exp.end(), 0));
    }
    return deg;
}

std::vector<int> Polynomial::support() const {
    std::vector<int> out;
    for (int v = 0; v < space_.m; ++v) {
        for (const auto& [exp, coeff] : terms_) {
            if (exp[v] > 0) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

Polynomial Polynomial::homogeneous_part(int deg) const {
    Polynomial out(space_);
    for (const auto& [exp, coeff] : terms_) {
        if (std::accumulate(exp.begin(), exp.end(), 0) == deg) {
            out.terms_.emplace(exp, coeff);
        }
    }
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (!(space_ == other.space_)) {
        throw InvalidInput("cannot add polynomials over different spaces");
    }
    Polynomial out = *this;
    for (const auto& [exp, coeff] : other.terms_) {
        out.add_term(exp, coeff);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    // Highest degree first reads more naturally.
    std::vector<std::pair<Exponent, int>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return std::accumulate(a.first.begin(), a.first.end(), 0) >
               std::accumulate(b.first.begin(), b.first.end(), 0);
    });
    for (const auto& [exp, coeff] : ordered) {
        if (!first) {
            os << " + ";
        }
        first = false;
        const bool constant = std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
        if (coeff != 1 || constant) {
            os << coeff;
        }
        bool first_var = coeff == 1;
        for (int v = 0; v < static_cast<int>(exp.size()); ++v) {
            if (exp[v] == 0) {
                continue;
            }
            if (!first_var) {
                os << '*';
            }
            first_var = false;
            os << 'x' << v;
            if (exp[v] > 1) {
                os << '^' << exp[v];
            }
        }
    }
    return os.str();
}

int evaluate(const Polynomial& f, std::span<const int> point) {
    const auto& space = f.space();
    if (static_cast<int>(point.size()) != space.m) {
        throw InvalidInput("point has " + std::to_string(point.size()) + " coordinates, expected " +
                           std::to_string(space.m));
    }
    for (int x : point) {
        if (x < 0 || x >= space.p) {
            throw InvalidInput("point coordinate outside Z_p");
        }
    }
    long long sum = 0;
    for (const auto& [exp, coeff] : f.terms()) {
        long long prod = coeff;
        for (int v = 0; v < space.m && prod != 0; ++v) {
            if (exp[v] > 0) {
                prod = (prod * power_mod(point[v], exp[v], space.lambda)) % space.lambda;
            }
        }
        sum += prod;
    }
    return reduce(sum, space.lambda);
}

void Restriction::validate(const FunctionSpace& space) const {
    validate_J(space, J);
    if (J.size() != c.size()) {
        throw InvalidInput("restriction index and value vectors differ in length");
    }
    for (int v : c) {
        if (v < 0 || v >= space.p) {
            throw InvalidInput("restriction value outside Z_p");
        }
    }
}

std::vector<int> free_variables(int m, std::span<const int> J) {
    std::vector<int> out;
    for (int v = 0; v < m; ++v) {
        if (std::find(J.begin(), J.end(), v) == J.end()) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<int> merge_point(int m, const Restriction& r, std::span<const int> y) {
    const auto free = free_variables(m, r.J);
    if (y.size() != free.size() || r.J.size() != r.c.size()) {
        throw InvalidInput("free coordinate count does not match the restriction");
    }
    std::vector<int> point(m, 0);
    for (std::size_t a = 0; a < r.J.size(); ++a) {
        point[r.J[a]] = r.c[a];
    }
    for (std::size_t a = 0; a < free.size(); ++a) {
        point[free[a]] = y[a];
    }
    return point;
}

Polynomial restrict(const Polynomial& f, const Restriction& r) {
    r.validate(f.space());
    const int lambda = f.space().lambda;
    Polynomial out(f.space());
    for (const auto& [exp, coeff] : f.terms()) {
        Exponent e = exp;
        long long c = coeff;
        for (std::size_t a = 0; a < r.J.size(); ++a) {
            c = (c * power_mod(r.c[a], e[r.J[a]], lambda)) % lambda;
            e[r.J[a]] = 0;
        }
        out.add_term(e, c);
    }
    return out;
}

FunctionGraph build_graph(const Polynomial& f) {
    std::vector<int> all(f.arity());
    std::iota(all.begin(), all.end(), 0);
    return build_graph(f, all);
}

FunctionGraph build_graph(const Polynomial& f, std::span<const int> vertices) {
    if (f.degree() > 2) {
        throw NotQuadratic("graph requested for a polynomial of degree " + std::to_string(f.degree()));
    }
    FunctionGraph g;
    g.vertices.assign(vertices.begin(), vertices.end());
    std::sort(g.vertices.begin(), g.vertices.end());
    auto known = [&](int v) { return std::binary_search(g.vertices.begin(), g.vertices.end(), v); };
    for (const auto& [exp, coeff] : f.terms()) {
        std::vector<int> vars;
        int deg = 0;
        for (int v = 0; v < f.arity(); ++v) {
            if (exp[v] > 0) {
                vars.push_back(v);
                deg += exp[v];
            }
        }
        if (deg != 2) {
            continue;
        }
        for (int v : vars) {
            if (!known(v)) {
                throw InvalidInput("quadratic term on x" + std::to_string(v) + " outside the vertex set");
            }
        }
        if (vars.size() == 1) {
            g.loops[vars[0]] = coeff;
        } else {
            g.edges[{vars[0], vars[1]}] = coeff;
        }
    }
    return g;
}

PathCertificate check_path(const FunctionGraph& g, int required_weight) {
    PathCertificate cert;
    cert.edge_weight = required_weight;
    auto fail = [&](std::string reason) {
        cert.valid = false;
        cert.free_vars.clear();
        cert.failure_reason = std::move(reason);
        return cert;
    };
    if (!g.loops.empty()) {
        return fail("loop present at x" + std::to_string(g.loops.begin()->first));
    }
    const std::size_t r = g.vertices.size();
    if (r == 0) {
        return fail("no free variables");
    }
    if (g.edges.size() != r - 1) {
        return fail("not a Hamiltonian path: " + std::to_string(g.edges.size()) + " edges on " +
                    std::to_string(r) + " vertices");
    }
    std::map<int, std::vector<int>> adj;
    for (int v : g.vertices) {
        adj[v];
    }
    for (const auto& [e, w] : g.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::vector<int> ends;
    for (const auto& [v, nbrs] : adj) {
        if (nbrs.size() > 2) {
            return fail("not a Hamiltonian path: x" + std::to_string(v) + " has degree " +
                        std::to_string(nbrs.size()));
        }
        if (nbrs.size() <= 1) {
            ends.push_back(v);
        }
    }
    std::vector<int> order;
    if (r == 1) {
        order.push_back(g.vertices.front());
    } else {
        if (ends.size() != 2) {
            return fail("not a Hamiltonian path: graph is disconnected");
        }
        int prev = -1;
        int cur = std::min(ends[0], ends[1]);
        while (true) {
            order.push_back(cur);
            int next = -1;
            for (int nb : adj[cur]) {
                if (nb != prev) {
                    next = nb;
                }
            }
            if (next < 0 || order.size() > r) {
                break;
            }
            prev = cur;
            cur = next;
        }
        if (order.size() != r) {
            return fail("not a Hamiltonian path: graph is disconnected");
        }
    }
    for (const auto& [e, w] : g.edges) {
        if (w != required_weight) {
            return fail("edge {x" + std::to_string(e.first) + ",x" + std::to_string(e.second) + "} has weight " +
                        std::to_string(w) + ", expected lambda/p = " + std::to_string(required_weight));
        }
    }
    cert.valid = true;
    cert.free_vars = std::move(order);
    return cert;
}

namespace {

PathCertificate certify(const Polynomial& f, std::span<const int> J, bool allow_shortcut) {
    const auto& space = f.space();
    validate_J(space, J);
    const auto free = free_variables(space.m, J);
    const int weight = space.lambda / space.p;

    Restriction r{std::vector<int>(J.begin(), J.end()), std::vector<int>(J.size(), 0)};
    // Substituting constants only touches monomials containing a restricted variable, so
    // the degree-2 part on free variables is the same for every c when deg f <= 2.
    const bool shortcut = allow_shortcut && f.degree() <= 2;

    PathCertificate shared;
    std::int64_t checked = 0;
    do {
        ++checked;
        const Polynomial restricted = restrict(f, r);
        PathCertificate cert;
        if (restricted.degree() > 2) {
            cert.failure_reason = "restriction not quadratic";
        } else {
            cert = check_path(build_graph(restricted.homogeneous_part(2), free), weight);
        }
        if (!cert.valid) {
            cert.restrictions_checked = checked;
            if (!J.empty()) {
                *cert.failure_reason += " (at c=" + join(r.c) + ")";
            }
            return cert;
        }
        if (checked == 1) {
            shared = std::move(cert);
        } else if (cert.free_vars != shared.free_vars) {
            PathCertificate bad;
            bad.edge_weight = weight;
            bad.failure_reason = "path order differs across restrictions (at c=" + join(r.c) + ")";
            bad.restrictions_checked = checked;
            return bad;
        }
    } while (!shortcut && next_digits(r.c, space.p));
    shared.restrictions_checked = checked;
    return shared;
}

} // namespace

PathCertificate certify_hamiltonian_path(const Polynomial& f, std::span<const int> J) {
    return certify(f, J, true);
}

PathCertificate certify_hamiltonian_path_exhaustive(const Polynomial& f, std::span<const int> J) {
    return certify(f, J, false);
}

} // namespace qccs
