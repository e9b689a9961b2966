#include "lieverify/meataxe.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lieverify {

namespace {

std::vector<Rational> mat_apply(const QMat& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!rat_is_zero(m.at(r, c)) && !rat_is_zero(v[c]))
                out[r] += m.at(r, c) * v[c];
    return out;
}

std::vector<Rational> flatten_mat(const QMat& m) {
    std::vector<Rational> out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
    return out;
}

QMat unflatten(const std::vector<Rational>& v, std::size_t d) {
    QMat m = qmat(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m.at(r, c) = v[r * d + c];
    return m;
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!rat_is_zero(x)) return false;
    return true;
}

bool is_invariant(const std::vector<QMat>& action, const Subspace& w) {
    for (const auto& u : w.basis())
        for (const QMat& M : action)
            if (!w.contains(mat_apply(M, u))) return false;
    return true;
}

std::vector<QMat> transposed(const std::vector<QMat>& action) {
    std::vector<QMat> out;
    out.reserve(action.size());
    for (const QMat& M : action) out.push_back(M.transpose());
    return out;
}

// Annihilator {v : <u, v> = 0 for all u in w}, an invariant subspace for the
// original action whenever w is invariant for the transposed one.
Subspace perp(const Subspace& w, std::size_t dim) {
    if (w.dim() == 0) return Subspace::full(dim);
    return Subspace::span_cols(kernel(w.basis_rows()));
}

}  // namespace

Subspace spin(const std::vector<QMat>& action, const std::vector<Rational>& v) {
    const std::size_t d = v.size();
    Subspace s(d);
    if (all_zero(v)) return s;
    std::vector<std::vector<Rational>> work;
    s.add(v);
    work.push_back(v);
    while (!work.empty()) {
        const std::vector<Rational> u = std::move(work.back());
        work.pop_back();
        for (const QMat& M : action) {
            std::vector<Rational> w = mat_apply(M, u);
            if (s.add(w)) work.push_back(std::move(w));
        }
    }
    return s;
}

std::vector<QMat> commutant_basis(const std::vector<QMat>& action,
                                  std::size_t dim) {
    const std::size_t d = dim;
    const std::size_t unknowns = d * d;
    QMat sys = qmat(action.size() * unknowns, unknowns);
    std::size_t row = 0;
    for (const QMat& M : action) {
        // (MC - CM)_{ij} = sum_a M_{ia} C_{aj} - sum_b C_{ib} M_{bj} = 0.
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j, ++row) {
                for (std::size_t a = 0; a < d; ++a)
                    if (!rat_is_zero(M.at(i, a))) sys.at(row, a * d + j) += M.at(i, a);
                for (std::size_t b = 0; b < d; ++b)
                    if (!rat_is_zero(M.at(b, j))) sys.at(row, i * d + b) -= M.at(b, j);
            }
    }
    const QMat ker = kernel(sys);
    std::vector<QMat> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        std::vector<Rational> v(unknowns, Rational(0));
        for (std::size_t r = 0; r < unknowns; ++r) v[r] = ker.at(r, c);
        out.push_back(unflatten(v, d));
    }
    return out;
}

Subspace matrix_envelope(const std::vector<QMat>& action, std::size_t dim) {
    const std::size_t d = dim;
    Subspace s(d * d);
    std::vector<QMat> work;
    const QMat id = qident(d);
    if (s.add(flatten_mat(id))) work.push_back(id);
    for (const QMat& M : action)
        if (s.add(flatten_mat(M))) work.push_back(M);
    while (!work.empty()) {
        const QMat w = std::move(work.back());
        work.pop_back();
        for (const QMat& M : action) {
            QMat p = w * M;
            if (s.add(flatten_mat(p))) work.push_back(std::move(p));
        }
    }
    return s;
}

std::optional<bool> monic_poly_irreducible(const std::vector<Rational>& c,
                                           std::size_t budget) {
    const std::size_t deg = c.size();
    if (deg == 0 || deg > 3) return std::nullopt;
    if (deg == 1) return true;
    // A monic polynomial of degree 2 or 3 factors over the rationals iff it
    // has a rational root.  Clear denominators and enumerate candidates
    // p/q with p | a_0 and q | a_n by trial division.
    Integer lcm_den(1);
    for (const auto& x : c) {
        Rational r = x;
        r.canonicalize();
        lcm_den = lcm(lcm_den, r.get_den());
    }
    std::vector<Integer> a(deg + 1);  // a[t] = coefficient of x^t, integer
    a[deg] = lcm_den;
    for (std::size_t t = 0; t < deg; ++t) {
        Rational r = c[t] * Rational(lcm_den);
        r.canonicalize();
        a[t] = r.get_num();
    }
    if (a[0] == 0) return false;  // root at 0

    auto divisors = [&](Integer n) -> std::optional<std::vector<Integer>> {
        if (n < 0) n = -n;
        std::vector<Integer> out;
        Integer i(1);
        std::size_t steps = 0;
        while (i * i <= n) {
            if (++steps > budget) return std::nullopt;
            if (n % i == 0) {
                out.push_back(i);
                out.push_back(n / i);
            }
            ++i;
        }
        return out;
    };
    auto ps = divisors(a[0]);
    auto qs = divisors(a[deg]);
    if (!ps || !qs) return std::nullopt;
    for (const Integer& p : *ps)
        for (const Integer& q : *qs)
            for (int sign : {1, -1}) {
                const Rational root = Rational(sign * p) / Rational(q);
                Rational value(0);
                Rational power(1);
                for (std::size_t t = 0; t <= deg; ++t) {
                    value += Rational(a[t]) * power;
                    power *= root;
                }
                if (rat_is_zero(value)) return false;
            }
    return true;
}

ModuleAnalysis analyze_module(const std::vector<QMat>& action, std::size_t dim,
                              Rng& rng, std::size_t max_attempts) {
    if (dim == 0) throw std::invalid_argument("empty module");
    for (const QMat& M : action)
        if (M.rows() != dim || M.cols() != dim)
            throw std::invalid_argument("action matrix size mismatch");

    ModuleAnalysis out;
    out.dim = dim;
    out.commutant_dim = commutant_basis(action, dim).size();
    const Subspace env = matrix_envelope(action, dim);
    out.envelope_dim = env.dim();

    auto reducible_with = [&](Subspace w) {
        if (!is_invariant(action, w))
            throw std::logic_error("reducibility witness is not invariant");
        out.status = ModuleAnalysis::Status::reducible;
        out.certificate = "proper invariant subspace";
        out.invariant_witness = std::move(w);
        return out;
    };

    if (dim == 1) {
        out.status = ModuleAnalysis::Status::irreducible;
        out.certificate = "one-dimensional module";
        return out;
    }

    // Reducibility scan: spins of basis vectors, then of random vectors.
    for (std::size_t t = 0; t < dim; ++t) {
        std::vector<Rational> e(dim, Rational(0));
        e[t] = 1;
        Subspace s = spin(action, e);
        if (s.dim() < dim) return reducible_with(std::move(s));
    }
    for (std::size_t att = 0; att < max_attempts; ++att) {
        ++out.attempts;
        std::vector<Rational> v(dim, Rational(0));
        for (auto& x : v) x = Rational(rng.range(-3, 3));
        if (all_zero(v)) continue;
        Subspace s = spin(action, v);
        if (s.dim() < dim) return reducible_with(std::move(s));
    }

    if (out.envelope_dim == dim * dim) {
        out.status = ModuleAnalysis::Status::irreducible;
        out.absolutely_irreducible = true;
        out.certificate = "envelope is the full matrix algebra";
        return out;
    }

    // Nullity-one criterion over a bounded deterministic candidate list:
    // the action matrices, their pairwise sums and products, and random
    // small combinations.
    std::vector<QMat> candidates;
    for (const QMat& M : action) candidates.push_back(M);
    for (std::size_t i = 0; i < action.size(); ++i)
        for (std::size_t j = i + 1; j < action.size(); ++j) {
            candidates.push_back(action[i] + action[j]);
            candidates.push_back(action[i] * action[j]);
        }
    for (std::size_t att = 0; att < max_attempts; ++att) {
        QMat M = qmat(dim, dim);
        for (const QMat& g : action) {
            const Rational c(rng.range(-2, 2));
            if (!rat_is_zero(c)) M = M + g.scale(c);
        }
        candidates.push_back(std::move(M));
    }
    const std::vector<QMat> action_t = transposed(action);
    for (const QMat& theta : candidates) {
        ++out.attempts;
        const QMat ker = kernel(theta);
        const std::size_t nullity = ker.cols();
        if (nullity == 0 || nullity == dim) continue;
        for (std::size_t c = 0; c < nullity; ++c) {
            std::vector<Rational> v(dim, Rational(0));
            for (std::size_t r = 0; r < dim; ++r) v[r] = ker.at(r, c);
            Subspace s = spin(action, v);
            if (s.dim() < dim) return reducible_with(std::move(s));
        }
        if (nullity != 1) continue;
        const QMat ker_t = kernel(theta.transpose());
        if (ker_t.cols() != 1)
            throw std::logic_error("transpose nullity mismatch");
        std::vector<Rational> w(dim, Rational(0));
        for (std::size_t r = 0; r < dim; ++r) w[r] = ker_t.at(r, 0);
        Subspace st = spin(action_t, w);
        if (st.dim() < dim) return reducible_with(perp(st, dim));
        out.status = ModuleAnalysis::Status::irreducible;
        out.certificate = "nullity-one kernel vector spins the whole space on both sides";
        return out;
    }

    // Field-envelope certificate: a commutative envelope that is a field of
    // degree equal to the module dimension, acting with a cyclic vector,
    // makes the module its own regular representation.
    std::vector<QMat> env_basis;
    for (const auto& row : env.basis()) env_basis.push_back(unflatten(row, dim));
    bool commutative = true;
    for (std::size_t i = 0; i < env_basis.size() && commutative; ++i)
        for (std::size_t j = i + 1; j < env_basis.size() && commutative; ++j)
            if (!(env_basis[i] * env_basis[j] == env_basis[j] * env_basis[i]))
                commutative = false;
    if (commutative && out.envelope_dim == dim) {
        std::vector<QMat> gens = action;
        for (std::size_t att = 0; att < max_attempts; ++att) {
            QMat M = qmat(dim, dim);
            for (const QMat& b : env_basis) {
                const Rational c(rng.range(-2, 2));
                if (!rat_is_zero(c)) M = M + b.scale(c);
            }
            gens.push_back(std::move(M));
        }
        for (const QMat& g : gens) {
            ++out.attempts;
            // Power span of g: does it reach the whole envelope?
            RowSpan powers(dim * dim);
            std::vector<QMat> pw;
            QMat p = qident(dim);
            while (powers.add(flatten_mat(p))) {
                pw.push_back(p);
                p = p * g;
            }
            if (powers.dim() != out.envelope_dim) continue;
            // First linear dependency: p == sum c_t g^t gives the monic
            // minimal polynomial x^m - sum c_t x^t.
            QMat cols = qmat(dim * dim, pw.size());
            const auto target = flatten_mat(p);
            for (std::size_t t = 0; t < pw.size(); ++t) {
                const auto f = flatten_mat(pw[t]);
                for (std::size_t r = 0; r < f.size(); ++r) cols.at(r, t) = f[r];
            }
            QMat rhs = qmat(dim * dim, 1);
            for (std::size_t r = 0; r < target.size(); ++r) rhs.at(r, 0) = target[r];
            const auto sol = solve(cols, rhs);
            if (!sol) throw std::logic_error("power dependency must be solvable");
            std::vector<Rational> minpoly(pw.size());
            for (std::size_t t = 0; t < pw.size(); ++t) minpoly[t] = -sol->at(t, 0);
            const auto irred = monic_poly_irreducible(minpoly);
            if (irred && *irred && pw.size() == dim) {
                out.status = ModuleAnalysis::Status::irreducible;
                out.certificate =
                    "field envelope of degree equal to the module dimension";
                return out;
            }
            if (irred && !*irred) {
                // Reducible minimal polynomial of a generator of the whole
                // commutative envelope: a proper factor evaluates to a
                // singular nonzero element; fall through to inconclusive
                // rather than certify.
                break;
            }
        }
    }

    out.status = ModuleAnalysis::Status::inconclusive;
    out.certificate = "bounded search exhausted";
    return out;
}

}  // namespace lieverify
