#include "lieverify/conformal.hpp"

#include <numeric>
#include <stdexcept>

namespace lieverify {

namespace {

// Position of the symmetric-matrix unknown q_{ab} (a <= b) in the flattened
// unknown vector.
std::size_t sym_index(std::size_t a, std::size_t b, std::size_t n) {
    if (a > b) std::swap(a, b);
    return a * n - a * (a - 1) / 2 + (b - a);
}

QMat sym_from_vector(const std::vector<Rational>& q, std::size_t n) {
    QMat Q = qmat(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) Q.at(a, b) = q[sym_index(a, b, n)];
    return Q;
}

bool is_nilpotent(const QMat& M) {
    QMat P = M;
    for (std::size_t i = 1; i < M.rows(); ++i) P = P * M;
    for (std::size_t r = 0; r < P.rows(); ++r)
        for (std::size_t c = 0; c < P.cols(); ++c)
            if (P.at(r, c) != 0) return false;
    return true;
}

}  // namespace

QMat quotient_action(const ConformalModel& m, const std::vector<Rational>& X) {
    const std::size_t n = m.quotient_basis.size();
    QMat M = qmat(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> br =
            m.g.alg.bracket(X, m.g.alg.coord_vector(m.quotient_basis[j]));
        for (std::size_t i = 0; i < n; ++i) M.at(i, j) = br[m.quotient_basis[i]];
    }
    return M;
}

ConformalModel build_model(std::size_t n) {
    if (n < 3) throw std::invalid_argument("build_model: n must be at least 3");

    ConformalModel m;
    m.n = n;
    m.g = make_o2n(n);
    m.p = m.g.part_span("p");
    m.quotient_basis = m.g.part("complement");

    if (m.quotient_basis.size() != n || m.p.dim() + n != m.g.alg.dim())
        throw std::logic_error("build_model: parabolic/complement split has wrong dimensions");
    if (!m.g.alg.is_subalgebra(m.p))
        throw std::logic_error("build_model: parabolic part is not a subalgebra");

    // Exact invariance system M^T Q + Q M = 0 over all basis elements of
    // [p,p], in the symmetric unknowns q_{ab}.
    Subspace dp = m.g.alg.bracket_span(m.p, m.p);
    const std::size_t unknowns = n * (n + 1) / 2;
    std::vector<std::vector<Rational>> rows;
    for (const auto& X : dp.basis()) {
        QMat M = quotient_action(m, X);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u; v < n; ++v) {
                std::vector<Rational> row(unknowns, Rational(0));
                for (std::size_t w = 0; w < n; ++w) {
                    row[sym_index(w, v, n)] += M.at(w, u);
                    row[sym_index(u, w, n)] += M.at(w, v);
                }
                rows.push_back(std::move(row));
            }
    }
    QMat A = qmat(rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < unknowns; ++c) A.at(r, c) = rows[r][c];
    QMat K = kernel(A);
    m.invariance_solution_dim = K.cols();
    if (m.invariance_solution_dim != 1)
        throw std::logic_error("build_model: invariant-form solution space is not a line");

    std::vector<Rational> q(unknowns);
    for (std::size_t i = 0; i < unknowns; ++i) q[i] = K.at(i, 0);

    // Primitive integer normalization with positive trace, then the Lorentz
    // sign check.
    Rational lcm_den(1), gcd_num(0);
    for (const auto& c : q) {
        if (c == 0) continue;
        mpz_class den = c.get_den();
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm_den.get_num().get_mpz_t(), den.get_mpz_t());
        lcm_den = Rational(l);
    }
    for (auto& c : q) c *= lcm_den;
    for (const auto& c : q) {
        if (c == 0) continue;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), gcd_num.get_num().get_mpz_t(), c.get_num().get_mpz_t());
        gcd_num = Rational(g);
    }
    if (gcd_num != 0)
        for (auto& c : q) c /= gcd_num;
    QMat Q = sym_from_vector(q, n);
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += Q.at(i, i);
    if (tr < 0)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) Q.at(a, b) = -Q.at(a, b);

    m.q_signature = signature(Q);
    if (m.q_signature.neg == n - 1 && m.q_signature.pos == 1) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) Q.at(a, b) = -Q.at(a, b);
        m.q_signature = signature(Q);
    }
    if (!(m.q_signature.neg == 1 && m.q_signature.pos == n - 1 && m.q_signature.zero == 0))
        throw std::logic_error("build_model: invariant form is not Lorentz");
    m.Q = Q;
    m.convention =
        "Lorentz signature recorded as (1 negative, n-1 positive); conformal factors are "
        "reported for the basis representatives as constructed, so only |lambda| is "
        "orientation-free";
    return m;
}

ConformalFactor ad_conformal_factor(const ConformalModel& m, const std::vector<Rational>& p_elem) {
    if (!m.p.contains(p_elem))
        throw std::invalid_argument("ad_conformal_factor: element is not in the parabolic");

    const std::size_t n = m.quotient_basis.size();
    QMat M = quotient_action(m, p_elem);
    QMat S = M.transpose() * m.Q + m.Q * M;

    ConformalFactor out;
    out.lambda = Rational(0);
    bool found = false;
    for (std::size_t a = 0; a < n && !found; ++a)
        for (std::size_t b = 0; b < n && !found; ++b)
            if (m.Q.at(a, b) != 0) {
                out.lambda = S.at(a, b) / m.Q.at(a, b);
                found = true;
            }
    out.conformal = true;
    for (std::size_t a = 0; a < n && out.conformal; ++a)
        for (std::size_t b = 0; b < n && out.conformal; ++b)
            if (S.at(a, b) != out.lambda * m.Q.at(a, b)) out.conformal = false;
    out.unipotent_quotient = is_nilpotent(M);
    return out;
}

SubspaceClass classify_subspace(const ConformalModel& m, const Subspace& W) {
    if (W.dim() == 0) throw std::invalid_argument("classify_subspace: subspace is zero");
    if (W.ambient() != m.quotient_basis.size())
        throw std::invalid_argument("classify_subspace: wrong ambient dimension");

    const auto& basis = W.basis();
    QMat G = qmat(W.dim(), W.dim());
    for (std::size_t i = 0; i < W.dim(); ++i)
        for (std::size_t j = 0; j < W.dim(); ++j) {
            Rational s(0);
            for (std::size_t a = 0; a < W.ambient(); ++a)
                for (std::size_t b = 0; b < W.ambient(); ++b)
                    s += basis[i][a] * m.Q.at(a, b) * basis[j][b];
            G.at(i, j) = s;
        }
    Signature sig = signature(G);
    if (sig.neg == 0 && sig.zero == 0) return SubspaceClass::riemannian;
    if (sig.neg == 1 && sig.zero == 0) return SubspaceClass::lorentzian;
    if (sig.neg == 0 && sig.zero == 1) return SubspaceClass::degenerate_positive;
    throw std::logic_error("classify_subspace: signature outside the sub-Lorentzian trichotomy");
}

IsotropicScan isotropic_dimension_scan(const ConformalModel& m) {
    IsotropicScan scan;
    const std::size_t n = m.quotient_basis.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        ++scan.subsets_checked;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) idx.push_back(i);
        bool isotropic = true;
        for (std::size_t a : idx)
            for (std::size_t b : idx)
                if (m.Q.at(a, b) != 0) isotropic = false;
        if (isotropic && idx.size() > scan.max_coordinate_isotropic_dim)
            scan.max_coordinate_isotropic_dim = idx.size();
    }
    scan.signature_bound_is_one =
        (m.q_signature.neg == 1 && m.q_signature.pos >= 1 && m.q_signature.zero == 0);
    return scan;
}

}  // namespace lieverify
