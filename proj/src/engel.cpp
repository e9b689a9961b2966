#include "lieverify/engel.hpp"

#include <stdexcept>
#include <string>

#include "lieverify/families.hpp"
#include "lieverify/subspace.hpp"

namespace lieverify {

namespace {

bool mat_is_zero(const QMat& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) return false;
    return true;
}

// First power at which M vanishes, or 0 if M^(rows+1) is still nonzero.
std::size_t nilpotency_witness(const QMat& M) {
    if (mat_is_zero(M)) return 1;
    QMat P = M;
    for (std::size_t p = 2; p <= M.rows() + 1; ++p) {
        P = P * M;
        if (mat_is_zero(P)) return p;
    }
    return 0;
}

QMat commutator(const QMat& a, const QMat& b) { return a * b - b * a; }

std::vector<Rational> mat_apply(const QMat& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0 && v[c] != 0) out[r] += m.at(r, c) * v[c];
    return out;
}

bool vec_is_zero(const std::vector<Rational>& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

// X restricted to the column span of S, as a dim(S)-square matrix; nullopt
// when the span is not invariant.
std::optional<QMat> restrict_to(const QMat& X, const QMat& S) {
    return solve(S, X * S);
}

// Common kernel of a list of d x d matrices, as a d x e column matrix.
QMat common_kernel(const std::vector<QMat>& mats, std::size_t d) {
    std::size_t nonzero = 0;
    for (const auto& m : mats)
        if (!mat_is_zero(m)) ++nonzero;
    QMat stacked = qmat(std::max<std::size_t>(1, nonzero * d), d);
    std::size_t row = 0;
    for (const auto& m : mats) {
        if (mat_is_zero(m)) continue;
        for (std::size_t r = 0; r < d; ++r, ++row)
            for (std::size_t c = 0; c < d; ++c) stacked.at(row, c) = m.at(r, c);
    }
    return kernel(stacked);
}

// First rational null vector of the Gram matrix G: a coordinate direction,
// or a rational combination e_i + t e_j when the discriminant is a perfect
// square.
std::optional<std::vector<Rational>> rational_null_vector(const QMat& G) {
    const std::size_t d = G.rows();
    for (std::size_t i = 0; i < d; ++i)
        if (G.at(i, i) == 0) {
            std::vector<Rational> v(d, Rational(0));
            v[i] = 1;
            return v;
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            // q(e_i + t e_j) = G_ii + 2 t G_ij + t^2 G_jj = 0
            Rational disc = G.at(i, j) * G.at(i, j) - G.at(i, i) * G.at(j, j);
            if (disc < 0) continue;
            mpz_class num = disc.get_num(), den = disc.get_den();
            if (!mpz_perfect_square_p(num.get_mpz_t()) ||
                !mpz_perfect_square_p(den.get_mpz_t()))
                continue;
            mpz_class sn, sd;
            mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
            Rational root = Rational(sn) / Rational(sd);
            Rational t = (-G.at(i, j) + root) / G.at(j, j);
            std::vector<Rational> v(d, Rational(0));
            v[i] = 1;
            v[j] = t;
            return v;
        }
    return std::nullopt;
}

}  // namespace

NilpotentAlgebra nilpotent_algebra(std::vector<QMat> generators, std::optional<QMat> form) {
    NilpotentAlgebra alg;
    if (generators.empty() && !form) throw std::invalid_argument("nilpotent_algebra: empty data");
    alg.ambient = generators.empty() ? form->rows() : generators[0].rows();
    alg.form = std::move(form);

    RowSpan span(alg.ambient * alg.ambient);
    std::vector<QMat> basis;
    std::vector<QMat> queue = std::move(generators);
    while (!queue.empty()) {
        QMat m = std::move(queue.back());
        queue.pop_back();
        if (m.rows() != alg.ambient || m.cols() != alg.ambient)
            throw std::invalid_argument("nilpotent_algebra: generator size mismatch");
        if (!span.add(flatten(m))) continue;
        for (const auto& b : basis) queue.push_back(commutator(b, m));
        basis.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (nilpotency_witness(basis[i]) == 0)
            throw std::invalid_argument(
                "nilpotent_algebra: basis element " + std::to_string(i) +
                " is not nilpotent (power " + std::to_string(alg.ambient + 1) + " is nonzero)");
    alg.basis = std::move(basis);
    return alg;
}

EngelResult common_annihilated_vector(const NilpotentAlgebra& alg) {
    if (alg.ambient == 0) throw std::invalid_argument("common_annihilated_vector: empty space");

    EngelResult res;
    QMat S = qident(alg.ambient);  // columns: current frame in original coordinates
    std::vector<QMat> cur = alg.basis;

    while (true) {
        bool all_zero = true;
        for (const auto& m : cur)
            if (!mat_is_zero(m)) all_zero = false;
        if (all_zero) {
            std::vector<Rational> v(alg.ambient);
            for (std::size_t r = 0; r < alg.ambient; ++r) v[r] = S.at(r, 0);
            for (const auto& X : alg.basis)
                if (!vec_is_zero(mat_apply(X, v)))
                    throw std::logic_error("common_annihilated_vector: lifted vector escapes");
            res.vector = std::move(v);
            return res;
        }

        const std::size_t d = S.cols();
        // Independent elements of the current algebra.
        std::vector<QMat> L;
        RowSpan span(d * d);
        for (const auto& m : cur)
            if (span.add(flatten(m))) L.push_back(m);

        // Center: coefficient vectors c with sum_i c_i [L_i, L_j] = 0 for
        // all j.  The first kernel column gives the deterministic choice.
        QMat sys = qmat(L.size() * d * d, L.size());
        for (std::size_t j = 0; j < L.size(); ++j)
            for (std::size_t i = 0; i < L.size(); ++i) {
                QMat com = commutator(L[i], L[j]);
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t c = 0; c < d; ++c)
                        sys.at(j * d * d + r * d + c, i) = com.at(r, c);
            }
        QMat cents = kernel(sys);
        if (cents.cols() == 0)
            throw std::logic_error("common_annihilated_vector: centerless nilpotent algebra");
        QMat Z = qmat(d, d);
        for (std::size_t i = 0; i < L.size(); ++i) {
            const Rational& ci = cents.at(i, 0);
            if (ci == 0) continue;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) Z.at(r, c) += ci * L[i].at(r, c);
        }
        if (mat_is_zero(Z))
            throw std::logic_error("common_annihilated_vector: zero central element");

        QMat E = kernel(Z);
        if (E.cols() == 0 || E.cols() >= d)
            throw std::logic_error("common_annihilated_vector: kernel step did not shrink");
        std::vector<QMat> next;
        for (const auto& m : cur) {
            auto r = restrict_to(m, E);
            if (!r) throw std::logic_error("common_annihilated_vector: kernel not invariant");
            next.push_back(std::move(*r));
        }
        S = S * E;
        cur = std::move(next);
        ++res.steps;
    }
}

IsotropicFixed isotropic_fixed_vector(const NilpotentAlgebra& alg) {
    if (!alg.form) throw std::invalid_argument("isotropic_fixed_vector: no ambient form");
    const QMat& F = *alg.form;

    IsotropicFixed res;
    QMat S = qident(alg.ambient);
    QMat G = F;
    std::vector<QMat> cur = alg.basis;

    auto finish = [&](const std::vector<Rational>& v_cur) {
        std::vector<Rational> v(alg.ambient, Rational(0));
        for (std::size_t r = 0; r < alg.ambient; ++r)
            for (std::size_t c = 0; c < S.cols(); ++c) v[r] += S.at(r, c) * v_cur[c];
        if (vec_is_zero(v)) throw std::logic_error("isotropic_fixed_vector: zero lift");
        Rational q(0);
        std::vector<Rational> Fv = mat_apply(F, v);
        for (std::size_t r = 0; r < alg.ambient; ++r) q += v[r] * Fv[r];
        if (q != 0) throw std::logic_error("isotropic_fixed_vector: lift is not isotropic");
        for (const auto& X : alg.basis)
            if (!vec_is_zero(mat_apply(X, v)))
                throw std::logic_error("isotropic_fixed_vector: lift is not annihilated");
        res.vector = std::move(v);
    };

    while (true) {
        bool all_zero = true;
        for (const auto& m : cur)
            if (!mat_is_zero(m)) all_zero = false;
        if (all_zero) {
            auto v = rational_null_vector(G);
            if (!v)
                throw std::logic_error(
                    "isotropic_fixed_vector: no rational null vector in the remaining space "
                    "(would falsify the statement for honest inputs)");
            res.zero_algebra_convention = res.steps == 0;
            finish(*v);
            return res;
        }

        const std::size_t d = S.cols();
        QMat E = common_kernel(cur, d);
        if (E.cols() == 0)
            throw std::logic_error("isotropic_fixed_vector: nilpotent algebra with zero kernel");

        // E-perp with respect to the current form: kernel of E^T G.
        QMat Eperp = kernel(E.transpose() * G);
        Subspace rad = Subspace::span_cols(E).intersect(Subspace::span_cols(Eperp));
        if (rad.dim() > 0) {
            finish(rad.basis()[0]);
            return res;
        }

        if (Eperp.cols() >= d)
            throw std::logic_error("isotropic_fixed_vector: orthogonal step did not shrink");
        std::vector<QMat> next;
        for (const auto& m : cur) {
            auto r = restrict_to(m, Eperp);
            if (!r)
                throw std::logic_error("isotropic_fixed_vector: complement not invariant");
            next.push_back(std::move(*r));
        }
        S = S * Eperp;
        G = Eperp.transpose() * G * Eperp;
        cur = std::move(next);
        ++res.steps;
    }
}

ConjugationResult conjugate_into_umax(std::size_t n, const std::vector<QMat>& generators) {
    if (n < 3) throw std::invalid_argument("conjugate_into_umax: n must be at least 3");
    AlgebraModel model = make_o2n(n);
    const std::size_t N = n + 2;

    if (!model.ambient_form) throw std::logic_error("conjugate_into_umax: missing ambient form");
    QMat F = qmat(N, N);
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) F.at(r, c) = model.ambient_form->at(r, c).real();

    // Flattened spans of the parabolic and of u_max, from the realizations.
    RowSpan pspan(N * N);
    const auto& mats = model.alg.realization();
    if (!mats) throw std::logic_error("conjugate_into_umax: missing realization");
    for (std::size_t i : model.part("p")) {
        QMat m = qmat(N, N);
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) m.at(r, c) = (*mats)[i].at(r, c).real();
        pspan.add(flatten(m));
    }
    LieAlgebra umax = make_umax(n);
    RowSpan uspan(N * N);
    const auto& umats = umax.realization();
    if (!umats) throw std::logic_error("conjugate_into_umax: missing u_max realization");
    for (const auto& sm : *umats) {
        QMat m = qmat(N, N);
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) m.at(r, c) = sm.at(r, c).real();
        uspan.add(flatten(m));
    }

    for (std::size_t i = 0; i < generators.size(); ++i) {
        const QMat& X = generators[i];
        if (X.rows() != N || X.cols() != N)
            throw std::invalid_argument("conjugate_into_umax: generator size mismatch");
        if (!mat_is_zero(X.transpose() * F + F * X))
            throw std::invalid_argument("conjugate_into_umax: generator is not skew for the form");
        if (!pspan.contains(flatten(X)))
            throw std::invalid_argument("conjugate_into_umax: generator is not in the parabolic");
        if (nilpotency_witness(X) == 0)
            throw std::invalid_argument("conjugate_into_umax: generator " + std::to_string(i) +
                                        " is not nilpotent");
    }

    ConjugationResult out;
    out.conjugator = qident(N);

    bool already = true;
    for (const auto& X : generators)
        if (!uspan.contains(flatten(X))) already = false;
    if (already) {
        out.identity = true;
        out.image_in_umax = true;
        return out;
    }

    // Middle Lorentz block (rows/cols 1..n) and the projected algebra.
    QMat Fmid = qmat(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) Fmid.at(r, c) = F.at(1 + r, 1 + c);
    std::vector<QMat> mids;
    for (const auto& X : generators) {
        QMat m = qmat(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m.at(r, c) = X.at(1 + r, 1 + c);
        mids.push_back(std::move(m));
    }
    NilpotentAlgebra proj = nilpotent_algebra(std::move(mids), Fmid);
    IsotropicFixed fixed = isotropic_fixed_vector(proj);
    const std::vector<Rational>& v = fixed.vector;

    // Isometry g of the middle block moving v onto the standard null
    // direction e_0: clear the definite components with a unipotent map,
    // then swap the two null directions if needed.
    QMat g = qident(n);
    const Rational b = v[n - 1];
    bool w_zero = true;
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (v[i] != 0) w_zero = false;
    if (!w_zero || b != 0) {
        if (b == 0) throw std::logic_error("conjugate_into_umax: null vector with b = 0, w != 0");
        std::vector<Rational> x(n - 2);
        Rational x2(0);
        for (std::size_t i = 0; i + 2 < n; ++i) {
            x[i] = v[1 + i] / b;
            x2 += x[i] * x[i];
        }
        QMat U = qident(n);
        for (std::size_t i = 0; i + 2 < n; ++i) {
            U.at(0, 1 + i) = x[i];
            U.at(1 + i, n - 1) = -x[i];
        }
        U.at(0, n - 1) = -x2 / 2;
        QMat swap = qmat(n, n);
        swap.at(0, n - 1) = 1;
        swap.at(n - 1, 0) = 1;
        for (std::size_t i = 1; i + 1 < n; ++i) swap.at(i, i) = 1;
        g = swap * U;
        if (!mat_is_zero(g.transpose() * Fmid * g - Fmid))
            throw std::logic_error("conjugate_into_umax: block map is not an isometry");
        std::vector<Rational> gv = mat_apply(g, v);
        for (std::size_t i = 1; i < n; ++i)
            if (gv[i] != 0)
                throw std::logic_error("conjugate_into_umax: block map missed the null direction");
    }

    QMat C = qident(N);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) C.at(1 + r, 1 + c) = g.at(r, c);
    if (!mat_is_zero(C.transpose() * F * C - F))
        throw std::logic_error("conjugate_into_umax: conjugator is not an isometry");
    auto Cinv = inverse(C);
    if (!Cinv) throw std::logic_error("conjugate_into_umax: singular conjugator");

    out.conjugator = C;
    out.image_in_umax = true;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        QMat img = C * generators[i] * (*Cinv);
        if (!uspan.contains(flatten(img))) {
            out.image_in_umax = false;
            out.offending_generator = i;
            break;
        }
    }
    return out;
}

}  // namespace lieverify
