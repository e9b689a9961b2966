#include "doctest.h"

#include <stdexcept>

#include "lieverify/conformal.hpp"

using namespace lieverify;

TEST_CASE("invariant form on the three-dimensional quotient, frozen") {
    ConformalModel m = build_model(3);
    CHECK(m.invariance_solution_dim == 1);
    CHECK(m.q_signature.neg == 1);
    CHECK(m.q_signature.pos == 2);
    CHECK(m.q_signature.zero == 0);
    // In the (c, z1, beta) quotient coordinates Q reads 2 c beta + z1^2:
    // antidiagonal 1s in the corners, 1 in the middle.
    REQUIRE(m.Q.rows() == 3);
    QMat expected = qmat(3, 3);
    expected.at(0, 2) = Rational(1);
    expected.at(2, 0) = Rational(1);
    expected.at(1, 1) = Rational(1);
    CHECK(m.Q == expected);
    CHECK(!m.convention.empty());
}

TEST_CASE("the quotient form is Lorentz for every small parameter") {
    for (std::size_t n = 3; n <= 6; ++n) {
        ConformalModel m = build_model(n);
        CHECK(m.n == n);
        CHECK(m.invariance_solution_dim == 1);
        CHECK(m.q_signature.neg == 1);
        CHECK(m.q_signature.pos == n - 1);
        CHECK(m.quotient_basis.size() == n);
        CHECK(m.p.dim() + n == m.g.alg.dim());
    }
    CHECK_THROWS_AS(build_model(2), std::invalid_argument);
}

TEST_CASE("every parabolic generator acts conformally on the quotient") {
    ConformalModel m = build_model(4);
    const LieAlgebra& g = m.g.alg;
    std::size_t nonzero_lambdas = 0;
    for (const auto& row : m.p.basis()) {
        ConformalFactor f = ad_conformal_factor(m, row);
        CHECK(f.conformal);
        if (!rat_is_zero(f.lambda)) ++nonzero_lambdas;
    }
    // Exactly one basis generator rescales the form: the grading element,
    // with factor -2; all other generators are infinitesimal isometries.
    CHECK(nonzero_lambdas == 1);
    std::size_t a_idx = m.g.part("Ea")[0];
    ConformalFactor fa = ad_conformal_factor(m, g.coord_vector(a_idx));
    CHECK(fa.conformal);
    CHECK(fa.lambda == Rational(-2));
    std::size_t b_idx = m.g.part("Eb")[0];
    ConformalFactor fb = ad_conformal_factor(m, g.coord_vector(b_idx));
    CHECK(fb.conformal);
    CHECK(rat_is_zero(fb.lambda));
    CHECK(fb.unipotent_quotient);
}

TEST_CASE("conformal factors are only defined for parabolic elements") {
    ConformalModel m = build_model(3);
    std::vector<Rational> bad = m.g.alg.coord_vector(m.quotient_basis[0]);
    CHECK_THROWS_AS(ad_conformal_factor(m, bad), std::invalid_argument);
}

TEST_CASE("trichotomy of subspaces of the Lorentz quotient") {
    ConformalModel m = build_model(4);
    const std::size_t n = 4;
    auto unit = [&](std::size_t i) {
        std::vector<Rational> v(n, Rational(0));
        v[i] = 1;
        return v;
    };
    // The first coordinate line is the isotropic c-direction.
    CHECK(classify_subspace(m, Subspace::span_of(n, {unit(0)})) ==
          SubspaceClass::degenerate_positive);
    // An interior z-direction is spacelike.
    CHECK(classify_subspace(m, Subspace::span_of(n, {unit(1)})) == SubspaceClass::riemannian);
    // c + beta has Q-value 2: spacelike; c - beta has Q-value -2: timelike line,
    // which under a Lorentz form means the span is nondegenerate with one
    // negative direction.
    std::vector<Rational> plus(n, Rational(0)), minus(n, Rational(0));
    plus[0] = 1;
    plus[n - 1] = 1;
    minus[0] = 1;
    minus[n - 1] = -1;
    CHECK(classify_subspace(m, Subspace::span_of(n, {plus})) == SubspaceClass::riemannian);
    CHECK(classify_subspace(m, Subspace::span_of(n, {minus})) == SubspaceClass::lorentzian);
    // The whole quotient is Lorentz.
    CHECK(classify_subspace(m, Subspace::full(n)) == SubspaceClass::lorentzian);
    // A degenerate plane: c and one z-direction.
    CHECK(classify_subspace(m, Subspace::span_of(n, {unit(0), unit(1)})) ==
          SubspaceClass::degenerate_positive);
}

TEST_CASE("isotropic subspaces cannot exceed one dimension") {
    for (std::size_t n = 3; n <= 5; ++n) {
        ConformalModel m = build_model(n);
        IsotropicScan s = isotropic_dimension_scan(m);
        CHECK(s.ok());
        CHECK(s.signature_bound_is_one);
        CHECK(s.max_coordinate_isotropic_dim == 1);
        CHECK(s.subsets_checked > 0);
    }
}
