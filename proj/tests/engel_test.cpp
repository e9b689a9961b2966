#include "doctest.h"

#include <stdexcept>

#include "lieverify/engel.hpp"
#include "lieverify/families.hpp"

using namespace lieverify;

namespace {

std::vector<Rational> mat_apply(const QMat& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
    return out;
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!rat_is_zero(x)) return false;
    return true;
}

QMat jordan_block(std::size_t n) {
    QMat j = qmat(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) j.at(i, i + 1) = Rational(1);
    return j;
}

}  // namespace

TEST_CASE("a single Jordan block annihilates exactly the leading direction") {
    NilpotentAlgebra alg = nilpotent_algebra({jordan_block(3)});
    CHECK(alg.basis.size() == 1);
    EngelResult r = common_annihilated_vector(alg);
    CHECK(!all_zero(r.vector));
    CHECK(all_zero(mat_apply(alg.basis[0], r.vector)));
    // ker J = Q e1.
    CHECK(!rat_is_zero(r.vector[0]));
    CHECK(rat_is_zero(r.vector[1]));
    CHECK(rat_is_zero(r.vector[2]));
}

TEST_CASE("strictly upper-triangular generators close up and share a kernel vector") {
    QMat a = qmat(4, 4), b = qmat(4, 4);
    a.at(0, 1) = Rational(1);
    a.at(2, 3) = Rational(1);
    b.at(1, 2) = Rational(1);
    NilpotentAlgebra alg = nilpotent_algebra({a, b});
    // [a, b] and [[a, b], ...] grow the span beyond the two generators.
    CHECK(alg.basis.size() > 2);
    EngelResult r = common_annihilated_vector(alg);
    CHECK(!all_zero(r.vector));
    for (const QMat& x : alg.basis) CHECK(all_zero(mat_apply(x, r.vector)));
}

TEST_CASE("non-nilpotent input is rejected") {
    QMat d = qmat(2, 2);
    d.at(0, 0) = Rational(1);
    d.at(1, 1) = Rational(-1);
    CHECK_THROWS_AS(nilpotent_algebra({d}), std::invalid_argument);
}

TEST_CASE("isotropic annihilated vector for a skew nilpotent pair") {
    // Lorentz form 2 x1 x3 + x2^2 on Q^3; the matrix E sends e3 -> e2 -> -e1
    // and is skew for it (a null rotation fixing the null direction e1).
    QMat F = qmat(3, 3);
    F.at(0, 2) = Rational(1);
    F.at(2, 0) = Rational(1);
    F.at(1, 1) = Rational(1);
    QMat E = qmat(3, 3);
    E.at(1, 2) = Rational(1);
    E.at(0, 1) = Rational(-1);
    REQUIRE((E.transpose() * F + F * E).is_zero());
    NilpotentAlgebra alg = nilpotent_algebra({E}, F);
    IsotropicFixed r = isotropic_fixed_vector(alg);
    CHECK(!all_zero(r.vector));
    CHECK(!r.zero_algebra_convention);
    CHECK(all_zero(mat_apply(E, r.vector)));
    // q(v) = 0 exactly.
    auto fv = mat_apply(F, r.vector);
    Rational q(0);
    for (std::size_t i = 0; i < 3; ++i) q += r.vector[i] * fv[i];
    CHECK(rat_is_zero(q));
}

TEST_CASE("zero algebra falls back to a declared null-direction convention") {
    // Minkowski plane: q = diag(1, -1) has null vector e1 + e2.
    QMat F = qmat(2, 2);
    F.at(0, 0) = Rational(1);
    F.at(1, 1) = Rational(-1);
    NilpotentAlgebra alg = nilpotent_algebra({}, F);
    IsotropicFixed r = isotropic_fixed_vector(alg);
    CHECK(r.zero_algebra_convention);
    CHECK(!all_zero(r.vector));
    auto fv = mat_apply(F, r.vector);
    Rational q(0);
    for (std::size_t i = 0; i < 2; ++i) q += r.vector[i] * fv[i];
    CHECK(rat_is_zero(q));
}

TEST_CASE("generators already inside u_max need no conjugation") {
    const std::size_t n = 4;
    LieAlgebra u = make_umax(n);
    std::vector<QMat> gens;
    for (const SMat& s : *u.realization()) {
        QMat q = qmat(s.rows(), s.cols());
        for (std::size_t r = 0; r < s.rows(); ++r)
            for (std::size_t c = 0; c < s.cols(); ++c) q.at(r, c) = s.at(r, c).real();
        gens.push_back(q);
    }
    ConjugationResult res = conjugate_into_umax(n, gens);
    CHECK(res.identity);
    CHECK(res.image_in_umax);
    CHECK(res.conjugator == qident(n + 2));
}
