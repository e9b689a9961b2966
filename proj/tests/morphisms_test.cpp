#include "doctest.h"

#include <stdexcept>

#include "lieverify/families.hpp"
#include "lieverify/lie_algebra.hpp"

using namespace lieverify;

namespace {

// Automorphism of heisC(3) induced by a 2x2 matrix M on (X1, Y1), with the
// center scaled by det(M): [MX, MY] = det(M) [X, Y].
LinearMap heis3_map(const LieAlgebra& h, long a, long b, long c, long d, const Rational& zscale) {
    QMat m = qmat(3, 3);
    m.at(0, 0) = Rational(a);
    m.at(1, 0) = Rational(c);
    m.at(0, 1) = Rational(b);
    m.at(1, 1) = Rational(d);
    m.at(2, 2) = zscale;
    return LinearMap{&h, &h, m};
}

}  // namespace

TEST_CASE("linear map application is plain matrix action") {
    LieAlgebra h = make_heisC(3);
    LinearMap f = heis3_map(h, 1, 2, 3, 4, Rational(-2));
    auto y = f.apply({Rational(1), Rational(1), Rational(0)});
    CHECK(y[0] == Rational(3));
    CHECK(y[1] == Rational(7));
    CHECK(y[2] == Rational(0));
}

TEST_CASE("determinant-scaled center maps are morphisms, others are not") {
    LieAlgebra h = make_heisC(3);
    // det = 1*4 - 2*3 = -2, so the center must scale by -2.
    CHECK(is_lie_morphism(heis3_map(h, 1, 2, 3, 4, Rational(-2))));
    auto d = morphism_defect(heis3_map(h, 1, 2, 3, 4, Rational(1)));
    REQUIRE(d.has_value());
    CHECK(d->i == 0);
    CHECK(d->j == 1);
    // f[X,Y] - [fX,fY] = (-2 * 1)Z - (-2 * det)Z = (-2 - 4)Z = -6 Z.
    CHECK(d->difference[2] == Rational(-6));
    CHECK(rat_is_zero(d->difference[0]));
    CHECK(rat_is_zero(d->difference[1]));
}

TEST_CASE("the morphism family is closed under composition") {
    LieAlgebra h = make_heisC(3);
    LinearMap f = heis3_map(h, 1, 1, 0, 1, Rational(1));   // det 1
    LinearMap g = heis3_map(h, 2, 0, 0, 1, Rational(2));   // det 2
    REQUIRE(is_lie_morphism(f));
    REQUIRE(is_lie_morphism(g));
    LinearMap gf{&h, &h, g.matrix * f.matrix};
    CHECK(is_lie_morphism(gf));
    auto rep = verify_isomorphism(gf, IsoCertify::heisC);
    CHECK(rep.ok);
    CHECK(rep.bijective);
    CHECK(rep.morphism);
    CHECK(rep.target_profile_ok);
}

TEST_CASE("non-bijective maps are flagged even when they are morphisms") {
    LieAlgebra h = make_heisC(3);
    LinearMap zero{&h, &h, qmat(3, 3)};
    CHECK(is_lie_morphism(zero));  // everything maps to 0
    auto rep = verify_isomorphism(zero, IsoCertify::heisC);
    CHECK(!rep.ok);
    CHECK(!rep.bijective);
    CHECK(rep.morphism);
    CHECK(rep.detail == "map is not bijective");
}

TEST_CASE("isomorphism verification rejects dimension mismatches up front") {
    LieAlgebra h3 = make_heisC(3);
    LieAlgebra h5 = make_heisC(5);
    LinearMap f{&h3, &h5, qmat(5, 3)};
    CHECK_THROWS_AS(verify_isomorphism(f, IsoCertify::heisC), std::invalid_argument);
}

TEST_CASE("Heisenberg recognition profiles") {
    std::string why;
    CHECK(heisenberg_profile(make_heisC(5), 1, &why));
    CHECK(why.empty());
    CHECK(heisenberg_profile(make_heisH(7), 3, &why));
    CHECK(why.empty());
    // Wrong requested center dimension.
    CHECK(!heisenberg_profile(make_heisC(5), 3, &why));
    CHECK(!why.empty());
    // Abelian algebra: derived = 0 differs from center = everything.
    LieAlgebra ab("abelian3", {"a", "b", "c"});
    CHECK(!heisenberg_profile(ab, 1, &why));
    CHECK(why == "derived subalgebra differs from center");
    // A central spectator direction splits the center away from the derived
    // subalgebra, so the profile fails even though the algebra is two-step.
    LieAlgebra pad("padded", {"X", "Y", "Z", "W"});
    pad.set_bracket(0, 1, {{2, Rational(-2)}});
    CHECK(!heisenberg_profile(pad, 1, &why));
    CHECK(why == "derived subalgebra differs from center");
}

TEST_CASE("structure constants recovered from matrices match the table") {
    AlgebraModel m = make_o1k(3);
    LieAlgebra rebuilt =
        algebra_from_realization("rebuilt", m.alg.labels(), *m.alg.realization());
    REQUIRE(rebuilt.dim() == m.alg.dim());
    for (std::size_t i = 0; i < rebuilt.dim(); ++i)
        for (std::size_t j = i + 1; j < rebuilt.dim(); ++j)
            CHECK(rebuilt.basis_bracket_dense(i, j) == m.alg.basis_bracket_dense(i, j));
    CHECK(rebuilt.realization_matches());
}

TEST_CASE("matrix reconstruction rejects dependent and non-closed inputs") {
    SMat e01 = smat(2, 2, ScalarKind::rational);
    e01.at(0, 1) = Scalar::one(ScalarKind::rational);
    SMat e10 = smat(2, 2, ScalarKind::rational);
    e10.at(1, 0) = Scalar::one(ScalarKind::rational);
    SMat twice = e01 + e01;
    CHECK_THROWS_AS(algebra_from_realization("dep", {"a", "b"}, {e01, twice}),
                    std::invalid_argument);
    // [e01, e10] = diag(1, -1) lies outside span{e01, e10}.
    CHECK_THROWS_AS(algebra_from_realization("open", {"a", "b"}, {e01, e10}),
                    std::invalid_argument);
}
