#include "doctest.h"

#include "lieverify/lie_algebra.hpp"

using namespace lieverify;

namespace {

// sl2 with the classical basis H, E, F: [H,E] = 2E, [H,F] = -2F, [E,F] = H.
LieAlgebra make_sl2() {
    LieAlgebra g("sl2", {"H", "E", "F"});
    g.set_bracket(0, 1, {{1, Rational(2)}});
    g.set_bracket(0, 2, {{2, Rational(-2)}});
    g.set_bracket(1, 2, {{0, Rational(1)}});
    return g;
}

SMat elem(std::size_t r, std::size_t c, std::size_t n, long v) {
    SMat m = smat(n, n, ScalarKind::rational);
    m.at(r, c) = Scalar::from_rational(ScalarKind::rational, Rational(v));
    return m;
}

}  // namespace

TEST_CASE("sl2 structure constants satisfy Jacobi and match the 2x2 realization") {
    LieAlgebra g = make_sl2();
    CHECK(g.jacobi_holds());
    SMat H = elem(0, 0, 2, 1) + elem(1, 1, 2, -1);
    SMat E = elem(0, 1, 2, 1);
    SMat F = elem(1, 0, 2, 1);
    g.set_realization({H, E, F});
    CHECK(g.realization_matches());
    CHECK(g.derived_subalgebra().is_full());
    CHECK(g.center().is_zero());
    // ad(H) is diag(0, 2, -2) on the basis.
    QMat adH = g.ad_basis(0);
    CHECK(adH.at(1, 1) == Rational(2));
    CHECK(adH.at(2, 2) == Rational(-2));
    CHECK(adH.at(0, 0) == Rational(0));
}

TEST_CASE("a broken table is caught by the Jacobi scan") {
    LieAlgebra g("broken", {"a", "b", "c"});
    g.set_bracket(0, 1, {{2, Rational(1)}});
    g.set_bracket(0, 2, {{1, Rational(1)}});
    g.set_bracket(1, 2, {{1, Rational(1)}});
    auto d = g.jacobi_defect();
    REQUIRE(d.has_value());
    CHECK(d->i == 0);
    CHECK(d->j == 1);
    CHECK(d->k == 2);
}

TEST_CASE("a wrong realization matrix is rejected") {
    LieAlgebra g = make_sl2();
    g.set_realization({elem(0, 0, 2, 1) + elem(1, 1, 2, -1), elem(0, 1, 2, 1),
                       elem(1, 0, 2, 2)});  // F scaled wrongly
    CHECK(!g.realization_matches());
}

TEST_CASE("bracket operations are bilinear and antisymmetric") {
    LieAlgebra g = make_sl2();
    std::vector<Rational> x = {Rational(1), Rational(2), Rational(0)};
    std::vector<Rational> y = {Rational(0), Rational(1), Rational(3)};
    std::vector<Rational> xy = g.bracket(x, y);
    std::vector<Rational> yx = g.bracket(y, x);
    for (std::size_t i = 0; i < 3; ++i) CHECK(xy[i] == -yx[i]);
    // [x, x] = 0.
    std::vector<Rational> xx = g.bracket(x, x);
    for (std::size_t i = 0; i < 3; ++i) CHECK(rat_is_zero(xx[i]));
    // ad matrix agrees with the bracket.
    QMat ad = g.ad(x);
    for (std::size_t i = 0; i < 3; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < 3; ++j) s += ad.at(i, j) * y[j];
        CHECK(s == xy[i]);
    }
}

TEST_CASE("derived series, center and nilpotency of a two-step algebra") {
    // Heisenberg on (X, Y, Z): [X, Y] = Z.
    LieAlgebra g("heis3", {"X", "Y", "Z"});
    g.set_bracket(0, 1, {{2, Rational(1)}});
    CHECK(g.jacobi_holds());
    CHECK(g.derived_subalgebra().dim() == 1);
    CHECK(g.center().dim() == 1);
    CHECK(g.center().contains(g.coord_vector(2)));
    auto deg = g.nilpotency_degree();
    REQUIRE(deg.has_value());
    CHECK(*deg == 2);
    auto series = g.lower_central_series();
    REQUIRE(series.size() >= 2);
    CHECK(series[0].dim() == 3);
    CHECK(series[1].dim() == 1);
}

TEST_CASE("subalgebra closure and induced structure constants") {
    LieAlgebra g = make_sl2();
    // The Borel span{H, E} is closed; {E, F} generates everything.
    Subspace borel = Subspace::span_of(3, {g.coord_vector(0), g.coord_vector(1)});
    CHECK(g.is_subalgebra(borel));
    CHECK(!g.is_ideal(borel));
    Subspace ef = Subspace::span_of(3, {g.coord_vector(1), g.coord_vector(2)});
    CHECK(!g.is_subalgebra(ef));
    CHECK(g.subalgebra_closure(ef).is_full());
    LieAlgebra b = g.induced_subalgebra("borel", {g.coord_vector(0), g.coord_vector(1)},
                                        {"H", "E"});
    CHECK(b.dim() == 2);
    auto t = b.basis_bracket(0, 1);
    REQUIRE(t.size() == 1);
    CHECK(t[0].first == 1);
    CHECK(t[0].second == Rational(2));
}

TEST_CASE("closure under action grows the seed only") {
    LieAlgebra g = make_sl2();
    Subspace seed = Subspace::span_of(3, {g.coord_vector(1)});     // E
    Subspace actors = Subspace::span_of(3, {g.coord_vector(0)});   // H
    Subspace grown = g.closure_under_action(seed, actors);
    CHECK(grown.dim() == 1);  // [H, E] is proportional to E
    Subspace actors2 = Subspace::span_of(3, {g.coord_vector(2)});  // F
    CHECK(g.closure_under_action(seed, actors2).is_full());
}
