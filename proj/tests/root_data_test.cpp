#include "doctest.h"

#include <stdexcept>

#include "lieverify/root_data.hpp"

using namespace lieverify;

TEST_CASE("orthogonal rank-one model: involution, grading, root dimensions") {
    for (std::size_t k = 2; k <= 3; ++k) {
        AlgebraModel m = make_o1k(k);
        CartanData cd = cartan_data(m);
        std::string why;
        CHECK(theta_checks(m, cd, &why));
        CHECK(why.empty());
        RootDecomposition rd = decompose(m, cd);
        CHECK(rd.ok());
        CHECK(rd.roots == std::vector<long>{-1, 0, 1});
        CHECK(rd.dims.at(1) == k - 1);
        CHECK(rd.dims.at(-1) == k - 1);
        // No imaginary structures over the rationals.
        CHECK(imaginary_structures(m, "h-1").empty());
    }
}

TEST_CASE("bracket closure of a single root space stays put; opposite pairs generate") {
    AlgebraModel m = make_o1k(4);
    Subspace hminus = m.part_span("h-1");
    CHECK(hminus.dim() == 3);
    // -2 is not a root here, so h-1 is abelian and already bracket closed.
    CHECK(m.alg.is_subalgebra(hminus));
    CHECK(m.alg.subalgebra_closure(hminus).dim() == 3);
    // Together with the opposite root space it generates the whole algebra.
    Subspace both = hminus.sum(m.part_span("h+1"));
    CHECK(m.alg.subalgebra_closure(both).is_full());
}

TEST_CASE("unitary rank-one model: five-term grading with imaginary corner") {
    AlgebraModel m = make_su1k(2);
    CartanData cd = cartan_data(m);
    CHECK(theta_checks(m, cd));
    RootDecomposition rd = decompose(m, cd);
    CHECK(rd.ok());
    CHECK(rd.roots == std::vector<long>{-2, -1, 0, 1, 2});
    CHECK(rd.dims.at(1) == 2 * 2 - 2);
    CHECK(rd.dims.at(2) == 1);
    CHECK(imaginary_structures(m, "h-1").size() == 1);
}

TEST_CASE("symplectic rank-one model: five-term grading with triple corner") {
    AlgebraModel m = make_sp1k(2);
    CartanData cd = cartan_data(m);
    CHECK(theta_checks(m, cd));
    RootDecomposition rd = decompose(m, cd);
    CHECK(rd.ok());
    CHECK(rd.roots == std::vector<long>{-2, -1, 0, 1, 2});
    CHECK(rd.dims.at(1) == 4 * 2 - 4);
    CHECK(rd.dims.at(2) == 3);
    CHECK(imaginary_structures(m, "h-1").size() == 3);
}

TEST_CASE("root values per basis index agree with the declared parts") {
    AlgebraModel m = make_su1k(3);
    CartanData cd = cartan_data(m);
    RootDecomposition rd = decompose(m, cd);
    REQUIRE(rd.ok());
    for (std::size_t i : m.part("h+1")) CHECK(rd.root_of(i) == 1);
    for (std::size_t i : m.part("h-2")) CHECK(rd.root_of(i) == -2);
    for (std::size_t i : m.part("h0")) CHECK(rd.root_of(i) == 0);
}

TEST_CASE("trace form is negative definite and block diagonal across roots") {
    for (std::size_t k = 2; k <= 3; ++k) {
        AlgebraModel m = make_sp1k(k);
        CartanData cd = cartan_data(m);
        RootDecomposition rd = decompose(m, cd);
        QMat gram = trace_form_gram(m, cd);
        TraceFormChecks tc = check_trace_form(gram, rd);
        CHECK(tc.ok());
        CHECK(tc.inertia.pos == 0);
        CHECK(tc.inertia.zero == 0);
        CHECK(tc.inertia.neg == m.alg.dim());
    }
}

TEST_CASE("recovery identity: literal over the rationals, corrected over C") {
    AlgebraModel mo = make_o1k(3);
    CartanData cdo = cartan_data(mo);
    QMat go = trace_form_gram(mo, cdo);
    Sl2SpanReport ro = sl2_spanning_check(mo, cdo, go);
    CHECK(ro.literal_all);
    CHECK(ro.corrected_all);
    CHECK(ro.recovery_ok());
    CHECK(ro.literal_failures == 0);

    AlgebraModel mu = make_su1k(2);
    CartanData cdu = cartan_data(mu);
    QMat gu = trace_form_gram(mu, cdu);
    Sl2SpanReport ru = sl2_spanning_check(mu, cdu, gu);
    CHECK(!ru.literal_all);
    CHECK(ru.corrected_all);
    CHECK(ru.defect_is_hermitian_term);
    CHECK(ru.literal_on_real_pairs);
    CHECK(ru.recovery_ok());
    CHECK(ru.literal_failures > 0);
}

TEST_CASE("single identity evaluations match the spanning verdicts") {
    AlgebraModel m = make_o1k(3);
    CartanData cd = cartan_data(m);
    QMat gram = trace_form_gram(m, cd);
    const auto& minus = m.part("h-1");
    std::vector<Rational> X = m.alg.coord_vector(minus[0]);
    std::vector<Rational> Y = m.alg.coord_vector(minus[1]);
    Sl2Check c = verify_sl2_identity(m, cd, gram, X, Y, nullptr);
    CHECK(c.ok);
    for (const Rational& d : c.defect) CHECK(rat_is_zero(d));
}

TEST_CASE("bracket-span mechanism holds on both scalar types") {
    for (int fam = 0; fam < 2; ++fam) {
        AlgebraModel m = fam == 0 ? make_o1k(3) : make_su1k(2);
        CartanData cd = cartan_data(m);
        RootDecomposition rd = decompose(m, cd);
        QMat gram = trace_form_gram(m, cd);
        TrickMechanism tm = trick_mechanism(m, cd, gram, rd);
        CHECK(tm.ok(fam == 1));
        CHECK(tm.h0_is_bracket_of_opposite_roots);
        CHECK(tm.recovery_invertible);
        CHECK(tm.determinant_closed_form);
        CHECK(tm.determinants_checked > 0);
    }
}

TEST_CASE("diagonal profile lists eigenvalues with root-space multiplicities") {
    AlgebraModel m = make_su1k(2);
    CartanData cd = cartan_data(m);
    RootDecomposition rd = decompose(m, cd);
    DiagonalProfile dp = ad_diagonal_profile(m, cd, rd);
    CHECK(dp.ok());
    REQUIRE(dp.eigenvalue_table.size() == 5);
    for (const auto& [value, mult] : dp.eigenvalue_table) CHECK(mult == rd.dims.at(value));
}

TEST_CASE("ad restriction requires an invariant module") {
    AlgebraModel m = make_o1k(3);
    // h-1 is invariant under h0 but not under h+1.
    std::vector<QMat> mats = ad_restriction(m, m.part("h0"), m.part("h-1"));
    CHECK(mats.size() == m.part("h0").size());
    for (const QMat& a : mats) {
        CHECK(a.rows() == m.part("h-1").size());
        CHECK(a.cols() == m.part("h-1").size());
    }
    CHECK_THROWS_AS(ad_restriction(m, m.part("h+1"), m.part("h-1")), std::invalid_argument);
}
