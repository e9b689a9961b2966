#include "lieverify/lemmas.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieverify/conformal.hpp"
#include "lieverify/engel.hpp"
#include "lieverify/families.hpp"
#include "lieverify/linalg.hpp"
#include "lieverify/meataxe.hpp"
#include "lieverify/obstruction.hpp"
#include "lieverify/rng.hpp"
#include "lieverify/root_data.hpp"
#include "lieverify/root_system.hpp"

namespace lieverify {

namespace {

std::string num(std::size_t v) { return std::to_string(v); }
std::string rstr(const Rational& q) { return q.get_str(); }

std::string vec_str(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rstr(v[i]);
    }
    return out + ")";
}

AlgebraModel make_rank_one(char family, std::size_t k) {
    switch (family) {
        case 'o': return make_o1k(k);
        case 'u': return make_su1k(k);
        default: return make_sp1k(k);
    }
}

// ---------------------------------------------------------------------------
// construction-soundness: every constructed family is a Lie algebra (exact
// Jacobi identity) and its faithful matrix realization reproduces the
// structure constants entry for entry.
// ---------------------------------------------------------------------------

VerificationReport lemma_construction_soundness(const LemmaOptions& opt) {
    ReportBuilder b("construction-soundness");
    b.param("max_n", num(opt.max_n));
    std::size_t checked = 0;
    auto check = [&](const LieAlgebra& g) {
        ++checked;
        if (auto d = g.jacobi_defect())
            b.counterexample(g.name() + ": Jacobi defect at basis triple (" + num(d->i) + "," +
                             num(d->j) + "," + num(d->k) + "), first coordinate " +
                             vec_str(d->defect));
        if (!g.realization_matches())
            b.counterexample(g.name() +
                             ": matrix realization does not reproduce the structure constants");
    };
    for (std::size_t n = 3; n <= opt.max_n; ++n) {
        check(make_o1k(n).alg);
        check(make_su1k(n).alg);
        check(make_sp1k(n).alg);
        check(make_heisC(2 * n - 3));
        check(make_heisC(2 * n - 1));
        check(make_heisH(4 * n - 1));
        check(make_o2n(n).alg);
        check(make_parabolic(n));
        check(make_umax(n));
    }
    check(make_f4_nilradical());
    b.detail("algebras_checked", num(checked));
    if (!b.failed())
        b.witness("every structure table is Jacobi-exact and reproduced by its realization");
    return b.finish();
}

// ---------------------------------------------------------------------------
// root-decompositions: ad(A) decomposes each rank-one model into integer
// root spaces with the expected dimensions and an exact grading.
// ---------------------------------------------------------------------------

VerificationReport lemma_root_decompositions(const LemmaOptions& opt) {
    ReportBuilder b("root-decompositions");
    b.param("max_n", num(opt.max_n));
    std::size_t models = 0;
    for (char fam : {'o', 'u', 'p'}) {
        for (std::size_t k = 2; k <= opt.max_n; ++k) {
            AlgebraModel m = make_rank_one(fam, k);
            const std::string name = m.alg.name();
            ++models;
            CartanData cd = cartan_data(m);
            std::string why;
            if (!theta_checks(m, cd, &why)) {
                b.counterexample(name + ": involution checks failed: " + why);
                continue;
            }
            RootDecomposition rd = decompose(m, cd);
            if (!rd.ok()) {
                b.counterexample(name + ": root decomposition defect: " + rd.failure);
                continue;
            }
            const std::vector<long> expect_roots =
                fam == 'o' ? std::vector<long>{-1, 0, 1} : std::vector<long>{-2, -1, 0, 1, 2};
            if (rd.roots != expect_roots) {
                b.counterexample(name + ": unexpected root values");
                continue;
            }
            const std::size_t d1 = fam == 'o' ? k - 1 : fam == 'u' ? 2 * k - 2 : 4 * k - 4;
            const std::size_t d2 = fam == 'o' ? 0 : fam == 'u' ? 1 : 3;
            b.require(rd.dims.at(1) == d1 && rd.dims.at(-1) == d1,
                      name + ": dim g_{+-1} == " + num(d1));
            if (d2 > 0)
                b.require(rd.dims.at(2) == d2 && rd.dims.at(-2) == d2,
                          name + ": dim g_{+-2} == " + num(d2));
        }
    }
    b.detail("models_checked", num(models));
    if (!b.failed()) {
        b.witness("o(1,k): roots {0,+-1}, dim g_{+-1} = k-1");
        b.witness("su(1,k): roots {0,+-1,+-2}, dims (2k-2, 1)");
        b.witness("sp(1,k): roots {0,+-1,+-2}, dims (4k-4, 3)");
        b.witness("all gradings exact: [g_b, g_c] inside g_{b+c}, g_0 the centralizer of A");
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// discompact-profiles: eigenvalue tables of ad(A) together with nilpotency
// of the root generators — the computable profile separating the rank-one
// families by their restricted root systems.
// ---------------------------------------------------------------------------

VerificationReport lemma_discompact_profiles(const LemmaOptions& opt) {
    ReportBuilder b("discompact-profiles");
    b.param("max_n", num(opt.max_n));
    for (char fam : {'o', 'u', 'p'}) {
        for (std::size_t k = 2; k <= opt.max_n; ++k) {
            AlgebraModel m = make_rank_one(fam, k);
            const std::string name = m.alg.name();
            CartanData cd = cartan_data(m);
            RootDecomposition rd = decompose(m, cd);
            if (!rd.ok()) {
                b.counterexample(name + ": root decomposition defect: " + rd.failure);
                continue;
            }
            DiagonalProfile prof = ad_diagonal_profile(m, cd, rd);
            b.require(prof.ok(), name + ": ad(A) scalar on each root space, generators nilpotent");
            std::set<long> keys;
            for (const auto& [v, mult] : prof.eigenvalue_table) keys.insert(v);
            const std::set<long> expect = fam == 'o' ? std::set<long>{-1, 0, 1}
                                                     : std::set<long>{-2, -1, 0, 1, 2};
            b.require(keys == expect, name + ": ad(A) eigenvalue set");
            bool mults_ok = true;
            for (const auto& [v, mult] : prof.eigenvalue_table)
                mults_ok = mults_ok && rd.dims.count(v) && rd.dims.at(v) == mult;
            b.require(mults_ok, name + ": eigenvalue multiplicities equal root space dimensions");
        }
    }
    if (!b.failed()) {
        b.witness("o(1,k): ad(A) eigenvalues {0,+-1}; su(1,k), sp(1,k): {0,+-1,+-2}");
        b.witness("every positive-root generator is ad-nilpotent with the graded degree bound");
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// sl2-identity: the recovery identity [[Y, theta X], Y] = B(X,Y) Y -
// (1/2) B(Y,Y) X on the (-1) root space, certified on the polarization-
// complete pair set; for complex models the literal display fails and the
// hermitian-completed identity is certified together with the exact defect.
// Also certifies the finite mechanism (bracket-span equalities, closed-form
// determinants) and the isotropy-module irreducibility for o(1,k).
// ---------------------------------------------------------------------------

VerificationReport lemma_sl2_identity(const LemmaOptions& opt) {
    ReportBuilder b("sl2-identity");
    const std::size_t kmax = std::min<std::size_t>(opt.max_n, 6);
    b.param("max_n", num(opt.max_n));
    b.param("seed", num(static_cast<std::size_t>(opt.seed)));
    std::size_t pairs_total = 0, dets_total = 0;
    for (char fam : {'o', 'u'}) {
        for (std::size_t k = 2; k <= kmax; ++k) {
            AlgebraModel m = make_rank_one(fam, k);
            const std::string name = m.alg.name();
            CartanData cd = cartan_data(m);
            std::string why;
            if (!theta_checks(m, cd, &why)) {
                b.counterexample(name + ": involution checks failed: " + why);
                continue;
            }
            RootDecomposition rd = decompose(m, cd);
            if (!rd.ok()) {
                b.counterexample(name + ": root decomposition defect: " + rd.failure);
                continue;
            }
            QMat gram = trace_form_gram(m, cd);
            TraceFormChecks tf = check_trace_form(gram, rd);
            b.require(tf.ok(), name + ": trace form symmetric, negative definite, root-block diagonal");
            Sl2SpanReport span = sl2_spanning_check(m, cd, gram);
            pairs_total += span.pairs_checked;
            if (fam == 'o') {
                b.require(span.literal_all,
                          name + ": recovery identity holds literally on every spanning pair");
                b.require(span.corrected_all, name + ": hermitian-completed identity agrees");
            } else {
                b.require(span.corrected_all,
                          name + ": hermitian-completed recovery identity on every spanning pair");
                b.require(span.defect_is_hermitian_term,
                          name + ": literal defect equals the hermitian term on every pair");
                b.require(span.literal_on_real_pairs,
                          name + ": literal identity holds when the hermitian term vanishes");
                b.require(!span.literal_all,
                          name + ": literal identity must fail on some complex pair");
                if (k == kmax)
                    b.detail("literal_failures_" + name, num(span.literal_failures));
            }
            TrickMechanism trick = trick_mechanism(m, cd, gram, rd);
            dets_total += trick.determinants_checked;
            b.require(trick.ok(fam == 'u'),
                      name + ": bracket-span equalities and closed-form determinants");
        }
    }
    // Isotropy module of o(1,k): the middle so(k-1) block acting on the
    // (-1) root space.  Absolutely irreducible for k >= 4; the k = 2, 3
    // commutant dimensions are recorded (trivial module / rational rotation
    // plane with a complex-multiplication commutant).
    for (std::size_t k = 2; k <= opt.max_n; ++k) {
        AlgebraModel m = make_o1k(k);
        std::vector<QMat> action = ad_restriction(m, m.part("m"), m.part("h-1"));
        Rng rng(seed_for(opt.seed, "sl2-module:o:" + num(k)));
        ModuleAnalysis ma = analyze_module(action, k - 1, rng);
        const std::string name = "o(1," + num(k) + ")";
        if (k >= 4) {
            b.require(ma.irreducible() && ma.commutant_dim == 1 && ma.absolutely_irreducible,
                      name + ": isotropy module absolutely irreducible with commutant dimension 1");
        } else {
            b.require(ma.irreducible(), name + ": isotropy module irreducible over the rationals");
            b.require(ma.commutant_dim == (k == 2 ? 1u : 2u),
                      name + ": isotropy-module commutant dimension");
            b.detail("commutant_dim_k" + num(k), num(ma.commutant_dim));
        }
    }
    b.detail("identity_pairs_checked", num(pairs_total));
    b.detail("determinants_checked", num(dets_total));
    if (!b.failed()) {
        b.witness("o(1,k), k=2.." + num(kmax) + ": literal recovery identity exact on all pairs");
        b.witness("su(1,k), k=2.." + num(kmax) +
                  ": corrected identity exact; literal defect equals the hermitian term");
        b.witness("o(1,k), 4<=k<=" + num(opt.max_n) +
                  ": isotropy module absolutely irreducible (commutant dimension 1)");
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// heis-embeddings: explicit isomorphism certificates between the nilradicals
// of su(1,k) / sp(1,k) and the Heisenberg models, the octonion cross-check
// of the 15-dimensional two-step algebra, and the heisH(7) bracket table.
// ---------------------------------------------------------------------------

// Change of basis p_1..p_r, q_1..q_r of the non-central coordinates of a
// Heisenberg-type algebra (center spanned by basis vector zidx, all other
// brackets valued on that line) with [p_l, q_m] = -2 delta_lm e_z and all
// other pairs bracketing to zero.
struct SymplecticBasis {
    std::vector<std::vector<Rational>> p, q;  // coordinates in the algebra
    bool ok = false;
    std::string why;
};

SymplecticBasis symplectic_normalize(const LieAlgebra& g,
                                     const std::vector<std::size_t>& comp, std::size_t zidx) {
    SymplecticBasis out;
    const std::size_t d = comp.size();
    QMat omega = qmat(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            for (const auto& [t, c] : g.basis_bracket(comp[i], comp[j])) {
                if (t != zidx) {
                    out.why = "bracket escapes the center line";
                    return out;
                }
                omega.at(i, j) += c;
            }
        }
    auto pair_value = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Rational s(0);
        for (std::size_t i = 0; i < d; ++i) {
            if (rat_is_zero(a[i])) continue;
            for (std::size_t j = 0; j < d; ++j) s += a[i] * omega.at(i, j) * b[j];
        }
        return s;
    };
    std::vector<std::vector<Rational>> pool;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rational> e(d, Rational(0));
        e[i] = 1;
        pool.push_back(std::move(e));
    }
    while (!pool.empty()) {
        std::vector<Rational> u = pool.front();
        pool.erase(pool.begin());
        std::size_t mate = pool.size();
        for (std::size_t t = 0; t < pool.size(); ++t)
            if (!rat_is_zero(pair_value(u, pool[t]))) {
                mate = t;
                break;
            }
        if (mate == pool.size()) {
            out.why = "degenerate pairing: a basis direction pairs to zero with everything";
            return out;
        }
        std::vector<Rational> v = pool[mate];
        pool.erase(pool.begin() + static_cast<long>(mate));
        const Rational c = pair_value(u, v);
        const Rational scale = Rational(-2) / c;
        for (auto& x : v) x *= scale;
        // Now omega(u, v) = -2; project the rest onto the symplectic
        // complement of the pair.
        for (auto& w : pool) {
            const Rational a = pair_value(w, v) / Rational(-2);
            const Rational bb = pair_value(w, u) / Rational(2);
            for (std::size_t i = 0; i < d; ++i) w[i] -= a * u[i] + bb * v[i];
        }
        out.p.push_back(std::move(u));
        out.q.push_back(std::move(v));
    }
    // Lift to full algebra coordinates.
    auto lift = [&](std::vector<std::vector<Rational>>& vs) {
        for (auto& v : vs) {
            std::vector<Rational> full(g.dim(), Rational(0));
            for (std::size_t i = 0; i < d; ++i) full[comp[i]] = v[i];
            v = std::move(full);
        }
    };
    lift(out.p);
    lift(out.q);
    out.ok = true;
    return out;
}

// Columns of an isomorphism candidate assembled from images of the source
// basis vectors.
LinearMap map_from_columns(const LieAlgebra& src, const LieAlgebra& dst,
                           const std::vector<std::vector<Rational>>& cols) {
    QMat F = qmat(dst.dim(), src.dim());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < dst.dim(); ++i) F.at(i, j) = cols[j][i];
    return LinearMap{&src, &dst, std::move(F)};
}

VerificationReport lemma_heis_embeddings(const LemmaOptions& opt) {
    ReportBuilder b("heis-embeddings");
    b.param("max_n", num(opt.max_n));
    for (std::size_t k = 3; k <= opt.max_n; ++k) {
        // su(1,k): nilradical (the +1 and +2 root spaces) == heisC(2k-1).
        {
            AlgebraModel m = make_su1k(k);
            std::vector<std::size_t> idx = m.part("h+1");
            for (std::size_t t : m.part("h+2")) idx.push_back(t);
            LieAlgebra N = coordinate_subalgebra(m.alg, idx, "nilradical(su(1," + num(k) + "))");
            const std::size_t zidx = idx.size() - 1;
            std::vector<std::size_t> comp(zidx);
            for (std::size_t i = 0; i < zidx; ++i) comp[i] = i;
            SymplecticBasis sb = symplectic_normalize(N, comp, zidx);
            if (!sb.ok) {
                b.counterexample(N.name() + ": no symplectic normalization: " + sb.why);
                continue;
            }
            LieAlgebra H = make_heisC(2 * k - 1);
            std::vector<std::vector<Rational>> cols;
            for (const auto& v : sb.p) cols.push_back(v);
            for (const auto& v : sb.q) cols.push_back(v);
            cols.push_back(N.coord_vector(zidx));
            IsoReport rep = verify_isomorphism(map_from_columns(H, N, cols), IsoCertify::heisC);
            b.require(rep.ok, N.name() + " == heisC(" + num(2 * k - 1) +
                                  ") via the explicit basis change" +
                                  (rep.ok ? "" : " (" + rep.detail + ")"));
        }
        // sp(1,k): nilradical == heisH(4k-1).  The quaternionic slots of the
        // +1 space pair with the opposite orientation, so the isomorphism
        // conjugates each quaternionic coordinate: U_{l,1} -> b_{l,1},
        // U_{l,x} -> -b_{l,x}, Z_x -> -P_x.
        {
            AlgebraModel m = make_sp1k(k);
            std::vector<std::size_t> idx = m.part("h+1");
            for (std::size_t t : m.part("h+2")) idx.push_back(t);
            LieAlgebra N = coordinate_subalgebra(m.alg, idx, "nilradical(sp(1," + num(k) + "))");
            LieAlgebra H = make_heisH(4 * k - 1);
            const std::size_t r = k - 1;
            std::vector<std::vector<Rational>> cols;
            for (std::size_t l = 0; l < r; ++l)
                for (std::size_t s = 0; s < 4; ++s) {
                    std::vector<Rational> v(N.dim(), Rational(0));
                    v[4 * l + s] = (s == 0) ? 1 : -1;
                    cols.push_back(std::move(v));
                }
            for (std::size_t x = 0; x < 3; ++x) {
                std::vector<Rational> v(N.dim(), Rational(0));
                v[4 * r + x] = -1;
                cols.push_back(std::move(v));
            }
            IsoReport rep = verify_isomorphism(map_from_columns(H, N, cols), IsoCertify::heisH);
            b.require(rep.ok, N.name() + " == heisH(" + num(4 * k - 1) +
                                  ") via quaternionic-slot conjugation" +
                                  (rep.ok ? "" : " (" + rep.detail + ")"));
        }
    }
    // Octonion model: the 15-dimensional table equals x conj(y) - y conj(x)
    // computed directly in the Cayley-Dickson octonions, and the algebra has
    // the two-step profile with 7-dimensional center = derived subalgebra
    // and nondegenerate center-valued pairing.
    {
        LieAlgebra f4 = make_f4_nilradical();
        bool table_ok = true;
        for (std::size_t a = 0; a < 8 && table_ok; ++a)
            for (std::size_t bx = a + 1; bx < 8 && table_ok; ++bx) {
                Scalar xa = Scalar::unit(ScalarKind::octonion, a);
                Scalar xb = Scalar::unit(ScalarKind::octonion, bx);
                Scalar w = xa * xb.conj() + (-(xb * xa.conj()));
                std::vector<Rational> dense = f4.basis_bracket_dense(a, bx);
                if (!rat_is_zero(w.coeff(0))) table_ok = false;
                for (std::size_t t = 0; t < 8 && table_ok; ++t)
                    if (!rat_is_zero(dense[t])) table_ok = false;
                for (std::size_t t = 1; t < 8 && table_ok; ++t)
                    if (dense[7 + t] != w.coeff(t)) table_ok = false;
                if (!table_ok)
                    b.counterexample("octonion table mismatch at pair (x" + num(a) + ",x" +
                                     num(bx) + ")");
            }
        b.require(table_ok, "bracket table equals x conj(y) - y conj(x) in the octonions");
        LieAlgebra::StructureReport sr = f4.structure_report();
        Subspace s_span(f4.dim());
        for (std::size_t t = 8; t < 15; ++t) s_span.add(f4.coord_vector(t));
        b.require(sr.center == s_span && sr.derived == s_span && sr.center.dim() == 7,
                  "center == derived == imaginary-octonion span of dimension 7");
        b.require(sr.nilpotency_degree && *sr.nilpotency_degree == 2, "two-step nilpotent");
        QMat pairing = qmat(8 * 7, 8);
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t bx = 0; bx < 8; ++bx) {
                std::vector<Rational> dense = f4.basis_bracket_dense(std::min(a, bx),
                                                                     std::max(a, bx));
                const Rational sign = a < bx ? Rational(1) : Rational(-1);
                if (a == bx) continue;
                for (std::size_t t = 0; t < 7; ++t)
                    pairing.at(a * 7 + t, bx) = sign * dense[8 + t];
            }
        b.require(kernel(pairing).cols() == 0,
                  "center-valued pairing nondegenerate on the octonion coordinates");
    }
    // heisH(7) in its quaternionic-line generators: all sixteen ordered
    // bracket pairs match the displayed table.
    {
        Heis7Table t7 = heis7_bracket_table();
        b.require(t7.ok(), "heisH(7) bracket table holds entry for entry");
        b.detail("heisH7_center_rescale", rstr(t7.center_rescale));
    }
    if (!b.failed()) {
        b.witness("nilradical(su(1,k)) == heisC(2k-1) and nilradical(sp(1,k)) == heisH(4k-1), "
                  "k=3.." + num(opt.max_n) + ", each by an explicit verified isomorphism");
        b.witness("the 15-dimensional two-step algebra is the octonion Heisenberg model");
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// umax-semidirect: u_max(n) is a line semidirect a Heisenberg ideal — the
// complement of t is an ideal of codimension one isomorphic to heisC(2n-3),
// ad(t) is a (square-zero) derivation of it, and u_max sits inside the
// parabolic of o(2,n) matrix for matrix.
// ---------------------------------------------------------------------------

VerificationReport lemma_umax_semidirect(const LemmaOptions& opt) {
    ReportBuilder b("umax-semidirect");
    b.param("max_n", num(opt.max_n));
    for (std::size_t n = 3; n <= opt.max_n; ++n) {
        LieAlgebra u = make_umax(n);
        const std::string name = u.name();
        const std::size_t tidx = u.label_index("t");
        std::vector<std::size_t> ideal_idx;
        for (std::size_t i = 0; i < u.dim(); ++i)
            if (i != tidx) ideal_idx.push_back(i);
        std::vector<std::vector<Rational>> basis;
        std::vector<std::string> labels;
        Subspace W(u.dim());
        for (std::size_t i : ideal_idx) {
            basis.push_back(u.coord_vector(i));
            labels.push_back(u.labels()[i]);
            W.add(u.coord_vector(i));
        }
        b.require(u.is_ideal(W), name + ": complement of t is an ideal");
        b.require(W.dim() + 1 == u.dim(), name + ": the ideal has codimension one");
        LieAlgebra I = u.induced_subalgebra("heis-part(" + name + ")", basis, labels);
        // Explicit isomorphism of the ideal with heisC(2n-3); alpha is the
        // last ideal coordinate and spans the center.
        const std::size_t zidx = ideal_idx.size() - 1;
        std::vector<std::size_t> comp(zidx);
        for (std::size_t i = 0; i < zidx; ++i) comp[i] = i;
        SymplecticBasis sb = symplectic_normalize(I, comp, zidx);
        if (!sb.ok) {
            b.counterexample(name + ": ideal has no symplectic normalization: " + sb.why);
            continue;
        }
        LieAlgebra H = make_heisC(2 * n - 3);
        std::vector<std::vector<Rational>> cols;
        for (const auto& v : sb.p) cols.push_back(v);
        for (const auto& v : sb.q) cols.push_back(v);
        cols.push_back(I.coord_vector(zidx));
        IsoReport rep = verify_isomorphism(map_from_columns(H, I, cols), IsoCertify::heisC);
        b.require(rep.ok, name + ": ideal == heisC(" + num(2 * n - 3) + ")" +
                              (rep.ok ? "" : " (" + rep.detail + ")"));
        // ad(t) restricted to the ideal, expressed in ideal coordinates.
        const std::size_t d = ideal_idx.size();
        QMat D = qmat(d, d);
        bool stays = true;
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Rational> img = u.bracket(u.coord_vector(tidx), u.coord_vector(ideal_idx[j]));
            if (!rat_is_zero(img[tidx])) stays = false;
            for (std::size_t i = 0; i < d; ++i) D.at(i, j) = img[ideal_idx[i]];
        }
        b.require(stays, name + ": ad(t) maps the ideal into itself");
        auto apply_D = [&](const std::vector<Rational>& x) {
            std::vector<Rational> y(d, Rational(0));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) y[i] += D.at(i, j) * x[j];
            return y;
        };
        bool derivation = true;
        for (std::size_t i = 0; i < d && derivation; ++i)
            for (std::size_t j = i + 1; j < d && derivation; ++j) {
                std::vector<Rational> lhs = apply_D(I.basis_bracket_dense(i, j));
                std::vector<Rational> rhs =
                    I.bracket(apply_D(I.coord_vector(i)), I.coord_vector(j));
                std::vector<Rational> rhs2 =
                    I.bracket(I.coord_vector(i), apply_D(I.coord_vector(j)));
                for (std::size_t t = 0; t < d; ++t)
                    if (lhs[t] != rhs[t] + rhs2[t]) derivation = false;
            }
        b.require(derivation, name + ": ad(t) is a derivation of the ideal");
        QMat D2 = D * D;
        b.require(D2.is_zero(), name + ": ad(t) squares to zero on the ideal");
        // Matrix-for-matrix membership inside o(2,n): the adapted o(2,n)
        // basis carries the same four letter groups.
        AlgebraModel o2 = make_o2n(n);
        const std::vector<std::size_t>& up = o2.part("umax");
        bool same = up.size() == u.dim();
        for (std::size_t i = 0; same && i < up.size(); ++i) {
            QMat a = realify(u.realize(u.coord_vector(i)));
            QMat c = realify(o2.alg.realize(o2.alg.coord_vector(up[i])));
            same = a == c;
        }
        b.require(same, name + ": realization matrices coincide with the o(2," + num(n) +
                            ") unipotent letters");
        bool in_p = true;
        for (std::size_t i : up)
            if (std::find(o2.part("p").begin(), o2.part("p").end(), i) == o2.part("p").end())
                in_p = false;
        b.require(in_p, name + ": the unipotent letters lie in the parabolic block");
    }
    if (!b.failed()) {
        b.witness("u_max(n) = line(t) semidirect heisC(2n-3) for n=3.." + num(opt.max_n));
        b.witness("ad(t) is a square-zero derivation: v_i -> u_i -> 0, alpha -> 0");
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// heis7-obstruction: no surjection u_max(n) -> heisH(7) — grid-certified
// image formulas, the sum-of-squares minor, the rank-two receiving line
// contradiction, plus a randomized falsifier for full-rank linear maps.
// ---------------------------------------------------------------------------

VerificationReport lemma_heis7_obstruction(const LemmaOptions& opt) {
    ReportBuilder b("heis7-obstruction");
    b.param("max_n", num(opt.max_n));
    b.param("seed", num(static_cast<std::size_t>(opt.seed)));
    for (std::size_t n = 3; n <= opt.max_n; ++n) {
        ObstructionReport rep = obstruction_identities(n);
        if (!rep.table_ok) b.counterexample("n=" + num(n) + ": heisH(7) table mismatch");
        for (const auto& gi : rep.identity_checks)
            if (!gi.pass)
                b.counterexample("n=" + num(n) + ": identity '" + gi.id +
                                 "' fails at grid point " + vec_str(gi.failing_point));
        b.require(rep.minor_forces_t1_zero,
                  "n=" + num(n) + ": minor determinant factors as t1^2 (t1^2 + t4^2)");
        b.require(rep.dimD_contradiction,
                  "n=" + num(n) + ": derived line of heisC(2n-3) cannot carry rank two");
        b.require(rep.semidirect_membership_ok,
                  "n=" + num(n) + ": combinations t_a X_1 - t_1 X_a drop into the ideal");
        if (n == 3) {
            for (const auto& gi : rep.identity_checks)
                b.detail("grid:" + gi.id,
                         num(gi.grid_points) + " points, degree bound " + num(gi.degree_bound) +
                             ", " + num(gi.points_per_variable) + " per variable");
        }
    }
    for (std::size_t n : {std::size_t{3}, std::size_t{4}, std::size_t{5}}) {
        FalsifierReport fr =
            random_morphism_falsifier(n, 1000, seed_for(opt.seed, "obstruction-falsifier:" + num(n)));
        b.require(fr.pass(), "n=" + num(n) + ": no sampled full-rank map is a morphism");
        std::string line = "trials=" + num(fr.trials) + " surjective=" + num(fr.surjective_samples) +
                           " counterexamples=" + num(fr.counterexamples);
        if (fr.vacuous) line += " (vacuous: " + fr.warning + ")";
        b.detail("falsifier_n" + num(n), line);
    }
    if (!b.failed()) {
        b.witness("all image formulas certified exactly on complete interpolation grids");
        b.witness("the minor is a real sum of squares times t1^2, forcing t1 = 0, "
                  "which kills the image rank");
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// root-embeddings: exhaustive embedding verdicts between the small root
// systems, with closed-image semantics and complete search certificates.
// ---------------------------------------------------------------------------

VerificationReport lemma_root_embeddings(const LemmaOptions&) {
    ReportBuilder b("root-embeddings");
    auto run = [&](const std::string& from, const std::string& into, bool expected) {
        RootSystem r1 = make_root_system(from);
        RootSystem r2 = make_root_system(into);
        EmbedReport er = embeds(r1, r2);
        b.require(er.embeds == expected,
                  from + " -> " + into + " expected " + (expected ? "true" : "false"));
        if (er.embeds) {
            b.require(er.witness_verified, from + " -> " + into + ": witness re-verified");
            if (er.witness) {
                std::string w = from + " -> " + into + " witness base images:";
                for (std::size_t c = 0; c < er.witness->cols(); ++c) {
                    std::vector<Rational> col(er.witness->rows());
                    for (std::size_t r = 0; r < er.witness->rows(); ++r)
                        col[r] = er.witness->at(r, c);
                    w += " " + vec_str(col);
                }
                b.witness(w);
            }
        } else {
            b.require(er.exhaustive &&
                          er.leaves_examined + er.pruned_tuples == er.predicted_total,
                      from + " -> " + into + ": exhaustion certificate complete");
        }
        b.detail(from + "->" + into, std::string(er.embeds ? "true" : "false") +
                                         " leaves=" + num(er.leaves_examined) +
                                         " pruned=" + num(er.pruned_tuples) +
                                         " total=" + num(er.predicted_total));
    };
    run("A1+A1", "B2", true);
    run("A1+BC1", "B2", false);
    run("BC1+BC1", "B2", false);
    run("A3+A1", "D4", false);
    // Dropping the closed-image requirement changes the D4 verdict: a purely
    // linear root-set containment exists, so closedness is what eliminates
    // the pair.
    {
        EmbedReport er = embeds(make_root_system("A3+A1"), make_root_system("D4"), false);
        b.require(er.embeds && er.witness_verified,
                  "A3+A1 -> D4 without closedness: a linear witness exists");
        b.detail("A3+A1->D4 (containment only)", "true (closedness is the operative requirement)");
    }
    // Independent oracle for the doubled-root distinction.
    b.require(some_root_with_double(make_root_system("BC1")), "BC1 contains a doubled root");
    for (const char* tag : {"A1", "A2", "B2", "B3", "D4"})
        b.require(!some_root_with_double(make_root_system(tag)),
                  std::string(tag) + " contains no doubled root");
    if (!b.failed())
        b.witness("negative verdicts carry complete exhaustion counts: "
                  "leaves + pruned == |R2|^rank(R1)");
    return b.finish();
}

// ---------------------------------------------------------------------------
// dim-scan: the minimal-dimension inequality d(n) d(m) >= n + m fails only
// at (3,3) and (6,3) for parameters up to 30, and both exceptions are closed
// off by other means.
// ---------------------------------------------------------------------------

VerificationReport lemma_dim_scan(const LemmaOptions&) {
    ReportBuilder b("dim-scan");
    b.param("N", "30");
    DimScanReport r = dim_inequality_scan(30);
    const std::vector<std::pair<std::size_t, std::size_t>> expect = {{3, 3}, {6, 3}};
    b.require(r.exceptions == expect, "exceptions == {(3,3), (6,3)}");
    for (std::size_t i = 0; i < r.exceptions.size() && i < r.notes.size(); ++i)
        b.witness("(" + num(r.exceptions[i].first) + "," + num(r.exceptions[i].second) + "): " +
                  r.notes[i]);
    b.require(r.d4_check.has_value() && r.d4_check_eliminates,
              "the (6,3) pair is eliminated by the A3+A1 -> D4 exhaustive check");
    if (r.d4_check)
        b.detail("d4_check", "leaves=" + num(r.d4_check->leaves_examined) +
                                 " pruned=" + num(r.d4_check->pruned_tuples) +
                                 " total=" + num(r.d4_check->predicted_total));
    return b.finish();
}

// ---------------------------------------------------------------------------
// conformal-quotient: the parabolic quotient of o(2,n) carries exactly one
// invariant conformal class, it is Lorentz, every parabolic generator acts
// conformally, and the only non-isometric generator is the grading element
// with |lambda| = 2.  Isotropic subspaces of the quotient have dimension at
// most one.
// ---------------------------------------------------------------------------

VerificationReport lemma_conformal_quotient(const LemmaOptions& opt) {
    ReportBuilder b("conformal-quotient");
    b.param("max_n", num(opt.max_n));
    for (std::size_t n = 3; n <= opt.max_n; ++n) {
        ConformalModel cm;
        try {
            cm = build_model(n);
        } catch (const std::exception& e) {
            b.counterexample("n=" + num(n) + ": model construction invariant failed: " + e.what());
            continue;
        }
        b.require(cm.invariance_solution_dim == 1,
                  "n=" + num(n) + ": invariant-form solution space is one dimensional");
        b.require(cm.q_signature.neg == 1 && cm.q_signature.pos == n - 1 &&
                      cm.q_signature.zero == 0,
                  "n=" + num(n) + ": Q is Lorentz with signature (1," + num(n - 1) + ")");
        // The normalized matrix is exactly 2 c beta + sum z_i^2 on the
        // quotient coordinates (c, z_1..z_{n-2}, beta).
        QMat expectQ = qmat(n, n);
        expectQ.at(0, n - 1) = 1;
        expectQ.at(n - 1, 0) = 1;
        for (std::size_t i = 1; i + 1 < n; ++i) expectQ.at(i, i) = 1;
        b.require(cm.Q == expectQ, "n=" + num(n) + ": Q == 2 c beta + sum z_i^2");
        std::vector<std::pair<std::string, Rational>> nonzero;
        bool all_conformal = true;
        for (std::size_t idx : cm.g.part("p")) {
            ConformalFactor cf = ad_conformal_factor(cm, cm.g.alg.coord_vector(idx));
            if (!cf.conformal) {
                all_conformal = false;
                b.counterexample("n=" + num(n) + ": generator " + cm.g.alg.labels()[idx] +
                                 " does not act conformally on (g/p, Q)");
            }
            if (!rat_is_zero(cf.lambda)) nonzero.emplace_back(cm.g.alg.labels()[idx], cf.lambda);
        }
        b.require(all_conformal, "n=" + num(n) + ": every parabolic generator is Q-conformal");
        bool grading_only =
            nonzero.size() == 1 && nonzero[0].first == "Ea" &&
            (nonzero[0].second == Rational(2) || nonzero[0].second == Rational(-2));
        b.require(grading_only, "n=" + num(n) +
                                    ": the unique non-isometric generator is the grading "
                                    "element with |lambda| = 2");
        if (!nonzero.empty() && n == opt.max_n)
            b.detail("grading_factor", nonzero[0].first + ": " + rstr(nonzero[0].second));
        IsotropicScan scan = isotropic_dimension_scan(cm);
        b.require(scan.ok(), "n=" + num(n) + ": isotropic subspaces have dimension <= 1");
        if (n == opt.max_n)
            b.detail("isotropic_scan",
                     num(scan.subsets_checked) + " coordinate subsets, max isotropic dim " +
                         num(scan.max_coordinate_isotropic_dim));
        // Trichotomy spot checks on coordinate subspaces of the quotient.
        std::vector<Rational> e0(n, Rational(0)), e1(n, Rational(0));
        e0[0] = 1;
        e1[1] = 1;
        try {
            bool tri = classify_subspace(cm, Subspace::span_of(n, {e0})) ==
                           SubspaceClass::degenerate_positive &&
                       classify_subspace(cm, Subspace::span_of(n, {e1})) ==
                           SubspaceClass::riemannian &&
                       classify_subspace(cm, Subspace::full(n)) == SubspaceClass::lorentzian;
            b.require(tri, "n=" + num(n) + ": sub-Lorentzian trichotomy on spot subspaces");
        } catch (const std::exception& e) {
            b.counterexample("n=" + num(n) + ": trichotomy classification threw: " + e.what());
        }
    }
    if (!b.failed()) {
        b.witness("Q == 2 c beta + sum z_i^2, signature (1, n-1), for n=3.." + num(opt.max_n));
        b.witness("conformal factors: Ea -> -2, every other parabolic generator -> 0");
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// engel-isotropic: randomized round trips — conjugate subalgebras of
// u_max(n) around the parabolic by exact isometries, recover an isotropic
// common-kernel vector, and conjugate the algebra back into u_max.
// ---------------------------------------------------------------------------

QMat exp_nilpotent(const QMat& N) {
    QMat term = qident(N.rows());
    QMat sum = term;
    Rational fact(1);
    for (std::size_t p = 1; p <= N.rows() + 1; ++p) {
        term = term * N;
        if (term.is_zero()) return sum;
        fact *= Rational(static_cast<long>(p));
        QMat scaled = term;
        for (std::size_t i = 0; i < scaled.rows(); ++i)
            for (std::size_t j = 0; j < scaled.cols(); ++j) scaled.at(i, j) /= fact;
        sum = sum + scaled;
    }
    throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
}

VerificationReport lemma_engel_isotropic(const LemmaOptions& opt) {
    ReportBuilder b("engel-isotropic");
    const std::size_t trials = 100;
    b.param("max_n", num(opt.max_n));
    b.param("seed", num(static_cast<std::size_t>(opt.seed)));
    b.param("trials", num(trials));
    for (std::size_t n : {std::size_t{4}, std::size_t{5}, std::size_t{6}}) {
        if (n > opt.max_n) continue;
        AlgebraModel o2 = make_o2n(n);
        const QMat F = realify(*o2.ambient_form);
        auto part_mats = [&](const char* part) {
            std::vector<QMat> out;
            for (std::size_t i : o2.part(part))
                out.push_back(realify(o2.alg.realize(o2.alg.coord_vector(i))));
            return out;
        };
        const std::vector<QMat> umax_mats = part_mats("umax");
        const std::vector<QMat> w_mats = part_mats("W");
        const std::vector<QMat> a_mats = part_mats("Ablock");
        const std::size_t N = n + 2;
        Rng rng(seed_for(opt.seed, "engel-isotropic:n=" + num(n)));
        auto random_combo = [&](const std::vector<QMat>& mats, long lo, long hi) {
            QMat M = qmat(N, N);
            bool nonzero = false;
            while (!nonzero) {
                for (const QMat& mat : mats) {
                    const long c = rng.range(lo, hi);
                    if (c == 0) continue;
                    nonzero = true;
                    for (std::size_t i = 0; i < N; ++i)
                        for (std::size_t j = 0; j < N; ++j)
                            M.at(i, j) += Rational(c) * mat.at(i, j);
                }
            }
            return M;
        };
        const std::vector<Rational> squeezes = {Rational(1), Rational(2), rat(1, 2), Rational(3)};
        std::size_t isotropic_ok = 0, conjugated = 0;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            // Random conjugator in the parabolic subgroup: a unipotent
            // factor, a mid-block rotation (Cayley transform of a skew
            // block), and a diagonal squeeze; each preserves the form and
            // normalizes the parabolic.
            QMat C = exp_nilpotent(random_combo(umax_mats, -2, 2));
            C = C * exp_nilpotent(random_combo(w_mats, -2, 2));
            if (!a_mats.empty() && rng.below(2) == 0) {
                QMat S = random_combo(a_mats, -1, 1);
                // Cayley transform of a skew block: I - S is invertible.
                C = C * (qident(N) + S) * *inverse(qident(N) - S);
            }
            QMat Dg = qident(N);
            const Rational lam = squeezes[rng.below(squeezes.size())];
            const Rational mu = squeezes[rng.below(squeezes.size())];
            Dg.at(0, 0) = lam;
            Dg.at(1, 1) = mu;
            Dg.at(n, n) = Rational(1) / mu;
            Dg.at(n + 1, n + 1) = Rational(1) / lam;
            C = C * Dg;
            if (!(C.transpose() * F * C == F)) {
                b.counterexample("n=" + num(n) + " trial " + num(trial) +
                                 ": conjugator is not an isometry");
                break;
            }
            const QMat Cinv = *inverse(C);
            const std::size_t count = 1 + rng.below(3);
            std::vector<QMat> gens;
            for (std::size_t g = 0; g < count; ++g)
                gens.push_back(C * random_combo(umax_mats, -2, 2) * Cinv);
            try {
                NilpotentAlgebra alg = nilpotent_algebra(gens, F);
                IsotropicFixed fix = isotropic_fixed_vector(alg);
                // Re-verify the two defining equations against the inputs.
                bool zero = true;
                for (const auto& x : fix.vector) zero = zero && rat_is_zero(x);
                Rational qv(0);
                for (std::size_t i = 0; i < N; ++i)
                    for (std::size_t j = 0; j < N; ++j)
                        qv += fix.vector[i] * F.at(i, j) * fix.vector[j];
                bool annihilated = true;
                for (const QMat& X : alg.basis) {
                    for (std::size_t i = 0; i < N && annihilated; ++i) {
                        Rational s(0);
                        for (std::size_t j = 0; j < N; ++j) s += X.at(i, j) * fix.vector[j];
                        annihilated = annihilated && rat_is_zero(s);
                    }
                }
                if (!zero && rat_is_zero(qv) && annihilated) ++isotropic_ok;
                else
                    b.counterexample("n=" + num(n) + " trial " + num(trial) +
                                     ": isotropic fixed vector failed re-verification");
                ConjugationResult res = conjugate_into_umax(n, gens);
                if (res.image_in_umax) ++conjugated;
                else
                    b.counterexample("n=" + num(n) + " trial " + num(trial) + ": generator " +
                                     num(res.offending_generator) +
                                     " escapes u_max after conjugation");
            } catch (const std::exception& e) {
                b.counterexample("n=" + num(n) + " trial " + num(trial) + ": " + e.what());
            }
        }
        b.require(isotropic_ok == trials,
                  "n=" + num(n) + ": every trial yields an exact isotropic annihilated vector");
        b.require(conjugated == trials,
                  "n=" + num(n) + ": every trial conjugates back into u_max");
        b.detail("n" + num(n), "trials=" + num(trials) + " isotropic=" + num(isotropic_ok) +
                                   " conjugated=" + num(conjugated));
    }
    if (!b.failed())
        b.witness("randomized parabolic conjugates of unipotent subalgebras always fix an "
                  "exact isotropic vector and return into u_max");
    return b.finish();
}

}  // namespace

const std::vector<LemmaEntry>& lemma_registry() {
    static const std::vector<LemmaEntry> registry = {
        {"construction-soundness",
         "Jacobi identity and matrix-realization match for every constructed family",
         lemma_construction_soundness},
        {"root-decompositions",
         "integer root-space decompositions of the rank-one models with exact gradings",
         lemma_root_decompositions},
        {"discompact-profiles",
         "ad(A) eigenvalue tables {0,+-1} / {0,+-1,+-2} with nilpotent root generators",
         lemma_discompact_profiles},
        {"sl2-identity",
         "recovery identity on the (-1) root space, its hermitian correction, and the "
         "isotropy-module irreducibility certificates",
         lemma_sl2_identity},
        {"heis-embeddings",
         "nilradicals of su(1,k) and sp(1,k) are Heisenberg algebras, with the octonion model "
         "and the heisH(7) bracket table",
         lemma_heis_embeddings},
        {"umax-semidirect",
         "u_max(n) is a line semidirect heisC(2n-3) inside the parabolic of o(2,n)",
         lemma_umax_semidirect},
        {"heis7-obstruction",
         "no surjection u_max(n) -> heisH(7): grid-certified identities, sum-of-squares minor, "
         "rank-two contradiction, randomized falsifier",
         lemma_heis7_obstruction},
        {"root-embeddings",
         "exhaustive closed-subsystem embedding verdicts between the small root systems",
         lemma_root_embeddings},
        {"dim-scan",
         "minimal-dimension inequality scan up to 30 with both exceptions closed off",
         lemma_dim_scan},
        {"conformal-quotient",
         "the parabolic quotient of o(2,n) carries a unique Lorentz conformal class with "
         "conformal parabolic action",
         lemma_conformal_quotient},
        {"engel-isotropic",
         "randomized isotropic fixed vectors and conjugation of unipotent subalgebras into u_max",
         lemma_engel_isotropic},
    };
    return registry;
}

const LemmaEntry* find_lemma(const std::string& id) {
    for (const auto& e : lemma_registry())
        if (e.id == id) return &e;
    return nullptr;
}

std::vector<VerificationReport> run_lemmas(const std::vector<std::string>& ids,
                                           const LemmaOptions& opt) {
    std::set<std::string> wanted;
    for (const auto& id : ids) {
        if (!find_lemma(id)) throw std::invalid_argument("unknown lemma id: " + id);
        wanted.insert(id);
    }
    std::vector<VerificationReport> out;
    for (const auto& e : lemma_registry()) {
        if (!wanted.count(e.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        VerificationReport r = e.run(opt);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace lieverify
