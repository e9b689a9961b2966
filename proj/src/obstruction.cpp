#include "lieverify/obstruction.hpp"

#include <array>
#include <stdexcept>

#include "lieverify/linalg.hpp"

namespace lieverify {

namespace {

std::vector<Rational> zero_vec(std::size_t n) { return std::vector<Rational>(n, Rational(0)); }

void add_scaled(std::vector<Rational>& acc, const Rational& c, const std::vector<Rational>& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

std::vector<Rational> combine(const Rational& a, const std::vector<Rational>& X,
                              const Rational& b, const std::vector<Rational>& Y) {
    std::vector<Rational> out = zero_vec(X.size());
    add_scaled(out, a, X);
    add_scaled(out, b, Y);
    return out;
}

}  // namespace

Heis7Table heis7_bracket_table() {
    Heis7Table t;
    t.algebra = make_heisH(7);
    const LieAlgebra& g = t.algebra;

    for (const char* label : {"U1_1", "U1_i", "U1_j", "U1_k"})
        t.gens.push_back(g.coord_vector(g.label_index(label)));
    for (std::size_t x = 0; x < 3; ++x) t.zs.push_back(g.bracket(t.gens[0], t.gens[1 + x]));

    // Sign table of [gens[a], gens[b]] over (Z_i, Z_j, Z_k): entry (a, b)
    // holds the coefficient triple for a < b; the rest follows by
    // antisymmetry and is checked explicitly anyway.
    long coeff[4][4][3] = {};
    coeff[0][1][0] = 1;   // [U,   U_i] =  Z_i
    coeff[0][2][1] = 1;   // [U,   U_j] =  Z_j
    coeff[0][3][2] = 1;   // [U,   U_k] =  Z_k
    coeff[1][2][2] = 1;   // [U_i, U_j] =  Z_k
    coeff[1][3][1] = -1;  // [U_i, U_k] = -Z_j
    coeff[2][3][0] = 1;   // [U_j, U_k] =  Z_i
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            for (std::size_t x = 0; x < 3; ++x) coeff[b][a][x] = -coeff[a][b][x];

    t.matches_display = true;
    for (std::size_t a = 0; a < 4 && t.matches_display; ++a) {
        for (std::size_t b = 0; b < 4 && t.matches_display; ++b) {
            std::vector<Rational> expected = zero_vec(g.dim());
            for (std::size_t x = 0; x < 3; ++x)
                if (coeff[a][b][x] != 0) add_scaled(expected, Rational(coeff[a][b][x]), t.zs[x]);
            if (g.bracket(t.gens[a], t.gens[b]) != expected) t.matches_display = false;
        }
    }

    QMat zmat = qmat(g.dim(), 3);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t r = 0; r < g.dim(); ++r) zmat.at(r, x) = t.zs[x][r];
    t.zs_independent = (rank_bareiss(zmat) == 3);

    // The construction stores center vectors as unit coordinates; the
    // table's Z_x are their common rational multiple.
    t.center_rescale = Rational(0);
    const std::size_t zi = g.label_index("Zi"), zj = g.label_index("Zj"), zk = g.label_index("Zk");
    const std::size_t unit_of[3] = {zi, zj, zk};
    bool pure = true;
    for (std::size_t x = 0; x < 3 && pure; ++x)
        for (std::size_t r = 0; r < g.dim(); ++r)
            if (r != unit_of[x] && t.zs[x][r] != 0) pure = false;
    if (pure && t.zs[0][zi] == t.zs[1][zj] && t.zs[1][zj] == t.zs[2][zk])
        t.center_rescale = t.zs[0][zi];

    return t;
}

bool ObstructionReport::pass() const {
    if (!table_ok || !minor_forces_t1_zero || !dimD_contradiction || !semidirect_membership_ok)
        return false;
    if (identity_checks.empty()) return false;
    for (const GridIdentity& c : identity_checks)
        if (!c.pass) return false;
    return true;
}

ObstructionReport obstruction_identities(std::size_t n) {
    if (n < 3) throw std::invalid_argument("obstruction_identities: n must be at least 3");

    ObstructionReport rep;
    rep.n = n;

    Heis7Table table = heis7_bracket_table();
    rep.table_ok = table.ok();
    const LieAlgebra& h7 = table.algebra;

    // Three bracket-image identities in the formal parameters t_1..t_4.  A
    // linear map pinned to f(X_a) = gens[a-1] sends Y_a := t_a X_1 - t_1 X_a
    // to t_a U - t_1 U_x, and the expansion of [f Y_a, f Y_b] uses only
    // bilinearity and the certified pairwise brackets, so the evaluation
    // below covers every such map at once.  Per-variable degree is 2, hence
    // the 3-point-per-variable grid is a complete interpolation proof.
    struct ImageCase {
        const char* id;
        std::size_t a, b;          // source indices of Y_a, Y_b (2..4)
        // coefficient of (t_1 t_a'), (t_1 t_b'), (t_1^2) on (Z_i, Z_j, Z_k)
        long za[3], zb[3], z1[3];
    };
    // Display coefficients: f[Y_2,Y_3] = t_1 t_3 Z_i - t_1 t_2 Z_j + t_1^2 Z_k
    //                       f[Y_2,Y_4] = t_1 t_4 Z_i - t_1 t_2 Z_k - t_1^2 Z_j
    //                       f[Y_3,Y_4] = t_1 t_4 Z_j - t_1 t_3 Z_k + t_1^2 Z_i
    const ImageCase cases[3] = {
        {"f[Y2,Y3]", 2, 3, {0, -1, 0}, {1, 0, 0}, {0, 0, 1}},
        {"f[Y2,Y4]", 2, 4, {0, 0, -1}, {1, 0, 0}, {0, -1, 0}},
        {"f[Y3,Y4]", 3, 4, {0, 0, -1}, {0, 1, 0}, {1, 0, 0}},
    };

    const long grid3[3] = {-1, 0, 1};
    for (const ImageCase& ic : cases) {
        GridIdentity gi;
        gi.id = ic.id;
        gi.points_per_variable = 3;
        gi.degree_bound = 2;
        gi.pass = true;
        for (long t1 : grid3)
            for (long t2 : grid3)
                for (long t3 : grid3)
                    for (long t4 : grid3) {
                        ++gi.grid_points;
                        const long ts[5] = {0, t1, t2, t3, t4};  // 1-based
                        std::vector<Rational> fya =
                            combine(Rational(ts[ic.a]), table.gens[0], Rational(-t1),
                                    table.gens[ic.a - 1]);
                        std::vector<Rational> fyb =
                            combine(Rational(ts[ic.b]), table.gens[0], Rational(-t1),
                                    table.gens[ic.b - 1]);
                        std::vector<Rational> lhs = h7.bracket(fya, fyb);

                        std::vector<Rational> rhs = zero_vec(h7.dim());
                        for (std::size_t x = 0; x < 3; ++x) {
                            Rational c = Rational(ic.za[x]) * Rational(t1) * Rational(ts[ic.a]) +
                                         Rational(ic.zb[x]) * Rational(t1) * Rational(ts[ic.b]) +
                                         Rational(ic.z1[x]) * Rational(t1) * Rational(t1);
                            if (c != 0) add_scaled(rhs, c, table.zs[x]);
                        }
                        if (gi.pass && lhs != rhs) {
                            gi.pass = false;
                            gi.failing_point = {Rational(t1), Rational(t2), Rational(t3),
                                                Rational(t4)};
                        }
                    }
        rep.identity_checks.push_back(std::move(gi));
    }

    // Minor of the image coordinate matrix (rows f[Y_2,Y_4] and f[Y_3,Y_4],
    // columns Z_i and Z_j): det [[t_1 t_4, -t_1^2], [t_1^2, t_1 t_4]].  The
    // factorization t_1^2 (t_1^2 + t_4^2) has degree 4 per variable, so the
    // certifying grid uses 5 points per variable; the factored form is a
    // product of sums of even powers, zero over the reals only when t_1 = 0.
    {
        GridIdentity gi;
        gi.id = "minor-det factors as t1^2 (t1^2 + t4^2)";
        gi.points_per_variable = 5;
        gi.degree_bound = 4;
        gi.pass = true;
        bool positive_off_zero = true;
        const long grid5[5] = {-2, -1, 0, 1, 2};
        for (long t1 : grid5)
            for (long t4 : grid5) {
                ++gi.grid_points;
                QMat minor = qmat(2, 2);
                minor.at(0, 0) = Rational(t1) * Rational(t4);
                minor.at(0, 1) = -Rational(t1) * Rational(t1);
                minor.at(1, 0) = Rational(t1) * Rational(t1);
                minor.at(1, 1) = Rational(t1) * Rational(t4);
                Rational value = det(minor);
                Rational factored =
                    Rational(t1) * Rational(t1) *
                    (Rational(t1) * Rational(t1) + Rational(t4) * Rational(t4));
                Rational expanded = Rational(t1) * Rational(t1) * Rational(t4) * Rational(t4) +
                                    Rational(t1) * Rational(t1) * Rational(t1) * Rational(t1);
                if (gi.pass && (value != factored || value != expanded)) {
                    gi.pass = false;
                    gi.failing_point = {Rational(t1), Rational(t4)};
                }
                if (t1 != 0 && value <= 0) positive_off_zero = false;
            }
        rep.minor_forces_t1_zero = gi.pass && positive_off_zero;
        rep.identity_checks.push_back(std::move(gi));
    }

    // The receiving line is too small: with every t_1 forced to zero the
    // images of [X_1, X_2] and [X_1, X_3] are Z_i and Z_j, both inside the
    // image of [heisC(2n-3), heisC(2n-3)], which is one-dimensional.
    {
        LieAlgebra heis = make_heisC(2 * n - 3);
        const std::size_t derived_dim = heis.derived_subalgebra().dim();
        QMat z2 = qmat(h7.dim(), 2);
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t r = 0; r < h7.dim(); ++r) z2.at(r, x) = table.zs[x][r];
        rep.dimD_contradiction = (derived_dim == 1) && (rank_bareiss(z2) == 2);
    }

    // Source-side bookkeeping: inside u_max(n) the combinations
    // Y_a = t_a X_1 - t_1 X_a lose their component on the distinguished
    // generator t, whatever the components of the X's on the complement,
    // and their pairwise brackets land on the alpha line (the derived line
    // of the complement).  Checked on the full grid with seeded random
    // complement components.
    {
        LieAlgebra u = make_umax(n);
        const std::size_t t_idx = u.label_index("t");
        const std::size_t alpha_idx = u.label_index("alpha");
        std::vector<std::size_t> complement;
        for (std::size_t i = 0; i < u.dim(); ++i)
            if (i != t_idx) complement.push_back(i);

        Rng rng(seed_for(0x0b57ac710ULL, "obstruction-membership"));
        bool ok = true;
        std::vector<Rational> fail_point;
        for (long t1 : grid3)
            for (long t2 : grid3)
                for (long t3 : grid3)
                    for (long t4 : grid3)
                        for (int rep_i = 0; rep_i < 2 && ok; ++rep_i) {
                            const long ts[4] = {t1, t2, t3, t4};
                            std::vector<std::vector<Rational>> X(4, zero_vec(u.dim()));
                            for (std::size_t a = 0; a < 4; ++a) {
                                X[a][t_idx] = Rational(ts[a]);
                                for (std::size_t c : complement)
                                    X[a][c] = Rational(rng.range(-2, 2));
                            }
                            std::vector<std::vector<Rational>> Y;
                            for (std::size_t a = 1; a < 4; ++a)
                                Y.push_back(combine(Rational(ts[a]), X[0], Rational(-t1), X[a]));
                            for (const auto& y : Y)
                                if (y[t_idx] != 0) ok = false;
                            for (std::size_t a = 0; a < Y.size() && ok; ++a)
                                for (std::size_t b = a + 1; b < Y.size() && ok; ++b) {
                                    std::vector<Rational> br = u.bracket(Y[a], Y[b]);
                                    for (std::size_t r = 0; r < br.size(); ++r)
                                        if (r != alpha_idx && br[r] != 0) ok = false;
                                }
                            if (!ok && fail_point.empty())
                                fail_point = {Rational(t1), Rational(t2), Rational(t3),
                                              Rational(t4)};
                        }
        rep.semidirect_membership_ok = ok;
        rep.splitting_note =
            "complement of the t line fixed by the constructor basis order: "
            "u_1..u_{n-2}, v_1..v_{n-2}, alpha";

        GridIdentity gi;
        gi.id = "Y_a drop into the complement and bracket into the alpha line";
        gi.grid_points = 81 * 2;
        gi.points_per_variable = 3;
        gi.degree_bound = 2;
        gi.pass = ok;
        gi.failing_point = std::move(fail_point);
        rep.identity_checks.push_back(std::move(gi));
    }

    return rep;
}

FalsifierReport random_morphism_falsifier(std::size_t n, std::size_t trials,
                                          std::uint64_t seed) {
    FalsifierReport rep;
    rep.n = n;
    rep.trials = trials;
    rep.seed = seed;

    if (trials == 0) {
        rep.vacuous = true;
        rep.warning = "no trials requested; vacuous pass";
        return rep;
    }

    LieAlgebra u = make_umax(n);
    LieAlgebra h7 = make_heisH(7);
    if (u.dim() < 7) {
        rep.vacuous = true;
        rep.warning = "dim u_max(" + std::to_string(n) + ") = " + std::to_string(u.dim()) +
                      " < 7: no sample can reach rank 7; vacuous pass";
        return rep;
    }

    Rng rng(seed);
    const std::size_t attempt_cap = trials * 64;
    std::size_t attempts = 0;
    while (rep.surjective_samples < trials && attempts < attempt_cap) {
        ++attempts;
        QMat M = qmat(7, u.dim());
        for (std::size_t r = 0; r < 7; ++r)
            for (std::size_t c = 0; c < u.dim(); ++c) M.at(r, c) = Rational(rng.range(-3, 3));
        if (rank_bareiss(M) < 7) {
            ++rep.rejected_rank;
            continue;
        }
        ++rep.surjective_samples;
        LinearMap f;
        f.src = &u;
        f.dst = &h7;
        f.matrix = M;
        if (is_lie_morphism(f)) {
            ++rep.counterexamples;
            if (!rep.counterexample) rep.counterexample = M;
        }
    }
    if (rep.surjective_samples < trials)
        rep.warning = "rank-7 sampling exhausted the attempt budget before reaching the "
                      "requested trial count";
    return rep;
}

}  // namespace lieverify
