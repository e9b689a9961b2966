#include "lieverify/root_data.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lieverify {

namespace {

using Terms = LieAlgebra::Terms;

Terms nonzeros(const std::vector<Rational>& v) {
    Terms out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!rat_is_zero(v[i])) out.emplace_back(i, v[i]);
    return out;
}

// Bilinear bracket of two sparse coordinate vectors.
std::vector<Rational> sparse_bracket(const LieAlgebra& g, const Terms& a,
                                     const Terms& b) {
    std::vector<Rational> acc(g.dim(), Rational(0));
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) {
            if (i == j) continue;
            const Rational c = ci * cj;
            for (const auto& [t, s] : g.basis_bracket(i, j)) acc[t] += c * s;
        }
    return acc;
}

std::vector<Rational> mat_apply(const QMat& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!rat_is_zero(m.at(r, c)) && !rat_is_zero(v[c]))
                out[r] += m.at(r, c) * v[c];
    return out;
}

std::vector<Rational> scaled(const std::vector<Rational>& v, const Rational& c) {
    std::vector<Rational> out(v);
    for (auto& x : out) x *= c;
    return out;
}

void add_scaled(std::vector<Rational>& acc, const std::vector<Rational>& v,
                const Rational& c) {
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!rat_is_zero(x)) return false;
    return true;
}

// Sparse columns of theta (it is a signed basis permutation for the adapted
// models, but nothing here depends on that).
std::vector<Terms> matrix_columns(const QMat& m) {
    std::vector<Terms> cols(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!rat_is_zero(m.at(r, c))) cols[c].emplace_back(r, m.at(r, c));
    return cols;
}

const std::map<long, std::string> kRootParts = {
    {-2, "h-2"}, {-1, "h-1"}, {0, "h0"}, {1, "h+1"}, {2, "h+2"}};

}  // namespace

CartanData cartan_data(const AlgebraModel& m) {
    if (!m.theta) throw std::invalid_argument("model carries no involution");
    CartanData cd;
    cd.a_index = m.part("A").at(0);
    cd.theta = *m.theta;
    Subspace a_span(m.alg.dim());
    std::vector<Rational> e(m.alg.dim(), Rational(0));
    e[cd.a_index] = 1;
    a_span.add(e);
    cd.cartan_subspace = a_span;
    return cd;
}

bool theta_checks(const AlgebraModel& m, const CartanData& cd, std::string* why) {
    const LieAlgebra& g = m.alg;
    const std::size_t n = g.dim();
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (cd.theta.rows() != n || cd.theta.cols() != n)
        return fail("involution matrix has the wrong size");

    const QMat theta2 = cd.theta * cd.theta;
    if (!(theta2 == qident(n))) return fail("not an involution");

    const auto cols = matrix_columns(cd.theta);

    // Automorphism on all basis pairs: theta[e_i,e_j] == [theta e_i, theta e_j].
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Rational> lhs(n, Rational(0));
            for (const auto& [t, c] : g.basis_bracket(i, j))
                for (const auto& [r, s] : cols[t]) lhs[r] += c * s;
            std::vector<Rational> rhs = sparse_bracket(g, cols[i], cols[j]);
            for (std::size_t t = 0; t < n; ++t)
                if (lhs[t] != rhs[t]) {
                    std::ostringstream os;
                    os << "automorphism defect on basis pair (" << g.labels()[i]
                       << ", " << g.labels()[j] << ")";
                    return fail(os.str());
                }
        }

    // Realization action: theta(e_i) realizes to -(B_i)^*.
    const auto& sparse = g.realization_sparse();
    for (std::size_t i = 0; i < n; ++i) {
        std::map<std::pair<std::size_t, std::size_t>, Scalar> expect;
        for (const auto& e : sparse[i]) {
            Scalar v = ent_conj(e.value);
            v = v.scale(Rational(-1));
            auto key = std::make_pair(e.col, e.row);
            auto it = expect.find(key);
            if (it == expect.end())
                expect.emplace(key, v);
            else
                it->second = it->second + v;
        }
        std::map<std::pair<std::size_t, std::size_t>, Scalar> got;
        for (const auto& [a, s] : cols[i])
            for (const auto& e : sparse[a]) {
                Scalar v = e.value.scale(s);
                auto key = std::make_pair(e.row, e.col);
                auto it = got.find(key);
                if (it == got.end())
                    got.emplace(key, v);
                else
                    it->second = it->second + v;
            }
        for (const auto& [key, v] : expect)
            if (!(got.count(key) ? (got[key] + v.scale(Rational(-1))).is_zero()
                                 : v.is_zero()))
                return fail("involution does not act as X -> -X* on " +
                            g.labels()[i]);
        for (const auto& [key, v] : got)
            if (!expect.count(key) && !v.is_zero())
                return fail("involution image has a spurious entry on " +
                            g.labels()[i]);
    }
    return true;
}

RootDecomposition decompose(const AlgebraModel& m, const CartanData& cd) {
    const LieAlgebra& g = m.alg;
    const std::size_t n = g.dim();
    RootDecomposition rd;

    const QMat adA = g.ad_basis(cd.a_index);
    const std::vector<Rational> candidates = {Rational(-2), Rational(-1),
                                              Rational(0), Rational(1),
                                              Rational(2)};
    EigenSplit split = eigenspace_split(adA, candidates);
    rd.spans = split.spans;
    if (!split.spans) rd.failure = "eigenspaces of the grading generator do not span";

    for (std::size_t t = 0; t < split.lambdas.size(); ++t) {
        if (split.dims[t] == 0) continue;
        const long r = static_cast<long>(split.lambdas[t].get_num().get_si());
        rd.roots.push_back(r);
        rd.spaces.emplace(r, Subspace::span_cols(split.kernels[t]));
        rd.dims[r] = split.dims[t];
    }
    std::sort(rd.roots.begin(), rd.roots.end());

    // Compare with the declared index groups and record per-index roots.
    rd.index_roots.assign(n, 0);
    rd.matches_parts = true;
    for (const auto& [r, part] : kRootParts) {
        const auto it = m.parts.find(part);
        const bool have_part = it != m.parts.end() && !it->second.empty();
        const bool have_space = rd.spaces.count(r) > 0;
        if (have_part != have_space) {
            rd.matches_parts = false;
            if (rd.failure.empty())
                rd.failure = "root value " + std::to_string(r) +
                             " does not match the declared grading";
            continue;
        }
        if (!have_part) continue;
        for (std::size_t idx : it->second) rd.index_roots[idx] = r;
        if (m.part_span(part) != rd.spaces.at(r)) {
            rd.matches_parts = false;
            if (rd.failure.empty())
                rd.failure = "eigenspace of root " + std::to_string(r) +
                             " differs from the declared span";
        }
    }

    // g_0 must be the centralizer of A and contain A itself.
    if (rd.spaces.count(0)) {
        const Subspace zero = rd.spaces.at(0);
        rd.zero_is_centralizer =
            zero == Subspace::span_cols(kernel(adA)) &&
            zero.contains(cd.cartan_subspace);
    }
    if (!rd.zero_is_centralizer && rd.failure.empty())
        rd.failure = "zero space is not the centralizer of the grading generator";

    // Grading: brackets of eigenvectors land in the eigenspace of the sum.
    rd.grading_ok = true;
    std::vector<Terms> unit(n);
    for (std::size_t i = 0; i < n; ++i) unit[i].emplace_back(i, Rational(1));
    for (long b : rd.roots)
        for (long c : rd.roots) {
            if (b > c) continue;
            const long sum = b + c;
            const Subspace* target =
                rd.spaces.count(sum) ? &rd.spaces.at(sum) : nullptr;
            for (const auto& u : rd.spaces.at(b).basis())
                for (const auto& v : rd.spaces.at(c).basis()) {
                    std::vector<Rational> w =
                        sparse_bracket(g, nonzeros(u), nonzeros(v));
                    const bool good =
                        target ? target->contains(w) : all_zero(w);
                    if (!good) {
                        rd.grading_ok = false;
                        if (rd.failure.empty())
                            rd.failure = "bracket of roots " + std::to_string(b) +
                                         " and " + std::to_string(c) +
                                         " escapes the grading";
                    }
                }
        }
    return rd;
}

QMat trace_form_gram(const AlgebraModel& m, const CartanData& cd) {
    const LieAlgebra& g = m.alg;
    const std::size_t n = g.dim();
    const auto& sparse = g.realization_sparse();

    // Re Tr(B_i B_t) for all pairs, through the sparse entry lists.
    std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>> maps(n);
    for (std::size_t t = 0; t < n; ++t)
        for (const auto& e : sparse[t]) {
            auto key = std::make_pair(e.row, e.col);
            auto it = maps[t].find(key);
            if (it == maps[t].end())
                maps[t].emplace(key, e.value);
            else
                it->second = it->second + e.value;
        }
    QMat retr = qmat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t) {
            Rational acc(0);
            for (const auto& e : sparse[i]) {
                auto it = maps[t].find(std::make_pair(e.col, e.row));
                if (it == maps[t].end()) continue;
                acc += (e.value * it->second).real();
            }
            retr.at(i, t) = acc;
        }

    const auto cols = matrix_columns(cd.theta);
    QMat gram = qmat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational acc(0);
            for (const auto& [t, s] : cols[j]) acc += retr.at(i, t) * s;
            gram.at(i, j) = acc;
        }
    return gram;
}

TraceFormChecks check_trace_form(const QMat& gram, const RootDecomposition& rd) {
    TraceFormChecks out;
    const std::size_t n = gram.rows();
    out.symmetric = gram == gram.transpose();
    out.inertia = signature(gram);
    out.negative_definite = out.inertia == Signature{0, n, 0};
    out.root_block_diagonal = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rd.root_of(i) != rd.root_of(j) && !rat_is_zero(gram.at(i, j)))
                out.root_block_diagonal = false;
    return out;
}

Rational trace_form_value(const QMat& gram, const std::vector<Rational>& X,
                          const std::vector<Rational>& Y) {
    Rational acc(0);
    for (std::size_t i = 0; i < gram.rows(); ++i) {
        if (rat_is_zero(X[i])) continue;
        Rational row(0);
        for (std::size_t j = 0; j < gram.cols(); ++j)
            if (!rat_is_zero(Y[j])) row += gram.at(i, j) * Y[j];
        acc += X[i] * row;
    }
    return acc;
}

std::vector<QMat> imaginary_structures(const AlgebraModel& m,
                                       const std::string& part) {
    const std::size_t w = kind_width(m.kind);
    const auto& idx = m.part(part);
    std::vector<QMat> out;
    if (w == 1) return out;
    if (idx.size() % w != 0)
        throw std::invalid_argument("part size incompatible with scalar width");
    for (std::size_t s = 1; s < w; ++s) {
        QMat J = qmat(m.alg.dim(), m.alg.dim());
        const Scalar unit_s = Scalar::unit(m.kind, s);
        for (std::size_t grp = 0; grp + w <= idx.size(); grp += w)
            for (std::size_t t = 0; t < w; ++t) {
                // Column of u_t * s in the slot basis of this group.
                const Scalar prod = Scalar::unit(m.kind, t) * unit_s;
                for (std::size_t r = 0; r < w; ++r)
                    if (!rat_is_zero(prod.coeff(r)))
                        J.at(idx[grp + r], idx[grp + t]) = prod.coeff(r);
            }
        out.push_back(std::move(J));
    }
    return out;
}

Sl2Check verify_sl2_identity(const AlgebraModel& m, const CartanData& cd,
                             const QMat& gram,
                             const std::vector<Rational>& X,
                             const std::vector<Rational>& Y,
                             const std::vector<QMat>* structures) {
    const LieAlgebra& g = m.alg;
    Sl2Check out;
    const std::vector<Rational> thetaX = mat_apply(cd.theta, X);
    const std::vector<Rational> inner =
        sparse_bracket(g, nonzeros(Y), nonzeros(thetaX));
    out.lhs = sparse_bracket(g, nonzeros(inner), nonzeros(Y));

    const Rational bXY = trace_form_value(gram, X, Y);
    const Rational bYY = trace_form_value(gram, Y, Y);
    out.rhs = scaled(Y, bXY);
    add_scaled(out.rhs, X, -bYY / 2);
    if (structures)
        for (const QMat& J : *structures) {
            const std::vector<Rational> JX = mat_apply(J, X);
            add_scaled(out.rhs, mat_apply(J, Y), trace_form_value(gram, JX, Y));
        }

    out.defect.resize(out.lhs.size());
    for (std::size_t i = 0; i < out.lhs.size(); ++i)
        out.defect[i] = out.lhs[i] - out.rhs[i];
    out.ok = all_zero(out.defect);
    return out;
}

Sl2SpanReport sl2_spanning_check(const AlgebraModel& m, const CartanData& cd,
                                 const QMat& gram) {
    const LieAlgebra& g = m.alg;
    const std::size_t n = g.dim();
    const auto& idx = m.part("h-1");
    const std::vector<QMat> structures = imaginary_structures(m, "h-1");

    std::vector<std::vector<Rational>> xs, ys;
    for (std::size_t a : idx) {
        std::vector<Rational> e(n, Rational(0));
        e[a] = 1;
        xs.push_back(e);
        ys.push_back(e);
    }
    for (std::size_t s = 0; s < idx.size(); ++s)
        for (std::size_t t = s + 1; t < idx.size(); ++t) {
            std::vector<Rational> e(n, Rational(0));
            e[idx[s]] = 1;
            e[idx[t]] = 1;
            ys.push_back(e);
        }

    Sl2SpanReport rep;
    rep.literal_all = true;
    rep.corrected_all = true;
    rep.defect_is_hermitian_term = true;
    rep.literal_on_real_pairs = true;
    for (const auto& X : xs)
        for (const auto& Y : ys) {
            ++rep.pairs_checked;
            const Sl2Check literal =
                verify_sl2_identity(m, cd, gram, X, Y, nullptr);
            if (!literal.ok) {
                rep.literal_all = false;
                ++rep.literal_failures;
                if (rep.sample_defect.empty()) {
                    rep.sample_defect_X = X;
                    rep.sample_defect_Y = Y;
                    rep.sample_defect = literal.defect;
                }
            }
            // The hermitian completion term, and whether it explains the
            // defect exactly.
            std::vector<Rational> term(n, Rational(0));
            bool real_pair = true;
            for (const QMat& J : structures) {
                const Rational c = trace_form_value(gram, mat_apply(J, X), Y);
                if (!rat_is_zero(c)) real_pair = false;
                add_scaled(term, mat_apply(J, Y), c);
            }
            for (std::size_t i = 0; i < n; ++i)
                if (literal.defect[i] != term[i]) {
                    rep.defect_is_hermitian_term = false;
                    break;
                }
            if (structures.empty()) {
                rep.corrected_all = rep.corrected_all && literal.ok;
            } else {
                const Sl2Check corr =
                    verify_sl2_identity(m, cd, gram, X, Y, &structures);
                rep.corrected_all = rep.corrected_all && corr.ok;
            }
            if (real_pair && !literal.ok) rep.literal_on_real_pairs = false;
        }
    return rep;
}

TrickMechanism trick_mechanism(const AlgebraModel& m, const CartanData& cd,
                               const QMat& gram, const RootDecomposition& rd) {
    const LieAlgebra& g = m.alg;
    const std::size_t n = g.dim();
    TrickMechanism out;

    auto space_or_zero = [&](long r) {
        return rd.spaces.count(r) ? rd.spaces.at(r) : Subspace(n);
    };
    const Subspace minus = space_or_zero(-1), plus = space_or_zero(1);
    const Subspace zero = space_or_zero(0);
    out.h0_is_bracket_of_opposite_roots = g.bracket_span(minus, plus) == zero;
    out.halpha_regenerated = g.bracket_span(zero, plus) == plus;
    out.two_alpha_from_squares =
        g.bracket_span(plus, plus) == space_or_zero(2) &&
        g.bracket_span(minus, minus) == space_or_zero(-2);

    const auto& idx = m.part("h-1");
    const std::vector<QMat> structures = imaginary_structures(m, "h-1");

    // Compatibility of the pairing with the imaginary structures.
    out.j_compatible = true;
    for (const QMat& J : structures) {
        for (std::size_t a : idx)
            for (std::size_t b : idx) {
                // J^2 = -id on the part.
                Rational sq(0);
                for (std::size_t t = 0; t < n; ++t) sq += J.at(a, t) * J.at(t, b);
                if (sq != (a == b ? Rational(-1) : Rational(0)))
                    out.j_compatible = false;
                // B(J e_a, J e_b) = B(e_a, e_b).
                Rational lhs(0);
                for (std::size_t r = 0; r < n; ++r) {
                    if (rat_is_zero(J.at(r, a))) continue;
                    for (std::size_t c = 0; c < n; ++c)
                        if (!rat_is_zero(J.at(c, b)))
                            lhs += J.at(r, a) * gram.at(r, c) * J.at(c, b);
                }
                if (lhs != gram.at(a, b)) out.j_compatible = false;
                // B(J e_a, e_b) antisymmetric in (a, b), so B(JY, Y) = 0.
                Rational ab(0), ba(0);
                for (std::size_t r = 0; r < n; ++r) {
                    if (!rat_is_zero(J.at(r, a))) ab += J.at(r, a) * gram.at(r, b);
                    if (!rat_is_zero(J.at(r, b))) ba += J.at(r, b) * gram.at(r, a);
                }
                if (ab + ba != 0) out.j_compatible = false;
            }
    }

    // Invertibility of X -> [[Y, theta(X)], Y] on the (-1) space, with the
    // determinant matching
    //   det = (B/2) (-3B/2)^c (-B/2)^(d-1-c),   B = B(Y,Y),
    // where c counts the imaginary structures and d the space dimension.
    const std::size_t d = idx.size();
    const std::size_t c = structures.size();
    std::vector<std::vector<Rational>> ys;
    for (std::size_t a : idx) {
        std::vector<Rational> e(n, Rational(0));
        e[a] = 1;
        ys.push_back(e);
    }
    for (std::size_t s = 0; s < idx.size(); ++s)
        for (std::size_t t = s + 1; t < idx.size(); ++t) {
            std::vector<Rational> e(n, Rational(0));
            e[idx[s]] = 1;
            e[idx[t]] = 1;
            ys.push_back(e);
        }
    out.recovery_invertible = true;
    out.determinant_closed_form = true;
    for (const auto& Y : ys) {
        QMat M = qmat(d, d);
        const auto nzY = nonzeros(Y);
        for (std::size_t col = 0; col < d; ++col) {
            std::vector<Rational> X(n, Rational(0));
            X[idx[col]] = 1;
            const std::vector<Rational> thetaX = mat_apply(cd.theta, X);
            const std::vector<Rational> inner =
                sparse_bracket(g, nzY, nonzeros(thetaX));
            const std::vector<Rational> img =
                sparse_bracket(g, nonzeros(inner), nzY);
            for (std::size_t t = 0; t < n; ++t) {
                if (rat_is_zero(img[t])) continue;
                auto pos = std::find(idx.begin(), idx.end(), t);
                if (pos == idx.end())
                    throw std::logic_error(
                        "recovery image escapes the (-1) root space");
                M.at(static_cast<std::size_t>(pos - idx.begin()), col) = img[t];
            }
        }
        ++out.determinants_checked;
        const Rational detM = det(M);
        if (rat_is_zero(detM)) out.recovery_invertible = false;
        const Rational B = trace_form_value(gram, Y, Y);
        Rational expect = B / 2;
        for (std::size_t t = 0; t < c; ++t) expect *= -3 * B / 2;
        for (std::size_t t = 0; t + 1 + c < d; ++t) expect *= -B / 2;
        if (detM != expect) out.determinant_closed_form = false;
    }
    return out;
}

std::vector<QMat> ad_restriction(const AlgebraModel& m,
                                 const std::vector<std::size_t>& actors,
                                 const std::vector<std::size_t>& module) {
    const LieAlgebra& g = m.alg;
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t r = 0; r < module.size(); ++r) pos[module[r]] = r;
    std::vector<QMat> out;
    for (std::size_t a : actors) {
        QMat M = qmat(module.size(), module.size());
        for (std::size_t cidx = 0; cidx < module.size(); ++cidx)
            for (const auto& [t, coeff] : g.basis_bracket(a, module[cidx])) {
                auto it = pos.find(t);
                if (it == pos.end())
                    throw std::invalid_argument(
                        "module span is not invariant under the actors");
                M.at(it->second, cidx) = coeff;
            }
        out.push_back(std::move(M));
    }
    return out;
}

DiagonalProfile ad_diagonal_profile(const AlgebraModel& m, const CartanData& cd,
                                    const RootDecomposition& rd) {
    const LieAlgebra& g = m.alg;
    const std::size_t n = g.dim();
    DiagonalProfile out;
    out.eigenvalue_table =
        std::map<long, std::size_t>(rd.dims.begin(), rd.dims.end());

    // ad(A) multiplies each adapted basis vector by its root value.
    out.scalar_on_each_space = true;
    for (std::size_t t = 0; t < n; ++t) {
        if (t == cd.a_index) continue;
        const long r = rd.root_of(t);
        Terms want;
        if (r != 0) want.emplace_back(t, Rational(r));
        Terms got = g.basis_bracket(cd.a_index, t);
        std::sort(got.begin(), got.end());
        if (got != want) out.scalar_on_each_space = false;
    }

    // Positive-root generators are ad-nilpotent within the grading bound.
    out.nilpotents_ok = true;
    const long top = rd.roots.empty() ? 0 : rd.roots.back();
    for (const std::string& part : {std::string("h+1"), std::string("h+2")}) {
        auto it = m.parts.find(part);
        if (it == m.parts.end()) continue;
        const long step = part == "h+1" ? 1 : 2;
        // Longest chain of root values reachable in increments of `step`.
        const std::size_t bound =
            static_cast<std::size_t>(2 * top / step) + 1;
        for (std::size_t N : it->second) {
            std::vector<Terms> cols(n);
            for (std::size_t t = 0; t < n; ++t) cols[t] = g.basis_bracket(N, t);
            // Apply ad(N) repeatedly to every basis vector, sparsely.
            std::size_t worst = 0;
            for (std::size_t start = 0; start < n; ++start) {
                Terms v = {{start, Rational(1)}};
                std::size_t steps = 0;
                while (!v.empty() && steps <= bound) {
                    std::vector<Rational> acc(n, Rational(0));
                    for (const auto& [i, ci] : v)
                        for (const auto& [j, s] : cols[i]) acc[j] += ci * s;
                    v = nonzeros(acc);
                    ++steps;
                }
                if (!v.empty()) {
                    out.nilpotents_ok = false;
                    break;
                }
                worst = std::max(worst, steps);
            }
            out.nilpotency_degree[g.labels()[N]] = worst;
            if (worst > bound) out.nilpotents_ok = false;
        }
    }
    return out;
}

}  // namespace lieverify
