#include "lieverify/families.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "lieverify/linalg.hpp"

namespace lieverify {

Subspace AlgebraModel::part_span(const std::string& name) const {
    Subspace s(alg.dim());
    for (std::size_t i : part(name)) s.add(alg.coord_vector(i));
    return s;
}

const std::vector<std::size_t>& AlgebraModel::part(const std::string& name) const {
    auto it = parts.find(name);
    if (it == parts.end()) throw std::invalid_argument("unknown part: " + name);
    return it->second;
}

namespace {

using Entry = LieAlgebra::SparseEntry;
using EntryMap = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

// Where to read one basis coordinate off a matrix in the span: a single
// designated (row, col) entry and scalar coordinate slot.
struct Read {
    std::size_t row, col, slot;
};

struct SparseBasis {
    std::size_t N = 0;
    ScalarKind kind = ScalarKind::rational;
    std::vector<std::string> labels;
    std::vector<std::vector<Entry>> mats;
    std::vector<Read> readers;

    void push(const std::string& label, std::vector<Entry> entries, Read reader) {
        labels.push_back(label);
        mats.push_back(std::move(entries));
        readers.push_back(reader);
    }

    SMat dense(std::size_t b) const {
        SMat m = smat(N, N, kind);
        for (const auto& e : mats[b]) m.at(e.row, e.col) += e.value;
        return m;
    }
};

void accumulate_product(const std::vector<Entry>& A, const std::vector<Entry>& B, bool negate,
                        EntryMap& out) {
    for (const auto& a : A)
        for (const auto& b : B) {
            if (a.col != b.row) continue;
            Scalar p = a.value * b.value;
            if (negate) p = -p;
            auto [it, inserted] = out.try_emplace({a.row, b.col}, p);
            if (!inserted) it->second += p;
        }
}

const Scalar* map_entry(const EntryMap& m, std::size_t r, std::size_t c) {
    auto it = m.find({r, c});
    return it == m.end() ? nullptr : &it->second;
}

// Builds the structure-constant table of a matrix Lie algebra whose basis
// coordinates can each be read off one designated matrix entry; every
// commutator is reconstructed from the read coordinates and compared entry
// by entry, so a wrong reader or basis matrix cannot slip through.
LieAlgebra build_from_sparse(const std::string& name, const SparseBasis& sb) {
    const std::size_t d = sb.labels.size();
    LieAlgebra g(name, sb.labels);
    for (std::size_t j = 1; j < d; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            EntryMap comm;
            accumulate_product(sb.mats[i], sb.mats[j], false, comm);
            accumulate_product(sb.mats[j], sb.mats[i], true, comm);
            LieAlgebra::Terms terms;
            EntryMap check;
            for (std::size_t b = 0; b < d; ++b) {
                const Read& rd = sb.readers[b];
                const Scalar* e = map_entry(comm, rd.row, rd.col);
                if (!e) continue;
                const Rational c = e->coeff(rd.slot);
                if (rat_is_zero(c)) continue;
                terms.emplace_back(b, c);
                const Scalar cs = Scalar::from_rational(sb.kind, c);
                for (const auto& en : sb.mats[b]) {
                    auto [it, inserted] = check.try_emplace({en.row, en.col}, cs * en.value);
                    if (!inserted) it->second += cs * en.value;
                }
            }
            for (const auto& [pos, val] : comm) {
                const Scalar* rec = map_entry(check, pos.first, pos.second);
                Scalar expect = rec ? *rec : Scalar::zero(sb.kind);
                if (!(val == expect))
                    throw std::logic_error(name + ": commutator escapes the basis span at entry (" +
                                           std::to_string(pos.first) + "," +
                                           std::to_string(pos.second) + ")");
            }
            for (const auto& [pos, val] : check) {
                if (!map_entry(comm, pos.first, pos.second) && !val.is_zero())
                    throw std::logic_error(name + ": reconstruction has spurious entry");
            }
            if (!terms.empty()) g.set_bracket(i, j, std::move(terms));
        }
    std::vector<SMat> dense;
    dense.reserve(d);
    for (std::size_t b = 0; b < d; ++b) dense.push_back(sb.dense(b));
    g.set_realization(std::move(dense));
    return g;
}

void check_form_compatibility(const SparseBasis& sb, const SMat& form, bool traceless) {
    for (std::size_t b = 0; b < sb.labels.size(); ++b) {
        SMat M = sb.dense(b);
        SMat lhs = M.conj_transpose() * form + form * M;
        if (!lhs.is_zero())
            throw std::logic_error("basis element " + sb.labels[b] +
                                   " does not preserve the ambient form");
        if (traceless && !M.trace().is_zero())
            throw std::logic_error("basis element " + sb.labels[b] + " has nonzero trace");
    }
}

const char* unit_suffix(std::size_t slot) {
    static const char* names[4] = {"1", "i", "j", "k"};
    return names[slot];
}

const char* block_suffix(std::size_t slot) {
    static const char* names[4] = {"re", "i", "j", "k"};
    return names[slot];
}

AlgebraModel make_rank1(std::size_t k, ScalarKind kind, const std::string& name) {
    if (k < 2) throw std::invalid_argument(name + " requires k >= 2");
    const std::size_t w = kind_width(kind);
    SparseBasis sb;
    sb.N = k + 1;
    sb.kind = kind;
    const Scalar one = Scalar::one(kind);
    auto u = [&](std::size_t t) { return Scalar::unit(kind, t); };

    AlgebraModel model;
    model.kind = kind;
    model.param = k;
    auto& parts = model.parts;

    // Grading generator: A = E_00 - E_kk, with ad(A) eigenvalue +1 on the
    // column-k root space.
    parts["A"].push_back(sb.labels.size());
    parts["h0"].push_back(sb.labels.size());
    sb.push("A", {{0, 0, one}, {k, k, -one}}, {0, 0, 0});

    // Imaginary diagonal corner generators (the non-real part of the a-slot).
    if (kind == ScalarKind::complex) {
        parts["m"].push_back(sb.labels.size());
        parts["h0"].push_back(sb.labels.size());
        sb.push("S", {{0, 0, u(1)}, {k, k, u(1)}, {1, 1, u(1).scale(Rational(-2))}}, {0, 0, 1});
    } else if (kind == ScalarKind::quaternion) {
        for (std::size_t t = 1; t < w; ++t) {
            parts["m"].push_back(sb.labels.size());
            parts["h0"].push_back(sb.labels.size());
            sb.push(std::string("D") + unit_suffix(t), {{0, 0, u(t)}, {k, k, u(t)}}, {0, 0, t});
        }
    }
    // Imaginary diagonal middle-block generators.
    if (kind == ScalarKind::complex) {
        for (std::size_t l = 2; l < k; ++l) {
            parts["m"].push_back(sb.labels.size());
            parts["h0"].push_back(sb.labels.size());
            sb.push("D" + std::to_string(l), {{l, l, u(1)}, {1, 1, -u(1)}}, {l, l, 1});
        }
    } else if (kind == ScalarKind::quaternion) {
        for (std::size_t l = 1; l < k; ++l)
            for (std::size_t t = 1; t < w; ++t) {
                parts["m"].push_back(sb.labels.size());
                parts["h0"].push_back(sb.labels.size());
                sb.push("D" + std::to_string(l) + unit_suffix(t), {{l, l, u(t)}}, {l, l, t});
            }
    }
    // Off-diagonal middle block (skew / anti-Hermitian), row-major.
    for (std::size_t l = 1; l < k; ++l)
        for (std::size_t l2 = l + 1; l2 < k; ++l2) {
            parts["m"].push_back(sb.labels.size());
            parts["h0"].push_back(sb.labels.size());
            const std::string base = "M" + std::to_string(l) + "_" + std::to_string(l2);
            sb.push(base + "re", {{l, l2, one}, {l2, l, -one}}, {l, l2, 0});
            for (std::size_t t = 1; t < w; ++t) {
                parts["m"].push_back(sb.labels.size());
                parts["h0"].push_back(sb.labels.size());
                sb.push(base + block_suffix(t), {{l, l2, u(t)}, {l2, l, u(t)}}, {l, l2, t});
            }
        }
    // Root space +1: U_{l,s} = s E_{lk} - conj(s) E_{0l}.
    for (std::size_t l = 1; l < k; ++l)
        for (std::size_t t = 0; t < w; ++t) {
            parts["h+1"].push_back(sb.labels.size());
            std::string label = "U" + std::to_string(l);
            if (w > 1) label += std::string("_") + unit_suffix(t);
            sb.push(label, {{l, k, u(t)}, {0, l, -u(t).conj()}}, {l, k, t});
        }
    // Root space -1: V_{l,s} = s E_{l0} - conj(s) E_{kl}.
    for (std::size_t l = 1; l < k; ++l)
        for (std::size_t t = 0; t < w; ++t) {
            parts["h-1"].push_back(sb.labels.size());
            std::string label = "V" + std::to_string(l);
            if (w > 1) label += std::string("_") + unit_suffix(t);
            sb.push(label, {{l, 0, u(t)}, {k, l, -u(t).conj()}}, {l, 0, t});
        }
    // Root spaces +2 / -2 (imaginary corners), absent for the orthogonal case.
    for (std::size_t t = 1; t < w; ++t) {
        parts["h+2"].push_back(sb.labels.size());
        sb.push(std::string("P") + unit_suffix(t), {{0, k, u(t)}}, {0, k, t});
    }
    for (std::size_t t = 1; t < w; ++t) {
        parts["h-2"].push_back(sb.labels.size());
        sb.push(std::string("Q") + unit_suffix(t), {{k, 0, u(t)}}, {k, 0, t});
    }
    parts["m"];   // ensure the key exists even when empty (o(1,2))
    parts["h+2"];
    parts["h-2"];

    // Ambient form: antidiagonal corner 1s, identity middle block.
    SMat J = smat(k + 1, k + 1, kind);
    J.at(0, k) = one;
    J.at(k, 0) = one;
    for (std::size_t l = 1; l < k; ++l) J.at(l, l) = one;
    check_form_compatibility(sb, J, kind == ScalarKind::complex);

    model.alg = build_from_sparse(name, sb);
    model.ambient_form = J;

    // Cartan involution X -> -X^*: negates A, fixes the compact part,
    // swaps U_{l,s} with V_{l,s} and P_s with Q_s.
    const std::size_t d = model.alg.dim();
    QMat theta = qmat(d, d);
    theta.at(parts["A"][0], parts["A"][0]) = -1;
    for (std::size_t idx : parts["m"]) theta.at(idx, idx) = 1;
    for (std::size_t t = 0; t < parts["h+1"].size(); ++t) {
        theta.at(parts["h-1"][t], parts["h+1"][t]) = 1;
        theta.at(parts["h+1"][t], parts["h-1"][t]) = 1;
    }
    for (std::size_t t = 0; t < parts["h+2"].size(); ++t) {
        theta.at(parts["h-2"][t], parts["h+2"][t]) = 1;
        theta.at(parts["h+2"][t], parts["h-2"][t]) = 1;
    }
    model.theta = theta;
    return model;
}

}  // namespace

AlgebraModel make_o1k(std::size_t k) { return make_rank1(k, ScalarKind::rational, "o(1," + std::to_string(k) + ")"); }
AlgebraModel make_su1k(std::size_t k) { return make_rank1(k, ScalarKind::complex, "su(1," + std::to_string(k) + ")"); }
AlgebraModel make_sp1k(std::size_t k) { return make_rank1(k, ScalarKind::quaternion, "sp(1," + std::to_string(k) + ")"); }

LieAlgebra make_orthogonal(const std::string& name, const QMat& form) {
    const std::size_t N = form.rows();
    if (form.cols() != N) throw std::invalid_argument("form must be square");
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (form.at(i, j) != form.at(j, i)) throw std::invalid_argument("form must be symmetric");
    // Solve M^T J + J M = 0 entrywise: unknowns are the N^2 entries of M.
    QMat C = qmat(N * (N + 1) / 2, N * N);
    std::size_t row = 0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j < N; ++j, ++row)
            for (std::size_t a = 0; a < N; ++a) {
                C.at(row, a * N + i) += form.at(a, j);
                C.at(row, a * N + j) += form.at(i, a);
            }
    QMat K = kernel(C);
    std::vector<SMat> mats;
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < K.cols(); ++c) {
        SMat m = smat(N, N, ScalarKind::rational);
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b)
                m.at(a, b) = Scalar::from_rational(ScalarKind::rational, K.at(a * N + b, c));
        mats.push_back(std::move(m));
        labels.push_back("B" + std::to_string(c));
    }
    return algebra_from_realization(name, labels, mats);
}

LieAlgebra make_heisC(std::size_t m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("classical Heisenberg dimension must be odd >= 3");
    const std::size_t r = (m - 1) / 2;
    std::vector<std::string> labels;
    for (std::size_t l = 1; l <= r; ++l) labels.push_back("X" + std::to_string(l));
    for (std::size_t l = 1; l <= r; ++l) labels.push_back("Y" + std::to_string(l));
    labels.push_back("Z");
    LieAlgebra g("heisC(" + std::to_string(m) + ")", labels);
    // omega(u, v) = -2 Im <u, v> on C^r gives [X_l, Y_l] = -2 Z.
    for (std::size_t l = 0; l < r; ++l) g.add_term(l, r + l, m - 1, Rational(-2));
    std::vector<std::size_t> complement(m - 1), center{m - 1};
    for (std::size_t i = 0; i + 1 < m; ++i) complement[i] = i;
    g.set_realization(two_step_realization(g, complement, center));
    return g;
}

LieAlgebra make_heisH(std::size_t m) {
    if (m < 7 || m % 4 != 3) throw std::invalid_argument("quaternionic Heisenberg dimension must be 4r+3 >= 7");
    const std::size_t r = (m - 3) / 4;
    std::vector<std::string> labels;
    for (std::size_t l = 1; l <= r; ++l)
        for (std::size_t t = 0; t < 4; ++t)
            labels.push_back("U" + std::to_string(l) + "_" + unit_suffix(t));
    labels.push_back("Zi");
    labels.push_back("Zj");
    labels.push_back("Zk");
    LieAlgebra g("heisH(" + std::to_string(m) + ")", labels);
    // omega(u, v) = sum_l (u_l conj(v_l) - v_l conj(u_l)), valued in Im H.
    for (std::size_t l = 0; l < r; ++l)
        for (std::size_t s = 0; s < 4; ++s)
            for (std::size_t t = s + 1; t < 4; ++t) {
                const Scalar a = Scalar::unit(ScalarKind::quaternion, s);
                const Scalar b = Scalar::unit(ScalarKind::quaternion, t);
                const Scalar w = a * b.conj() - b * a.conj();
                LieAlgebra::Terms terms;
                for (std::size_t x = 1; x < 4; ++x)
                    if (!rat_is_zero(w.coeff(x))) terms.emplace_back(4 * r + (x - 1), w.coeff(x));
                if (!terms.empty()) g.set_bracket(4 * l + s, 4 * l + t, std::move(terms));
            }
    std::vector<std::size_t> complement(4 * r), center{4 * r, 4 * r + 1, 4 * r + 2};
    for (std::size_t i = 0; i < 4 * r; ++i) complement[i] = i;
    g.set_realization(two_step_realization(g, complement, center));
    return g;
}

AlgebraModel make_o2n(std::size_t n) {
    if (n < 3) throw std::invalid_argument("o(2,n) coordinates require n >= 3");
    const std::size_t N = n + 2;
    const std::size_t d = n - 2;  // middle letters per family
    SparseBasis sb;
    sb.N = N;
    sb.kind = ScalarKind::rational;
    const Scalar one = Scalar::one(ScalarKind::rational);

    AlgebraModel model;
    model.kind = ScalarKind::rational;
    model.param = n;
    auto& parts = model.parts;
    auto push_part = [&](const std::string& part, const std::string& label,
                         std::vector<Entry> entries, Read rd) {
        parts[part].push_back(sb.labels.size());
        sb.push(label, std::move(entries), rd);
    };

    // Parabolic block first (c = z_i = beta = 0), complement letters last.
    push_part("Ea", "Ea", {{0, 0, one}, {n + 1, n + 1, -one}}, {0, 0, 0});
    push_part("Eb", "Eb", {{0, 1, one}, {n, n + 1, -one}}, {0, 1, 0});
    push_part("Ed", "Ed", {{1, 1, one}, {n, n, -one}}, {1, 1, 0});
    push_part("Ealpha", "Ealpha", {{0, n, one}, {1, n + 1, -one}}, {0, n, 0});
    for (std::size_t i = 1; i <= d; ++i)
        push_part("U", "U" + std::to_string(i), {{0, 1 + i, one}, {1 + i, n + 1, -one}},
                  {0, 1 + i, 0});
    for (std::size_t i = 1; i <= d; ++i)
        push_part("V", "V" + std::to_string(i), {{1, 1 + i, one}, {1 + i, n, -one}}, {1, 1 + i, 0});
    for (std::size_t i = 1; i <= d; ++i)
        push_part("W", "W" + std::to_string(i), {{n, 1 + i, one}, {1 + i, 1, -one}}, {n, 1 + i, 0});
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = i + 1; j <= d; ++j)
            push_part("Ablock", "A" + std::to_string(i) + "_" + std::to_string(j),
                      {{1 + i, 1 + j, one}, {1 + j, 1 + i, -one}}, {1 + i, 1 + j, 0});
    const std::size_t p_dim = sb.labels.size();
    push_part("Ec", "Ec", {{1, 0, one}, {n + 1, n, -one}}, {1, 0, 0});
    for (std::size_t i = 1; i <= d; ++i)
        push_part("Z", "Z" + std::to_string(i), {{n + 1, 1 + i, one}, {1 + i, 0, -one}},
                  {n + 1, 1 + i, 0});
    push_part("Ebeta", "Ebeta", {{n, 0, one}, {n + 1, 1, -one}}, {n, 0, 0});
    parts["U"];
    parts["V"];
    parts["W"];
    parts["Z"];
    parts["Ablock"];
    for (std::size_t i = 0; i < p_dim; ++i) parts["p"].push_back(i);
    for (std::size_t i = p_dim; i < sb.labels.size(); ++i) parts["complement"].push_back(i);
    parts["umax"] = {parts["Eb"][0]};
    for (std::size_t i : parts["U"]) parts["umax"].push_back(i);
    for (std::size_t i : parts["V"]) parts["umax"].push_back(i);
    parts["umax"].push_back(parts["Ealpha"][0]);

    // Gram matrix of 2 x_1 x_{n+2} + 2 x_2 x_{n+1} + x_3^2 + ... + x_n^2.
    SMat Q = smat(N, N, ScalarKind::rational);
    Q.at(0, n + 1) = one;
    Q.at(n + 1, 0) = one;
    Q.at(1, n) = one;
    Q.at(n, 1) = one;
    for (std::size_t t = 2; t <= n - 1; ++t) Q.at(t, t) = one;
    check_form_compatibility(sb, Q, false);

    model.alg = build_from_sparse("o(2," + std::to_string(n) + ")", sb);
    model.ambient_form = Q;
    return model;
}

LieAlgebra make_parabolic(std::size_t n) {
    AlgebraModel m = make_o2n(n);
    return coordinate_subalgebra(m.alg, m.part("p"), "parabolic(" + std::to_string(n) + ")");
}

LieAlgebra make_umax(std::size_t n) {
    if (n < 3) throw std::invalid_argument("u_max requires n >= 3");
    const std::size_t N = n + 2;
    const std::size_t d = n - 2;
    SparseBasis sb;
    sb.N = N;
    sb.kind = ScalarKind::rational;
    const Scalar one = Scalar::one(ScalarKind::rational);
    sb.push("t", {{0, 1, one}, {n, n + 1, -one}}, {0, 1, 0});
    for (std::size_t i = 1; i <= d; ++i)
        sb.push("u" + std::to_string(i), {{0, 1 + i, one}, {1 + i, n + 1, -one}}, {0, 1 + i, 0});
    for (std::size_t i = 1; i <= d; ++i)
        sb.push("v" + std::to_string(i), {{1, 1 + i, one}, {1 + i, n, -one}}, {1, 1 + i, 0});
    sb.push("alpha", {{0, n, one}, {1, n + 1, -one}}, {0, n, 0});
    return build_from_sparse("u_max(" + std::to_string(n) + ")", sb);
}

LieAlgebra make_f4_nilradical() {
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < 8; ++a) labels.push_back("x" + std::to_string(a));
    for (std::size_t t = 1; t < 8; ++t) labels.push_back("s" + std::to_string(t));
    LieAlgebra g("f4_nilradical", labels);
    // [x, y] = x conj(y) - y conj(x) = 2 Im(x conj(y)), landing in the
    // central imaginary summand.
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = a + 1; b < 8; ++b) {
            const Scalar ea = Scalar::unit(ScalarKind::octonion, a);
            const Scalar eb = Scalar::unit(ScalarKind::octonion, b);
            const Scalar w = ea * eb.conj() - eb * ea.conj();
            if (!rat_is_zero(w.coeff(0))) throw std::logic_error("octonion bracket has a real part");
            LieAlgebra::Terms terms;
            for (std::size_t t = 1; t < 8; ++t)
                if (!rat_is_zero(w.coeff(t))) terms.emplace_back(8 + (t - 1), w.coeff(t));
            if (!terms.empty()) g.set_bracket(a, b, std::move(terms));
        }
    std::vector<std::size_t> complement(8), center(7);
    for (std::size_t i = 0; i < 8; ++i) complement[i] = i;
    for (std::size_t i = 0; i < 7; ++i) center[i] = 8 + i;
    g.set_realization(two_step_realization(g, complement, center));
    return g;
}

LieAlgebra coordinate_subalgebra(const LieAlgebra& g, const std::vector<std::size_t>& indices,
                                 const std::string& name) {
    std::vector<std::size_t> pos(g.dim(), g.dim());
    for (std::size_t t = 0; t < indices.size(); ++t) pos[indices[t]] = t;
    std::vector<std::string> labels;
    for (std::size_t i : indices) labels.push_back(g.labels()[i]);
    LieAlgebra sub(name, labels);
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            LieAlgebra::Terms terms;
            for (const auto& [k, c] : g.basis_bracket(indices[a], indices[b])) {
                if (pos[k] == g.dim())
                    throw std::invalid_argument(name + ": coordinate subspace is not bracket-closed");
                terms.emplace_back(pos[k], c);
            }
            if (!terms.empty()) sub.set_bracket(a, b, std::move(terms));
        }
    if (g.realization()) {
        std::vector<SMat> mats;
        for (std::size_t i : indices) mats.push_back((*g.realization())[i]);
        sub.set_realization(std::move(mats));
    }
    return sub;
}

std::vector<SMat> two_step_realization(const LieAlgebra& g,
                                       const std::vector<std::size_t>& complement,
                                       const std::vector<std::size_t>& center) {
    const std::size_t nc = complement.size(), nz = center.size();
    if (nc + nz != g.dim()) throw std::invalid_argument("complement + center must partition the basis");
    std::vector<std::size_t> zpos(g.dim(), g.dim());
    for (std::size_t t = 0; t < nz; ++t) zpos[center[t]] = t;
    std::vector<std::size_t> cpos(g.dim(), g.dim());
    for (std::size_t t = 0; t < nc; ++t) cpos[complement[t]] = t;
    // Validate: center elements are central; complement brackets land in the center.
    for (std::size_t z : center)
        for (std::size_t i = 0; i < g.dim(); ++i)
            if (!g.basis_bracket(z, i).empty())
                throw std::invalid_argument("declared center element is not central");
    const std::size_t N = 1 + nc + nz;
    std::vector<SMat> mats;
    const Scalar one = Scalar::one(ScalarKind::rational);
    for (std::size_t b = 0; b < g.dim(); ++b) {
        SMat m = smat(N, N, ScalarKind::rational);
        if (zpos[b] < nz) {
            m.at(1 + nc + zpos[b], 0) = one;
        } else {
            m.at(1 + cpos[b], 0) = one;
            for (std::size_t q = 0; q < nc; ++q) {
                for (const auto& [k, c] : g.basis_bracket(b, complement[q])) {
                    if (zpos[k] == g.dim())
                        throw std::invalid_argument("bracket escapes the declared center");
                    m.at(1 + nc + zpos[k], 1 + q) += Scalar::from_rational(ScalarKind::rational, c / 2);
                }
            }
        }
        mats.push_back(std::move(m));
    }
    return mats;
}

LieAlgebra make_algebra(const std::string& family, std::size_t param) {
    if (family == "o1k") return make_o1k(param).alg;
    if (family == "su1k") return make_su1k(param).alg;
    if (family == "sp1k") return make_sp1k(param).alg;
    if (family == "heisC") return make_heisC(param);
    if (family == "heisH") return make_heisH(param);
    if (family == "o2n") return make_o2n(param).alg;
    if (family == "parabolic") return make_parabolic(param);
    if (family == "umax") return make_umax(param);
    if (family == "f4_nilradical") return make_f4_nilradical();
    throw std::invalid_argument("unknown family: " + family);
}

}  // namespace lieverify
