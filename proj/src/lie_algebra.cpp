#include "lieverify/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lieverify/linalg.hpp"

namespace lieverify {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)), dim_(labels_.size()) {
    table_.resize(dim_ * (dim_ - 1) / 2);
}

std::size_t LieAlgebra::tri(std::size_t i, std::size_t j) const {
    // i < j; pairs ordered (0,1), (0,2), (1,2), (0,3), ...
    return j * (j - 1) / 2 + i;
}

std::size_t LieAlgebra::label_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw std::invalid_argument("unknown basis label: " + label);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, Terms terms) {
    if (i >= j || j >= dim_) throw std::invalid_argument("set_bracket requires i < j < dim");
    table_[tri(i, j)] = std::move(terms);
}

void LieAlgebra::add_term(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (i >= j || j >= dim_ || k >= dim_) throw std::invalid_argument("add_term index range");
    if (rat_is_zero(c)) return;
    table_[tri(i, j)].emplace_back(k, c);
}

void LieAlgebra::set_realization(std::vector<SMat> mats) {
    if (mats.size() != dim_) throw std::invalid_argument("realization size mismatch");
    realization_ = std::move(mats);
    realization_sparse_.clear();
}

const std::vector<std::vector<LieAlgebra::SparseEntry>>& LieAlgebra::realization_sparse() const {
    if (realization_sparse_.empty() && realization_) {
        realization_sparse_.resize(dim_);
        for (std::size_t b = 0; b < dim_; ++b) {
            const SMat& m = (*realization_)[b];
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (!m.at(i, j).is_zero()) realization_sparse_[b].push_back({i, j, m.at(i, j)});
        }
    }
    return realization_sparse_;
}

LieAlgebra::Terms LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    if (i == j) return {};
    if (i < j) return table_[tri(i, j)];
    Terms t = table_[tri(j, i)];
    for (auto& [k, c] : t) c = -c;
    return t;
}

std::vector<Rational> LieAlgebra::basis_bracket_dense(std::size_t i, std::size_t j) const {
    std::vector<Rational> v(dim_, Rational(0));
    for (const auto& [k, c] : basis_bracket(i, j)) v[k] += c;
    return v;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& X,
                                          const std::vector<Rational>& Y) const {
    if (X.size() != dim_ || Y.size() != dim_) throw std::invalid_argument("bracket dimension");
    std::vector<Rational> out(dim_, Rational(0));
    std::size_t idx = 0;
    for (std::size_t j = 1; j < dim_; ++j)
        for (std::size_t i = 0; i < j; ++i, ++idx) {
            const Terms& t = table_[idx];
            if (t.empty()) continue;
            const bool a = !rat_is_zero(X[i]) && !rat_is_zero(Y[j]);
            const bool b = !rat_is_zero(X[j]) && !rat_is_zero(Y[i]);
            if (!a && !b) continue;
            Rational w = X[i] * Y[j] - X[j] * Y[i];
            if (rat_is_zero(w)) continue;
            for (const auto& [k, c] : t) out[k] += w * c;
        }
    return out;
}

QMat LieAlgebra::ad(const std::vector<Rational>& X) const {
    QMat m = qmat(dim_, dim_);
    std::size_t idx = 0;
    for (std::size_t j = 1; j < dim_; ++j)
        for (std::size_t i = 0; i < j; ++i, ++idx) {
            const Terms& t = table_[idx];
            if (t.empty()) continue;
            // [X, e_j] picks up X_i c_{ij}^k; [X, e_i] picks up -X_j c_{ij}^k.
            if (!rat_is_zero(X[i]))
                for (const auto& [k, c] : t) m.at(k, j) += X[i] * c;
            if (!rat_is_zero(X[j]))
                for (const auto& [k, c] : t) m.at(k, i) -= X[j] * c;
        }
    return m;
}

QMat LieAlgebra::ad_basis(std::size_t i) const { return ad(coord_vector(i)); }

std::vector<Rational> LieAlgebra::coord_vector(std::size_t i) const {
    std::vector<Rational> v(dim_, Rational(0));
    v.at(i) = 1;
    return v;
}

SMat LieAlgebra::realize(const std::vector<Rational>& X) const {
    if (!realization_) throw std::logic_error("algebra has no realization");
    const auto& mats = *realization_;
    SMat out = smat(mats[0].rows(), mats[0].cols(), mats[0].zero().kind());
    for (std::size_t i = 0; i < dim_; ++i) {
        if (rat_is_zero(X[i])) continue;
        out = out + mats[i].scale(Scalar::from_rational(out.zero().kind(), X[i]));
    }
    return out;
}

std::optional<LieAlgebra::JacobiDefect> LieAlgebra::jacobi_defect() const {
    std::vector<Rational> scratch(dim_, Rational(0));
    std::vector<std::size_t> touched;
    touched.reserve(dim_);
    auto accumulate = [&](std::size_t a, std::size_t l, const Rational& w) {
        if (a == l) return;
        const bool flip = a > l;
        const Terms& t = table_[flip ? tri(l, a) : tri(a, l)];
        for (const auto& [m, c] : t) {
            if (rat_is_zero(scratch[m])) touched.push_back(m);
            if (flip)
                scratch[m] -= w * c;
            else
                scratch[m] += w * c;
        }
    };
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].
                for (const auto& [l, c] : table_[tri(j, k)]) accumulate(i, l, c);
                for (const auto& [l, c] : table_[tri(i, k)]) accumulate(j, l, -c);
                for (const auto& [l, c] : table_[tri(i, j)]) accumulate(k, l, c);
                bool bad = false;
                for (std::size_t m : touched)
                    if (!rat_is_zero(scratch[m])) {
                        bad = true;
                        break;
                    }
                if (bad) {
                    JacobiDefect d{i, j, k, {}};
                    d.defect.assign(dim_, Rational(0));
                    for (std::size_t m : touched) std::swap(d.defect[m], scratch[m]);
                    return d;
                }
                for (std::size_t m : touched) scratch[m] = 0;
                touched.clear();
            }
    return std::nullopt;
}

namespace {

using EntryMap = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

void sparse_product_into(const std::vector<LieAlgebra::SparseEntry>& A,
                         const std::vector<LieAlgebra::SparseEntry>& B, bool negate,
                         EntryMap& out, ScalarKind kind) {
    for (const auto& a : A)
        for (const auto& b : B) {
            if (a.col != b.row) continue;
            Scalar p = a.value * b.value;
            if (negate) p = -p;
            auto [it, inserted] = out.try_emplace({a.row, b.col}, p);
            if (!inserted) it->second += p;
        }
    (void)kind;
}

}  // namespace

bool LieAlgebra::realization_matches() const {
    if (!realization_) return false;
    const auto& sparse = realization_sparse();
    const ScalarKind kind = (*realization_)[0].zero().kind();
    std::size_t idx = 0;
    for (std::size_t j = 1; j < dim_; ++j)
        for (std::size_t i = 0; i < j; ++i, ++idx) {
            EntryMap diff;
            sparse_product_into(sparse[i], sparse[j], false, diff, kind);
            sparse_product_into(sparse[j], sparse[i], true, diff, kind);
            // Subtract the table's prediction for [e_i, e_j].
            for (const auto& [k, c] : table_[idx]) {
                const Scalar cs = Scalar::from_rational(kind, c);
                for (const auto& e : sparse[k]) {
                    auto [it, inserted] = diff.try_emplace({e.row, e.col}, -(cs * e.value));
                    if (!inserted) it->second -= cs * e.value;
                }
            }
            for (const auto& [pos, val] : diff)
                if (!val.is_zero()) return false;
        }
    return true;
}

Subspace LieAlgebra::derived_subalgebra() const {
    Subspace s(dim_);
    std::size_t idx = 0;
    for (std::size_t j = 1; j < dim_; ++j)
        for (std::size_t i = 0; i < j; ++i, ++idx) {
            if (table_[idx].empty()) continue;
            std::vector<Rational> v(dim_, Rational(0));
            for (const auto& [k, c] : table_[idx]) v[k] += c;
            s.add(std::move(v));
        }
    return s;
}

Subspace LieAlgebra::center() const {
    // Iteratively refine candidates: X central iff [e_j, X] = 0 for all j.
    QMat C = qident(dim_);
    for (std::size_t j = 0; j < dim_ && C.cols() > 0; ++j) {
        QMat A = ad_basis(j) * C;
        if (A.is_zero()) continue;
        QMat K = kernel(A);
        if (K.cols() == C.cols()) continue;
        C = C * K;
    }
    return Subspace::span_cols(C);
}

Subspace LieAlgebra::bracket_span(const Subspace& U, const Subspace& V) const {
    Subspace s(dim_);
    for (const auto& u : U.basis())
        for (const auto& v : V.basis()) s.add(bracket(u, v));
    return s;
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
    std::vector<Subspace> series;
    series.push_back(Subspace::full(dim_));
    while (true) {
        const Subspace& g = series.front();
        const Subspace& prev = series.back();
        Subspace next = bracket_span(g, prev);
        if (next == prev) break;
        series.push_back(next);
        if (series.back().is_zero()) break;
    }
    return series;
}

std::optional<std::size_t> LieAlgebra::nilpotency_degree() const {
    auto series = lower_central_series();
    if (!series.back().is_zero()) return std::nullopt;
    // series = [g^1, ..., g^s, g^{s+1} = 0] -> degree s (g^s != 0).
    return series.size() - 1;
}

LieAlgebra::StructureReport LieAlgebra::structure_report() const {
    StructureReport r{derived_subalgebra(), center(), {}, nilpotency_degree()};
    for (const auto& s : lower_central_series()) r.lower_central_dims.push_back(s.dim());
    return r;
}

Subspace LieAlgebra::subalgebra_closure(const Subspace& seed) const {
    Subspace cur = seed;
    bool grew = true;
    while (grew && !cur.is_full()) {
        grew = false;
        const auto basis = cur.basis();  // copy: cur mutates below
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = a + 1; b < basis.size(); ++b)
                if (cur.add(bracket(basis[a], basis[b]))) grew = true;
    }
    return cur;
}

Subspace LieAlgebra::closure_under_action(const Subspace& seed, const Subspace& actors) const {
    Subspace cur = seed;
    bool grew = true;
    while (grew && !cur.is_full()) {
        grew = false;
        const auto basis = cur.basis();
        for (const auto& a : actors.basis())
            for (const auto& v : basis)
                if (cur.add(bracket(a, v))) grew = true;
    }
    return cur;
}

bool LieAlgebra::is_subalgebra(const Subspace& W) const {
    const auto& basis = W.basis();
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (!W.contains(bracket(basis[a], basis[b]))) return false;
    return true;
}

bool LieAlgebra::is_ideal(const Subspace& W) const {
    for (std::size_t i = 0; i < dim_; ++i) {
        const auto e = coord_vector(i);
        for (const auto& w : W.basis())
            if (!W.contains(bracket(e, w))) return false;
    }
    return true;
}

LieAlgebra LieAlgebra::induced_subalgebra(const std::string& name,
                                          const std::vector<std::vector<Rational>>& basis,
                                          const std::vector<std::string>& labels) const {
    if (basis.size() != labels.size()) throw std::invalid_argument("basis/label count mismatch");
    const std::size_t d = basis.size();
    QMat B = qmat(dim_, d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < dim_; ++r) B.at(r, c) = basis[c][r];
    if (rank_bareiss(B) != d) throw std::invalid_argument("induced basis not independent");
    LieAlgebra sub(name, labels);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            auto w = bracket(basis[i], basis[j]);
            auto coords = coordinates_in(B, w);
            if (!coords) throw std::invalid_argument("subspace not bracket-closed");
            Terms t;
            for (std::size_t k = 0; k < d; ++k)
                if (!rat_is_zero((*coords)[k])) t.emplace_back(k, (*coords)[k]);
            sub.set_bracket(i, j, std::move(t));
        }
    if (realization_) {
        std::vector<SMat> mats;
        mats.reserve(d);
        for (const auto& v : basis) mats.push_back(realize(v));
        sub.set_realization(std::move(mats));
    }
    return sub;
}

std::string LieAlgebra::dump_structure_constants() const {
    std::ostringstream os;
    os << "dim " << dim_ << "\n";
    os << "basis";
    for (const auto& l : labels_) os << " " << l;
    os << "\n";
    for (std::size_t j = 1; j < dim_; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            Terms t = table_[tri(i, j)];
            std::sort(t.begin(), t.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [k, c] : t)
                if (!rat_is_zero(c)) os << i << " " << j << " " << k << " " << rat_str(c) << "\n";
        }
    return os.str();
}

std::vector<Rational> LinearMap::apply(const std::vector<Rational>& x) const {
    std::vector<Rational> y(matrix.rows(), Rational(0));
    for (std::size_t i = 0; i < matrix.rows(); ++i)
        for (std::size_t j = 0; j < matrix.cols(); ++j)
            if (!rat_is_zero(x[j])) y[i] += matrix.at(i, j) * x[j];
    return y;
}

std::optional<MorphismDefect> morphism_defect(const LinearMap& f) {
    const LieAlgebra& src = *f.src;
    const LieAlgebra& dst = *f.dst;
    if (f.matrix.rows() != dst.dim() || f.matrix.cols() != src.dim())
        throw std::invalid_argument("linear map shape mismatch");
    std::vector<std::vector<Rational>> images(src.dim());
    for (std::size_t i = 0; i < src.dim(); ++i) images[i] = f.apply(src.coord_vector(i));
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = i + 1; j < src.dim(); ++j) {
            auto lhs = f.apply(src.basis_bracket_dense(i, j));
            auto rhs = dst.bracket(images[i], images[j]);
            bool equal = true;
            for (std::size_t k = 0; k < dst.dim(); ++k)
                if (lhs[k] != rhs[k]) {
                    equal = false;
                    break;
                }
            if (!equal) {
                MorphismDefect d{i, j, {}};
                d.difference.resize(dst.dim());
                for (std::size_t k = 0; k < dst.dim(); ++k) d.difference[k] = lhs[k] - rhs[k];
                return d;
            }
        }
    return std::nullopt;
}

bool is_lie_morphism(const LinearMap& f) { return !morphism_defect(f).has_value(); }

bool heisenberg_profile(const LieAlgebra& g, std::size_t center_dim, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    Subspace derived = g.derived_subalgebra();
    Subspace center = g.center();
    if (!(derived == center)) return fail("derived subalgebra differs from center");
    if (center.dim() != center_dim)
        return fail("center dimension " + std::to_string(center.dim()) + " != " +
                    std::to_string(center_dim));
    auto deg = g.nilpotency_degree();
    if (!deg || *deg != 2) return fail("nilpotency degree is not 2");
    // Nondegeneracy of the center-valued pairing on g/center: the pairing
    // matrix rows (one per basis element, center coordinates of [e_i, e_j]
    // across j) must have rank dim - center_dim, i.e. radical = center.
    const QMat Z = center.basis_cols();
    QMat R = qmat(g.dim(), g.dim() * center_dim);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            if (i == j) continue;
            auto w = g.basis_bracket_dense(i, j);
            auto coords = coordinates_in(Z, w);
            if (!coords) return fail("bracket image escapes the center");
            for (std::size_t t = 0; t < center_dim; ++t) R.at(i, j * center_dim + t) = (*coords)[t];
        }
    if (rank_bareiss(R) != g.dim() - center_dim)
        return fail("center-valued pairing on the quotient is degenerate");
    if (why) why->clear();
    return true;
}

IsoReport verify_isomorphism(const LinearMap& f, IsoCertify certify) {
    IsoReport r;
    const LieAlgebra& src = *f.src;
    const LieAlgebra& dst = *f.dst;
    if (src.dim() != dst.dim()) throw std::invalid_argument("isomorphism dimension mismatch");
    r.dims_match = true;
    r.bijective = (rank_bareiss(f.matrix) == src.dim());
    if (!r.bijective) r.detail = "map is not bijective";
    r.morphism = is_lie_morphism(f);
    if (!r.morphism && r.detail.empty()) r.detail = "map is not a Lie morphism";
    switch (certify) {
        case IsoCertify::abstract_algebra:
            r.target_profile_ok = true;
            break;
        case IsoCertify::heisC: {
            std::string why;
            r.target_profile_ok = heisenberg_profile(dst, 1, &why);
            if (!r.target_profile_ok && r.detail.empty()) r.detail = "target: " + why;
            break;
        }
        case IsoCertify::heisH: {
            std::string why;
            r.target_profile_ok = heisenberg_profile(dst, 3, &why);
            if (!r.target_profile_ok && r.detail.empty()) r.detail = "target: " + why;
            break;
        }
    }
    r.ok = r.dims_match && r.bijective && r.morphism && r.target_profile_ok;
    return r;
}

LieAlgebra algebra_from_realization(const std::string& name,
                                    const std::vector<std::string>& labels,
                                    const std::vector<SMat>& mats) {
    const std::size_t d = mats.size();
    if (d == 0 || labels.size() != d) throw std::invalid_argument("empty or mismatched basis");
    const std::size_t N = flatten(mats[0]).size();
    QMat B = qmat(N, d);
    for (std::size_t c = 0; c < d; ++c) {
        auto v = flatten(mats[c]);
        for (std::size_t r = 0; r < N; ++r) B.at(r, c) = v[r];
    }
    if (rank_bareiss(B) != d) throw std::invalid_argument("realization matrices are dependent");
    const std::size_t pairs = d * (d - 1) / 2;
    QMat C = qmat(N, pairs);
    std::size_t idx = 0;
    for (std::size_t j = 1; j < d; ++j)
        for (std::size_t i = 0; i < j; ++i, ++idx) {
            auto comm = flatten(mats[i] * mats[j] - mats[j] * mats[i]);
            for (std::size_t r = 0; r < N; ++r) C.at(r, idx) = comm[r];
        }
    auto X = solve(B, C);
    if (!X) throw std::invalid_argument("commutator escapes the span of the basis");
    LieAlgebra g(name, labels);
    idx = 0;
    for (std::size_t j = 1; j < d; ++j)
        for (std::size_t i = 0; i < j; ++i, ++idx) {
            LieAlgebra::Terms t;
            for (std::size_t k = 0; k < d; ++k)
                if (!rat_is_zero(X->at(k, idx))) t.emplace_back(k, X->at(k, idx));
            g.set_bracket(i, j, std::move(t));
        }
    g.set_realization(mats);
    return g;
}

}  // namespace lieverify
