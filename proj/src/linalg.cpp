#include "lieverify/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace lieverify {

std::size_t rank_bareiss(const QMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    // Clear denominators row by row; rank is unchanged by row scaling.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            Integer d = m.at(i, j).get_den();
            l = lcm(l, d);
        }
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j) * Rational(l);
    }
    // Fraction-free elimination: entries stay integral, divisions are exact.
    Rational prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!rat_is_zero(a[i][c])) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        if (sel != r) std::swap(a[sel], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

QMat kernel(const QMat& m) {
    QMat r = m;
    std::vector<std::size_t> pivots;
    rref_inplace(r, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMat k = qmat(m.cols(), free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        const std::size_t fc = free_cols[f];
        k.at(fc, f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) k.at(pivots[i], f) = -r.at(i, fc);
    }
    return k;
}

std::optional<QMat> solve(const QMat& A, const QMat& B) {
    assert(A.rows() == B.rows());
    QMat aug = hcat(A, B);
    std::vector<std::size_t> pivots;
    rref_inplace(aug, &pivots);
    for (std::size_t p : pivots)
        if (p >= A.cols()) return std::nullopt;
    QMat X = qmat(A.cols(), B.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) X.at(pivots[i], j) = aug.at(i, A.cols() + j);
    return X;
}

std::optional<QMat> inverse(const QMat& m) {
    assert(m.rows() == m.cols());
    return solve(m, qident(m.rows()));
}

Rational det(const QMat& m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    QMat a = m;
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = n;
        for (std::size_t i = c; i < n; ++i)
            if (!rat_is_zero(a.at(i, c))) {
                sel = i;
                break;
            }
        if (sel == n) return Rational(0);
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        const Rational pinv = Rational(1) / a.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (rat_is_zero(a.at(i, c))) continue;
            const Rational f = a.at(i, c) * pinv;
            for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return d;
}

Signature signature(const QMat& sym) {
    assert(sym.rows() == sym.cols());
    const std::size_t n = sym.rows();
    QMat a = sym;
    Signature s;
    for (std::size_t k = 0; k < n; ++k) {
        if (rat_is_zero(a.at(k, k))) {
            // Prefer swapping in a later nonzero diagonal entry.
            std::size_t sel = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!rat_is_zero(a.at(i, i))) {
                    sel = i;
                    break;
                }
            if (sel < n) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(sel, j));
                for (std::size_t j = 0; j < n; ++j) std::swap(a.at(j, k), a.at(j, sel));
            } else {
                // All trailing diagonal entries vanish; adding a row/column
                // with a[t][k] != 0 makes the new corner 2 a[t][k] != 0.
                std::size_t t = n;
                for (std::size_t i = k + 1; i < n; ++i)
                    if (!rat_is_zero(a.at(i, k))) {
                        t = i;
                        break;
                    }
                if (t == n) {
                    ++s.zero;
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) a.at(k, j) += a.at(t, j);
                for (std::size_t j = 0; j < n; ++j) a.at(j, k) += a.at(j, t);
            }
        }
        const Rational p = a.at(k, k);
        if (sgn(p.get_num()) > 0)
            ++s.pos;
        else
            ++s.neg;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (rat_is_zero(a.at(i, k))) continue;
            const Rational f = a.at(i, k) / p;
            for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            for (std::size_t j = k; j < n; ++j) a.at(j, i) -= f * a.at(j, k);
        }
    }
    return s;
}

EigenSplit eigenspace_split(const QMat& A, const std::vector<Rational>& lambdas) {
    assert(A.rows() == A.cols());
    const std::size_t n = A.rows();
    EigenSplit out;
    out.lambdas = lambdas;
    RowSpan joint(n);
    std::size_t added = 0;
    for (const Rational& l : lambdas) {
        QMat shifted = A;
        for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) -= l;
        QMat k = kernel(shifted);
        out.dims.push_back(k.cols());
        out.total += k.cols();
        for (std::size_t c = 0; c < k.cols(); ++c) {
            std::vector<Rational> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = k.at(i, c);
            if (joint.add(std::move(v))) ++added;
        }
        out.kernels.push_back(std::move(k));
    }
    out.independent = (added == out.total);
    out.spans = out.independent && out.total == n;
    return out;
}

void RowSpan::reduce(std::vector<Rational>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = v[pivots_[i]];
        if (rat_is_zero(c)) continue;
        const Rational f = c;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j) v[j] -= f * rows_[i][j];
    }
}

bool RowSpan::add(std::vector<Rational> v) {
    assert(v.size() == ambient_);
    reduce(v);
    std::size_t p = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j)
        if (!rat_is_zero(v[j])) {
            p = j;
            break;
        }
    if (p == ambient_) return false;
    const Rational pinv = Rational(1) / v[p];
    for (std::size_t j = p; j < ambient_; ++j) v[j] *= pinv;
    // Back-reduce the existing rows so the family stays fully reduced.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational c = rows_[i][p];
        if (rat_is_zero(c)) continue;
        for (std::size_t j = p; j < ambient_; ++j) rows_[i][j] -= c * v[j];
    }
    const auto ins = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + ins, p);
    rows_.insert(rows_.begin() + ins, std::move(v));
    return true;
}

bool RowSpan::contains(std::vector<Rational> v) const {
    assert(v.size() == ambient_);
    reduce(v);
    for (const Rational& x : v)
        if (!rat_is_zero(x)) return false;
    return true;
}

QMat RowSpan::basis_rows() const {
    QMat m = qmat(rows_.size(), ambient_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) m.at(i, j) = rows_[i][j];
    return m;
}

std::optional<std::vector<Rational>> coordinates_in(const QMat& B, const std::vector<Rational>& v) {
    auto x = solve(B, column(v));
    if (!x) return std::nullopt;
    return to_vector(*x);
}

QMat column(const std::vector<Rational>& v) {
    QMat c = qmat(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) c.at(i, 0) = v[i];
    return c;
}

std::vector<Rational> to_vector(const QMat& col) {
    assert(col.cols() == 1);
    std::vector<Rational> v(col.rows());
    for (std::size_t i = 0; i < col.rows(); ++i) v[i] = col.at(i, 0);
    return v;
}

}  // namespace lieverify
