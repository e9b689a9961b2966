#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieverify/matrix.hpp"

namespace lieverify {

// In-place reduced row echelon form over a division ring (left row
// operations, pivots normalized to 1).  Returns the rank; if `pivots` is
// given it receives the pivot column indices in order.
template <class E>
std::size_t rref_inplace(Mat<E>& m, std::vector<std::size_t>* pivots = nullptr) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    if (pivots) pivots->clear();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!ent_is_zero(m.at(i, c))) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        const E pinv = ent_inv(m.at(r, c));
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) = pinv * m.at(r, j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || ent_is_zero(m.at(i, c))) continue;
            const E f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

template <class E>
std::size_t rank(const Mat<E>& m) {
    Mat<E> copy = m;
    return rref_inplace(copy);
}

// Rank of a rational matrix by fraction-free elimination over the integers
// (denominators cleared per row first).  Faster than plain Gauss on large
// matrices because intermediate entries stay integral with bounded growth.
std::size_t rank_bareiss(const QMat& m);

// Columns spanning the right null space { x : m x = 0 }, in the canonical
// order induced by the free columns of the reduced echelon form.
QMat kernel(const QMat& m);

// One solution of A X = B, if any.
std::optional<QMat> solve(const QMat& A, const QMat& B);

std::optional<QMat> inverse(const QMat& m);

Rational det(const QMat& m);

struct Signature {
    std::size_t pos = 0, neg = 0, zero = 0;
    bool operator==(const Signature&) const = default;
};

// Inertia of a symmetric rational matrix via exact congruence
// diagonalization.  pos + neg + zero equals the size.
Signature signature(const QMat& sym);

struct EigenSplit {
    std::vector<Rational> lambdas;
    std::vector<QMat> kernels;       // kernels[i]: columns span ker(A - lambda_i I)
    std::vector<std::size_t> dims;   // dims[i] = kernels[i].cols()
    std::size_t total = 0;           // sum of dims
    bool independent = false;        // the union of the kernel bases is independent
    bool spans = false;              // independent and total == dimension of the space
};

// Kernel of (A - lambda I) for each candidate eigenvalue, plus whether the
// eigenvectors found are jointly independent and span the whole space.
EigenSplit eigenspace_split(const QMat& A, const std::vector<Rational>& lambdas);

// Incrementally maintained row space of rational vectors in reduced echelon
// form.  add() reports whether the vector enlarged the space; this is the
// workhorse for closure and spinning computations.
class RowSpan {
public:
    explicit RowSpan(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool add(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;
    bool is_full() const { return dim() == ambient_; }

    QMat basis_rows() const;

private:
    void reduce(std::vector<Rational>& v) const;
    std::size_t ambient_;
    std::vector<std::vector<Rational>> rows_;    // reduced echelon rows
    std::vector<std::size_t> pivots_;            // pivot column of each row
};

// Coordinates of v in the columns of B (columns must be independent);
// nullopt when v lies outside their span.
std::optional<std::vector<Rational>> coordinates_in(const QMat& B, const std::vector<Rational>& v);

QMat column(const std::vector<Rational>& v);
std::vector<Rational> to_vector(const QMat& col);

}  // namespace lieverify
