#include "lieverify/subspace.hpp"

namespace lieverify {

Subspace Subspace::span_of(std::size_t ambient, const std::vector<std::vector<Rational>>& vecs) {
    Subspace s(ambient);
    for (const auto& v : vecs) s.add(v);
    return s;
}

Subspace Subspace::span_rows(const QMat& rows) {
    Subspace s(rows.cols());
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        std::vector<Rational> v(rows.cols());
        for (std::size_t j = 0; j < rows.cols(); ++j) v[j] = rows.at(i, j);
        s.add(std::move(v));
    }
    return s;
}

Subspace Subspace::span_cols(const QMat& cols) { return span_rows(cols.transpose()); }

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        std::vector<Rational> e(ambient, Rational(0));
        e[i] = 1;
        s.add(std::move(e));
    }
    return s;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis())
        if (!contains(v)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient() == o.ambient() && span_.rows() == o.span_.rows();
}

Subspace Subspace::sum(const Subspace& o) const {
    Subspace s = *this;
    for (const auto& v : o.basis()) s.add(v);
    return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
    // v lies in both row spaces iff v = a^T U = b^T W for coefficient
    // vectors (a, b) in the kernel of [U^T | -W^T].
    const QMat U = basis_rows(), W = o.basis_rows();
    const std::size_t n = ambient();
    if (dim() == 0 || o.dim() == 0) return Subspace(n);
    QMat A = hcat(U.transpose(), -W.transpose());
    QMat K = kernel(A);
    Subspace s(n);
    for (std::size_t c = 0; c < K.cols(); ++c) {
        std::vector<Rational> v(n, Rational(0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < dim(); ++i) v[j] += U.at(i, j) * K.at(i, c);
        s.add(std::move(v));
    }
    return s;
}

}  // namespace lieverify
