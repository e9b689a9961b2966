#include "lieverify/matrix.hpp"

namespace lieverify {

QMat qmat_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    QMat m = qmat(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        assert(rows[i].size() == c);
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(rows[i][j]);
    }
    return m;
}

std::vector<Rational> flatten(const SMat& m) {
    std::vector<Rational> v;
    const std::size_t w = m.zero().width();
    v.reserve(m.rows() * m.cols() * w);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t t = 0; t < w; ++t) v.push_back(m.at(i, j).coeff(t));
    return v;
}

std::vector<Rational> flatten(const QMat& m) {
    std::vector<Rational> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

QMat realify(const SMat& m) {
    const ScalarKind k = m.zero().kind();
    const std::size_t w = kind_width(k);
    QMat r = qmat(m.rows() * w, m.cols() * w);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& s = m.at(i, j);
            if (s.is_zero()) continue;
            for (std::size_t v = 0; v < w; ++v) {
                Scalar col = s * Scalar::unit(k, v);
                for (std::size_t u = 0; u < w; ++u) r.at(i * w + u, j * w + v) = col.coeff(u);
            }
        }
    return r;
}

}  // namespace lieverify
