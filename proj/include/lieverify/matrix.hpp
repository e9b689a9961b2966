#pragma once

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

#include "lieverify/rational.hpp"
#include "lieverify/scalar.hpp"

namespace lieverify {

// Entry traits shared by rational- and scalar-entry matrices.
inline bool ent_is_zero(const Rational& x) { return rat_is_zero(x); }
inline bool ent_is_zero(const Scalar& x) { return x.is_zero(); }
inline Rational ent_inv(const Rational& x) { return Rational(1) / x; }
inline Scalar ent_inv(const Scalar& x) { return x.inverse(); }
inline Rational ent_conj(const Rational& x) { return x; }
inline Scalar ent_conj(const Scalar& x) { return x.conj(); }
inline Rational ent_real(const Rational& x) { return x; }
inline Rational ent_real(const Scalar& x) { return x.real(); }
inline std::string ent_str(const Rational& x) { return rat_str(x); }
inline std::string ent_str(const Scalar& x) { return x.str(); }

// Dense matrix with exact entries.  A zero prototype is stored so that
// scalar-entry matrices remember which doubling algebra they live over.
template <class E>
class Mat {
public:
    Mat() : rows_(0), cols_(0), zero_() {}
    Mat(std::size_t r, std::size_t c, const E& zero)
        : rows_(r), cols_(c), a_(r * c, zero), zero_(zero) {}

    static Mat identity(std::size_t n, const E& zero, const E& one) {
        Mat m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const E& zero() const { return zero_; }

    E& at(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }
    const E& at(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!ent_is_zero(x)) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_, zero_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_, zero_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    Mat operator-() const {
        Mat r(rows_, cols_, zero_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }
    Mat operator*(const Mat& o) const {
        assert(cols_ == o.rows_);
        Mat r(rows_, o.cols_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const E& x = at(i, k);
                if (ent_is_zero(x)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const E& y = o.at(k, j);
                    if (ent_is_zero(y)) continue;
                    r.at(i, j) += x * y;
                }
            }
        return r;
    }

    Mat scale(const E& s) const {
        Mat r(rows_, cols_, zero_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = s * a_[i];
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // Conjugate transpose; for rational entries this is the plain transpose.
    Mat conj_transpose() const {
        Mat r(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = ent_conj(at(i, j));
        return r;
    }

    E trace() const {
        assert(rows_ == cols_);
        E t = zero_;
        for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    // Sum of the real parts of the diagonal.
    Rational re_trace() const {
        assert(rows_ == cols_);
        Rational t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += ent_real(at(i, i));
        return t;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            out += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ", ";
                out += ent_str(at(i, j));
            }
            out += "]\n";
        }
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<E> a_;
    E zero_;
};

using QMat = Mat<Rational>;
using SMat = Mat<Scalar>;

inline QMat qmat(std::size_t r, std::size_t c) { return QMat(r, c, Rational(0)); }
inline QMat qident(std::size_t n) { return QMat::identity(n, Rational(0), Rational(1)); }
inline SMat smat(std::size_t r, std::size_t c, ScalarKind k) {
    return SMat(r, c, Scalar::zero(k));
}
inline SMat sident(std::size_t n, ScalarKind k) {
    return SMat::identity(n, Scalar::zero(k), Scalar::one(k));
}

// Builds a matrix row by row from integer literals (test convenience).
QMat qmat_rows(const std::vector<std::vector<long>>& rows);

// Horizontal / vertical concatenation.
template <class E>
Mat<E> hcat(const Mat<E>& a, const Mat<E>& b) {
    assert(a.rows() == b.rows());
    Mat<E> r(a.rows(), a.cols() + b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

template <class E>
Mat<E> vcat(const Mat<E>& a, const Mat<E>& b) {
    assert(a.cols() == b.cols());
    Mat<E> r(a.rows() + b.rows(), a.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

// Column vector of all scalar coordinates of all entries, row-major: turns a
// scalar matrix into a rational vector for rational-linear computations.
std::vector<Rational> flatten(const SMat& m);
std::vector<Rational> flatten(const QMat& m);

// Replaces each entry s by the width x width rational matrix of rational-linear
// left multiplication v -> s*v in the coordinates e0..e_{w-1}.  For the
// associative kinds this intertwines matrix products; for complex entries
// a + b i it is [[a, -b], [b, a]], and for quaternions the left regular block.
QMat realify(const SMat& m);

}  // namespace lieverify
