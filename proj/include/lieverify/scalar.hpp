#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lieverify/rational.hpp"

namespace lieverify {

// The four normed algebras over the rationals reachable by doubling:
// rational (width 1), complex (2), quaternion (4), octonion (8).
enum class ScalarKind { rational, complex, quaternion, octonion };

inline std::size_t kind_width(ScalarKind k) {
    switch (k) {
        case ScalarKind::rational: return 1;
        case ScalarKind::complex: return 2;
        case ScalarKind::quaternion: return 4;
        case ScalarKind::octonion: return 8;
    }
    return 0;
}

std::string kind_name(ScalarKind k);

// Element of one of the doubling algebras, stored as rational coordinates
// over the standard basis e0 (=1), e1, ..., e_{w-1}.  For complex numbers
// e1 = i; for quaternions e1,e2,e3 = i,j,k; for octonions e4 = (0,1) under
// the doubling construction, so e5 = e1*e4, e6 = e2*e4, e7 = e3*e4.
class Scalar {
public:
    Scalar() : kind_(ScalarKind::rational), c_(1, Rational(0)) {}
    explicit Scalar(ScalarKind k) : kind_(k), c_(kind_width(k), Rational(0)) {}
    Scalar(ScalarKind k, std::vector<Rational> coeffs);

    static Scalar from_rational(ScalarKind k, const Rational& r);
    static Scalar unit(ScalarKind k, std::size_t index);  // e_index
    static Scalar zero(ScalarKind k) { return Scalar(k); }
    static Scalar one(ScalarKind k) { return from_rational(k, Rational(1)); }

    ScalarKind kind() const { return kind_; }
    std::size_t width() const { return c_.size(); }
    const Rational& coeff(std::size_t i) const { return c_[i]; }
    Rational& coeff(std::size_t i) { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool operator==(const Scalar& o) const { return kind_ == o.kind_ && c_ == o.c_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar scale(const Rational& r) const;

    // Conjugation negates every coordinate except the real part e0.
    Scalar conj() const;
    // Sum of squared coordinates; positive definite, multiplicative.
    Rational norm() const;
    Rational real() const { return c_[0]; }
    // conj() / norm(); requires a nonzero element.
    Scalar inverse() const;

    std::string str() const;

private:
    ScalarKind kind_;
    std::vector<Rational> c_;
};

inline Scalar operator*(const Rational& r, const Scalar& s) { return s.scale(r); }

// Real part of the product x * conj(y): the symmetric bilinear form whose
// quadratic form is norm().
Rational dot_re(const Scalar& x, const Scalar& y);

}  // namespace lieverify
