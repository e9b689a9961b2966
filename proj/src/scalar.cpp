#include "lieverify/scalar.hpp"

#include <cassert>
#include <stdexcept>

namespace lieverify {

std::string kind_name(ScalarKind k) {
    switch (k) {
        case ScalarKind::rational: return "rational";
        case ScalarKind::complex: return "complex";
        case ScalarKind::quaternion: return "quaternion";
        case ScalarKind::octonion: return "octonion";
    }
    return "?";
}

Scalar::Scalar(ScalarKind k, std::vector<Rational> coeffs) : kind_(k), c_(std::move(coeffs)) {
    if (c_.size() != kind_width(k)) throw std::invalid_argument("scalar coefficient count mismatch");
}

Scalar Scalar::from_rational(ScalarKind k, const Rational& r) {
    Scalar s(k);
    s.c_[0] = r;
    return s;
}

Scalar Scalar::unit(ScalarKind k, std::size_t index) {
    Scalar s(k);
    if (index >= s.width()) throw std::out_of_range("unit index exceeds scalar width");
    s.c_[index] = 1;
    return s;
}

bool Scalar::is_zero() const {
    for (const auto& x : c_)
        if (!rat_is_zero(x)) return false;
    return true;
}

Scalar Scalar::operator+(const Scalar& o) const {
    assert(kind_ == o.kind_);
    Scalar r(kind_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    assert(kind_ == o.kind_);
    Scalar r(kind_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(kind_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

Scalar Scalar::scale(const Rational& r) const {
    Scalar s(kind_);
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i] * r;
    return s;
}

namespace {

// Doubling product on raw coordinate slices of width w:
//   (a, b) * (c, d) = (a c - conj(d) b,  d a + b conj(c))
// with conj negating every coordinate except the slice's first.
void cd_mul(const Rational* x, const Rational* y, Rational* out, std::size_t w) {
    if (w == 1) {
        out[0] = x[0] * y[0];
        return;
    }
    const std::size_t h = w / 2;
    const Rational *a = x, *b = x + h, *c = y, *d = y + h;
    std::vector<Rational> t1(h), t2(h), cc(h), dc(h);
    // conj(c), conj(d) on the half-width slices.
    cc[0] = c[0];
    dc[0] = d[0];
    for (std::size_t i = 1; i < h; ++i) {
        cc[i] = -c[i];
        dc[i] = -d[i];
    }
    // First component: a*c - conj(d)*b.
    cd_mul(a, c, t1.data(), h);
    cd_mul(dc.data(), b, t2.data(), h);
    for (std::size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
    // Second component: d*a + b*conj(c).
    cd_mul(d, a, t1.data(), h);
    cd_mul(b, cc.data(), t2.data(), h);
    for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

}  // namespace

Scalar Scalar::operator*(const Scalar& o) const {
    assert(kind_ == o.kind_);
    Scalar r(kind_);
    cd_mul(c_.data(), o.c_.data(), r.c_.data(), c_.size());
    return r;
}

Scalar Scalar::conj() const {
    Scalar r(kind_);
    r.c_[0] = c_[0];
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

Rational Scalar::norm() const {
    Rational n = 0;
    for (const auto& x : c_) n += x * x;
    return n;
}

Scalar Scalar::inverse() const {
    Rational n = norm();
    if (rat_is_zero(n)) throw std::domain_error("inverse of zero scalar");
    return conj().scale(Rational(1) / n);
}

std::string Scalar::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(c_[i]);
    }
    out += ")";
    return out;
}

Rational dot_re(const Scalar& x, const Scalar& y) {
    assert(x.kind() == y.kind());
    Rational s = 0;
    for (std::size_t i = 0; i < x.width(); ++i) s += x.coeff(i) * y.coeff(i);
    return s;
}

}  // namespace lieverify
