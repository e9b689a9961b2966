#include "doctest.h"

#include "lieverify/matrix.hpp"
#include "lieverify/rng.hpp"
#include "lieverify/scalar.hpp"

using namespace lieverify;

namespace {

Scalar u(ScalarKind k, std::size_t t) { return Scalar::unit(k, t); }

Scalar random_scalar(ScalarKind k, std::size_t width, Rng& rng) {
    Scalar s = Scalar::zero(k);
    for (std::size_t t = 0; t < width; ++t) s += rng.rational(4, 3) * u(k, t);
    return s;
}

Rational norm2(const Scalar& s, std::size_t width) {
    Rational n(0);
    for (std::size_t t = 0; t < width; ++t) n += s.coeff(t) * s.coeff(t);
    return n;
}

}  // namespace

TEST_CASE("complex arithmetic is the Gaussian field") {
    const ScalarKind C = ScalarKind::complex;
    CHECK(u(C, 1) * u(C, 1) == -Scalar::one(C));
    Scalar z = Scalar::from_rational(C, rat(3, 1)) + rat(4, 1) * u(C, 1);
    CHECK(z * z.conj() == Scalar::from_rational(C, Rational(25)));
    CHECK(z.conj().coeff(1) == Rational(-4));
}

TEST_CASE("quaternion units follow the Hamilton table") {
    const ScalarKind H = ScalarKind::quaternion;
    const Scalar i = u(H, 1), j = u(H, 2), k = u(H, 3), one = Scalar::one(H);
    CHECK(i * i == -one);
    CHECK(j * j == -one);
    CHECK(k * k == -one);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * j == -i);
    CHECK(k * i == j);
    CHECK(i * k == -j);
    CHECK(i * j * k == -one);
}

TEST_CASE("quaternion norm is multiplicative and conjugation reverses products") {
    const ScalarKind H = ScalarKind::quaternion;
    Rng rng(seed_for(41, "quat-norm"));
    for (int trial = 0; trial < 20; ++trial) {
        Scalar x = random_scalar(H, 4, rng), y = random_scalar(H, 4, rng);
        CHECK(norm2(x * y, 4) == norm2(x, 4) * norm2(y, 4));
        CHECK((x * y).conj() == y.conj() * x.conj());
    }
}

TEST_CASE("octonion units square to -1 and anticommute") {
    const ScalarKind O = ScalarKind::octonion;
    const Scalar one = Scalar::one(O);
    for (std::size_t s = 1; s < 8; ++s) {
        CHECK(u(O, s) * u(O, s) == -one);
        for (std::size_t t = s + 1; t < 8; ++t) CHECK(u(O, s) * u(O, t) == -(u(O, t) * u(O, s)));
    }
    // The first three imaginary units are the embedded quaternions.
    CHECK(u(O, 1) * u(O, 2) == u(O, 3));
    // A product of units is again (up to sign) a unit orthogonal to both factors.
    for (std::size_t s = 1; s < 8; ++s)
        for (std::size_t t = 1; t < 8; ++t) {
            if (s == t) continue;
            Scalar p = u(O, s) * u(O, t);
            std::size_t support = 0, where = 0;
            for (std::size_t c = 0; c < 8; ++c)
                if (!rat_is_zero(p.coeff(c))) {
                    ++support;
                    where = c;
                }
            CHECK(support == 1);
            CHECK((p.coeff(where) == Rational(1) || p.coeff(where) == Rational(-1)));
            CHECK(where != 0);
            CHECK(where != s);
            CHECK(where != t);
        }
}

TEST_CASE("octonions are alternative, normed, but not associative") {
    const ScalarKind O = ScalarKind::octonion;
    Rng rng(seed_for(41, "oct-props"));
    for (int trial = 0; trial < 15; ++trial) {
        Scalar x = random_scalar(O, 8, rng), y = random_scalar(O, 8, rng);
        CHECK(x * (x * y) == (x * x) * y);
        CHECK((y * x) * x == y * (x * x));
        CHECK(norm2(x * y, 8) == norm2(x, 8) * norm2(y, 8));
        CHECK((x * y).conj() == y.conj() * x.conj());
    }
    bool associator_seen = false;
    for (std::size_t s = 1; s < 8 && !associator_seen; ++s)
        for (std::size_t t = 1; t < 8 && !associator_seen; ++t)
            for (std::size_t v = 1; v < 8 && !associator_seen; ++v)
                if ((u(O, s) * u(O, t)) * u(O, v) != u(O, s) * (u(O, t) * u(O, v)))
                    associator_seen = true;
    CHECK(associator_seen);
}

TEST_CASE("scalar inverses are exact") {
    for (ScalarKind k : {ScalarKind::rational, ScalarKind::complex, ScalarKind::quaternion,
                         ScalarKind::octonion}) {
        Rng rng(seed_for(41, "scalar-inv"));
        const std::size_t width = k == ScalarKind::rational    ? 1
                                  : k == ScalarKind::complex   ? 2
                                  : k == ScalarKind::quaternion ? 4
                                                                : 8;
        for (int trial = 0; trial < 8; ++trial) {
            Scalar x = random_scalar(k, width, rng);
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == Scalar::one(k));
            CHECK(x.inverse() * x == Scalar::one(k));
        }
    }
}

TEST_CASE("matrix transpose, conjugate transpose and flatten") {
    QMat m = qmat(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 2) = rat(5, 2);
    m.at(1, 1) = -3;
    QMat t = m.transpose();
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 2);
    CHECK(t.at(2, 0) == rat(5, 2));
    std::vector<Rational> f = flatten(m);
    REQUIRE(f.size() == 6);
    CHECK(f[2] == rat(5, 2));
    CHECK(f[4] == Rational(-3));

    SMat c = smat(2, 2, ScalarKind::complex);
    c.at(0, 1) = Scalar::unit(ScalarKind::complex, 1);
    SMat ct = c.conj_transpose();
    CHECK(ct.at(1, 0) == -Scalar::unit(ScalarKind::complex, 1));
}

TEST_CASE("realify is an exact algebra homomorphism") {
    for (ScalarKind k : {ScalarKind::rational, ScalarKind::complex, ScalarKind::quaternion}) {
        Rng rng(seed_for(41, "realify"));
        const std::size_t width = k == ScalarKind::rational ? 1 : k == ScalarKind::complex ? 2 : 4;
        SMat a = smat(2, 2, k), b = smat(2, 2, k);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                a.at(i, j) = random_scalar(k, width, rng);
                b.at(i, j) = random_scalar(k, width, rng);
            }
        CHECK(realify(a * b) == realify(a) * realify(b));
        CHECK(realify(a + b) == realify(a) + realify(b));
        CHECK(realify(a).rows() == 2 * width);
    }
}
