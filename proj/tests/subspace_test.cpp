#include "doctest.h"

#include "lieverify/subspace.hpp"

using namespace lieverify;

namespace {

std::vector<Rational> v3(long a, long b, long c) {
    return {Rational(a), Rational(b), Rational(c)};
}

}  // namespace

TEST_CASE("span, dimension and membership") {
    Subspace s = Subspace::span_of(3, {v3(1, 0, 0), v3(0, 1, 1), v3(1, 1, 1)});
    CHECK(s.dim() == 2);
    CHECK(s.contains(v3(2, 3, 3)));
    CHECK(!s.contains(v3(0, 0, 1)));
    CHECK(!s.is_full());
    CHECK(!s.is_zero());
    CHECK(Subspace::full(3).is_full());
    CHECK(Subspace(3).is_zero());
}

TEST_CASE("sum and intersection of planes") {
    Subspace u = Subspace::span_of(3, {v3(1, 1, 1), v3(1, 0, 0)});
    Subspace w = Subspace::span_of(3, {v3(1, 1, 1), v3(0, 1, 0)});
    Subspace meet = u.intersect(w);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains(v3(1, 1, 1)));
    Subspace join = u.sum(w);
    CHECK(join.is_full());
    CHECK(u.contains(meet));
    CHECK(join.contains(u));
    CHECK(join.contains(w));
}

TEST_CASE("subspace equality is basis independent") {
    Subspace a = Subspace::span_of(2, {{Rational(1), Rational(2)}});
    Subspace b = Subspace::span_of(2, {{Rational(2), Rational(4)}});
    CHECK(a == b);
    Subspace c = Subspace::span_of(2, {{Rational(1), Rational(0)}});
    CHECK(a != c);
}

TEST_CASE("incremental add reports growth") {
    Subspace s(3);
    s.add(v3(1, 2, 3));
    CHECK(s.dim() == 1);
    s.add(v3(2, 4, 6));
    CHECK(s.dim() == 1);
    s.add(v3(0, 0, 1));
    CHECK(s.dim() == 2);
}
