#pragma once

#include <cstddef>
#include <vector>

#include "lieverify/linalg.hpp"

namespace lieverify {

// Linear subspace of Q^n in canonical form (reduced echelon basis rows), so
// that equality of subspaces is equality of representations.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : span_(ambient) {}

    static Subspace span_of(std::size_t ambient, const std::vector<std::vector<Rational>>& vecs);
    static Subspace span_rows(const QMat& rows);
    static Subspace span_cols(const QMat& cols);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return span_.ambient(); }
    std::size_t dim() const { return span_.dim(); }
    bool is_full() const { return span_.is_full(); }
    bool is_zero() const { return dim() == 0; }

    // Adds a vector; reports whether the subspace grew.
    bool add(std::vector<Rational> v) { return span_.add(std::move(v)); }

    bool contains(const std::vector<Rational>& v) const { return span_.contains(v); }
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    const std::vector<std::vector<Rational>>& basis() const { return span_.rows(); }
    QMat basis_rows() const { return span_.basis_rows(); }
    QMat basis_cols() const { return span_.basis_rows().transpose(); }

private:
    RowSpan span_;
};

}  // namespace lieverify
