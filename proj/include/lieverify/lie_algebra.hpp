#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieverify/matrix.hpp"
#include "lieverify/subspace.hpp"

namespace lieverify {

// Finite-dimensional Lie algebra over the rationals, stored as sparse
// structure constants on basis pairs i < j (the rest follows from
// antisymmetry), optionally backed by a matrix realization whose
// commutators reproduce the table exactly.
class LieAlgebra {
public:
    // One basis-pair bracket as a sparse list of (basis index, coefficient).
    using Terms = std::vector<std::pair<std::size_t, Rational>>;
    // Sparse matrix entry of a realization basis element.
    struct SparseEntry {
        std::size_t row, col;
        Scalar value;
    };

    LieAlgebra() : name_("(empty)"), dim_(0) {}
    LieAlgebra(std::string name, std::vector<std::string> labels);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t label_index(const std::string& label) const;

    // Defines [e_i, e_j] for i < j; overwrites any previous value.
    void set_bracket(std::size_t i, std::size_t j, Terms terms);
    void add_term(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
    void set_realization(std::vector<SMat> mats);

    const std::optional<std::vector<SMat>>& realization() const { return realization_; }
    const std::vector<std::vector<SparseEntry>>& realization_sparse() const;

    // Sparse bracket of two basis elements (empty when i == j); sign handled.
    Terms basis_bracket(std::size_t i, std::size_t j) const;
    // Dense coordinates of [e_i, e_j].
    std::vector<Rational> basis_bracket_dense(std::size_t i, std::size_t j) const;
    // Bilinear extension to coordinate vectors.
    std::vector<Rational> bracket(const std::vector<Rational>& X,
                                  const std::vector<Rational>& Y) const;
    // Matrix of ad(X): Y -> [X, Y] in the basis.
    QMat ad(const std::vector<Rational>& X) const;
    QMat ad_basis(std::size_t i) const;

    std::vector<Rational> coord_vector(std::size_t i) const;  // e_i
    // Realization matrix of a coordinate vector.
    SMat realize(const std::vector<Rational>& X) const;

    struct JacobiDefect {
        std::size_t i, j, k;
        std::vector<Rational> defect;
    };
    // First basis triple violating the Jacobi identity, if any.
    std::optional<JacobiDefect> jacobi_defect() const;
    bool jacobi_holds() const { return !jacobi_defect().has_value(); }

    // Exact check that matrix commutators of the realization reproduce the
    // structure constants; false when no realization is attached.
    bool realization_matches() const;

    Subspace derived_subalgebra() const;
    Subspace center() const;
    // g = g^1 ⊇ g^2 = [g, g^1] ⊇ ..., listed until it stabilizes.
    std::vector<Subspace> lower_central_series() const;
    // Smallest s with g^{s+1} = 0, when the series reaches zero.
    std::optional<std::size_t> nilpotency_degree() const;

    struct StructureReport {
        Subspace derived;
        Subspace center;
        std::vector<std::size_t> lower_central_dims;
        std::optional<std::size_t> nilpotency_degree;
    };
    StructureReport structure_report() const;

    // Span of [U, V].
    Subspace bracket_span(const Subspace& U, const Subspace& V) const;
    // Smallest bracket-closed subspace containing the seed.
    Subspace subalgebra_closure(const Subspace& seed) const;
    // Smallest subspace containing the seed and stable under bracketing with
    // the actor subspace (the seed grows, the actors do not).
    Subspace closure_under_action(const Subspace& seed, const Subspace& actors) const;
    bool is_subalgebra(const Subspace& W) const;
    bool is_ideal(const Subspace& W) const;

    // Lie algebra structure induced on a bracket-closed subspace, in the
    // given basis vectors (must be independent and closed).
    LieAlgebra induced_subalgebra(const std::string& name,
                                  const std::vector<std::vector<Rational>>& basis,
                                  const std::vector<std::string>& labels) const;

    // Plain-text table: header `dim N`, one `basis <labels>` line, then one
    // line `i j k p/q` per nonzero coefficient of [e_i, e_j], i < j.
    std::string dump_structure_constants() const;

private:
    std::size_t tri(std::size_t i, std::size_t j) const;  // index for i < j

    std::string name_;
    std::vector<std::string> labels_;
    std::size_t dim_;
    std::vector<Terms> table_;
    std::optional<std::vector<SMat>> realization_;
    mutable std::vector<std::vector<SparseEntry>> realization_sparse_;
};

// Rational-linear map between algebras, as a (dst.dim x src.dim) matrix.
struct LinearMap {
    const LieAlgebra* src = nullptr;
    const LieAlgebra* dst = nullptr;
    QMat matrix;

    std::vector<Rational> apply(const std::vector<Rational>& x) const;
};

struct MorphismDefect {
    std::size_t i, j;                  // source basis pair where f[x,y] != [fx, fy]
    std::vector<Rational> difference;  // f[e_i,e_j] - [f e_i, f e_j] in dst coordinates
};

// First basis pair violating f[X,Y] = [fX, fY], if any.
std::optional<MorphismDefect> morphism_defect(const LinearMap& f);
bool is_lie_morphism(const LinearMap& f);

// Extra certification profiles for isomorphism targets: the two Heisenberg
// recognition profiles, or no profile (plain isomorphism).
enum class IsoCertify { heisC, heisH, abstract_algebra };

struct IsoReport {
    bool dims_match = false;
    bool bijective = false;
    bool morphism = false;
    bool target_profile_ok = false;  // Heisenberg recognition when requested
    bool ok = false;
    std::string detail;
};

IsoReport verify_isomorphism(const LinearMap& f, IsoCertify certify);

// Heisenberg recognition: derived = center of the stated dimension (1 or 3),
// two-step nilpotent, and the center-valued pairing on the quotient is
// nondegenerate.
bool heisenberg_profile(const LieAlgebra& g, std::size_t center_dim, std::string* why = nullptr);

// Structure constants recomputed from a matrix realization: brackets of the
// given matrices are resolved against their rational span.  Throws when the
// matrices are dependent or a commutator escapes the span.
LieAlgebra algebra_from_realization(const std::string& name,
                                    const std::vector<std::string>& labels,
                                    const std::vector<SMat>& mats);

}  // namespace lieverify
