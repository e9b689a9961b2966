#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieverify/linalg.hpp"
#include "lieverify/matrix.hpp"

namespace lieverify {

// A Lie algebra of nilpotent rational matrices acting on Q^ambient, stored
// as a bracket-closed span basis, optionally carrying the symmetric form the
// matrices are skew for.
struct NilpotentAlgebra {
    std::size_t ambient = 0;
    std::vector<QMat> basis;
    std::optional<QMat> form;
};

// Closes the span of the generators under commutators and verifies that
// every basis element is nilpotent; throws std::invalid_argument naming the
// first witness power at which a generator fails to vanish.
NilpotentAlgebra nilpotent_algebra(std::vector<QMat> generators, std::optional<QMat> form = {});

// Constructive common kernel: v != 0 with X v = 0 for every basis element,
// found by repeatedly intersecting with the kernel of the first nonzero
// central element and restricting (first-by-basis-order choice keeps the
// result deterministic).  steps counts the restriction rounds.
struct EngelResult {
    std::vector<Rational> vector;
    std::size_t steps = 0;
};

EngelResult common_annihilated_vector(const NilpotentAlgebra& alg);

// For algebras skew with respect to a Lorentz form: v != 0 with q(v) = 0 and
// X v = 0 for every basis element, via the chain
//   E = common kernel -> radical of q|E if degenerate, else recurse on the
//   orthogonal complement.
// Both defining equations of the result are re-verified exactly against the
// original data.  A zero algebra falls back to the first null vector found
// among coordinate directions and pairs (flagged as the degenerate-input
// convention).
struct IsotropicFixed {
    std::vector<Rational> vector;
    std::size_t steps = 0;
    bool zero_algebra_convention = false;
};

IsotropicFixed isotropic_fixed_vector(const NilpotentAlgebra& alg);

// Conjugates a nilpotent subalgebra of the parabolic of o(2,n) into the
// maximal unipotent subalgebra u_max(n) by a block conjugator diag(1, g, 1),
// where g is an exact isometry of the middle Lorentz block moving the
// isotropic fixed vector of the projected algebra onto the standard null
// direction.  generators are (n+2) x (n+2) matrices inside the parabolic.
struct ConjugationResult {
    QMat conjugator;                      // in the parabolic subgroup, form-preserving
    bool identity = false;                // input was already inside u_max
    bool image_in_umax = false;
    std::size_t offending_generator = 0;  // first generator escaping, when check fails
};

ConjugationResult conjugate_into_umax(std::size_t n, const std::vector<QMat>& generators);

}  // namespace lieverify
