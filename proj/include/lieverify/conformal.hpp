#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lieverify/families.hpp"
#include "lieverify/linalg.hpp"
#include "lieverify/subspace.hpp"

namespace lieverify {

// o(2,n) with its parabolic p and the n-dimensional quotient g/p carried by
// the complement directions (c, z_1..z_{n-2}, beta).  Q is the symmetric
// form on the quotient singled out, up to scale, by exact invariance under
// the quotient action of [p,p]; the constructor solves that linear system,
// asserts a one-dimensional solution space, normalizes to a primitive
// integer matrix, and fixes the sign so the signature is Lorentz with one
// negative direction.
struct ConformalModel {
    std::size_t n = 0;
    AlgebraModel g;                            // o(2,n) adapted model
    Subspace p;                                // parabolic subalgebra
    std::vector<std::size_t> quotient_basis;   // complement coordinate indices
    QMat Q;                                    // n x n symmetric, Lorentz (1 neg, n-1 pos)
    std::size_t invariance_solution_dim = 0;   // must be 1
    Signature q_signature;
    std::string convention;                    // sign/orientation conventions, stated once

    ConformalModel() : p(0) {}
};

// Requires n >= 3.
ConformalModel build_model(std::size_t n);

// Matrix of the map induced by ad(X) on g/p in the quotient basis; X must
// normalize p (true for every X in p).
QMat quotient_action(const ConformalModel& m, const std::vector<Rational>& X);

// Infinitesimal conformality of one parabolic element: the symmetrized
// quotient action satisfies M^T Q + Q M = lambda Q for an exact rational
// lambda.  conformal = false flags a residual that is not proportional to Q
// (which would contradict the model).  unipotent_quotient reports whether
// the quotient action is nilpotent.
struct ConformalFactor {
    Rational lambda;
    bool conformal = false;
    bool unipotent_quotient = false;
};

ConformalFactor ad_conformal_factor(const ConformalModel& m, const std::vector<Rational>& p_elem);

// Trichotomy of a nonzero subspace W of (g/p, Q): positive definite,
// nondegenerate with one negative direction, or degenerate with
// one-dimensional kernel and positive-definite complement.  Any other
// signature is impossible under a Lorentz Q and throws.
enum class SubspaceClass { riemannian, lorentzian, degenerate_positive };

SubspaceClass classify_subspace(const ConformalModel& m, const Subspace& W);

// Totally isotropic subspaces of (g/p, Q) have dimension at most one:
// checked exhaustively over coordinate subspaces, and structurally via the
// signature bound min(neg, pos) = 1.
struct IsotropicScan {
    std::size_t subsets_checked = 0;
    std::size_t max_coordinate_isotropic_dim = 0;
    bool signature_bound_is_one = false;

    bool ok() const { return max_coordinate_isotropic_dim <= 1 && signature_bound_is_one; }
};

IsotropicScan isotropic_dimension_scan(const ConformalModel& m);

}  // namespace lieverify
