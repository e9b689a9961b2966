#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lieverify/linalg.hpp"
#include "lieverify/rng.hpp"
#include "lieverify/subspace.hpp"

namespace lieverify {

// Smallest subspace containing v that is invariant under every matrix in
// `action` (the spin of v).
Subspace spin(const std::vector<QMat>& action, const std::vector<Rational>& v);

// Basis of the commutant algebra {C : CM = MC for every M in action}.
std::vector<QMat> commutant_basis(const std::vector<QMat>& action,
                                  std::size_t dim);

// The unital matrix algebra generated by the action, as a subspace of
// flattened dim x dim matrices.
Subspace matrix_envelope(const std::vector<QMat>& action, std::size_t dim);

// Certified (ir)reducibility analysis of the module Q^dim under the action.
// Every verdict carries a finite certificate:
//   - reducible: an explicitly verified proper nonzero invariant subspace;
//   - irreducible: one of
//       (a) the envelope is the full matrix algebra (Burnside),
//       (b) a singular algebra element with one-dimensional kernel whose
//           kernel vector spins to the whole space on both sides (the
//           classical nullity-one criterion), or
//       (c) the envelope is a field acting regularly: commutative, generated
//           by one element whose minimal polynomial is irreducible of degree
//           equal to the module dimension, with a cyclic vector.
// When the bounded deterministic search exhausts its attempts without a
// certificate the status is `inconclusive` — never a silent pass.
struct ModuleAnalysis {
    enum class Status { irreducible, reducible, inconclusive };
    Status status = Status::inconclusive;
    std::size_t dim = 0;
    std::size_t commutant_dim = 0;
    std::size_t envelope_dim = 0;
    bool absolutely_irreducible = false;
    std::string certificate;
    std::optional<Subspace> invariant_witness;  // verified, when reducible
    std::size_t attempts = 0;

    bool irreducible() const { return status == Status::irreducible; }
};

ModuleAnalysis analyze_module(const std::vector<QMat>& action, std::size_t dim,
                              Rng& rng, std::size_t max_attempts = 32);

// Exact rational-root-based irreducibility test for a monic rational
// polynomial given by its coefficients c (x^m + c[m-1] x^{m-1} + ... + c[0]).
// Decides degrees 1-3 (irreducible over the rationals iff no rational root);
// returns nullopt for higher degrees or when the divisor enumeration would
// exceed the given budget.
std::optional<bool> monic_poly_irreducible(const std::vector<Rational>& c,
                                           std::size_t budget = 1000000);

}  // namespace lieverify
