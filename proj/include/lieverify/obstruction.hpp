#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieverify/families.hpp"
#include "lieverify/rng.hpp"

namespace lieverify {

// heisH(7) together with the four generators U, U_i, U_j, U_k of its
// quaternionic line and the center basis Z_x := [U, U_x].  In that basis the
// ten pairwise brackets follow the quaternion multiplication signs:
//
//   [U, U_i] = Z_i   [U, U_j] = Z_j   [U, U_k] = Z_k
//   [U_i, U_j] = Z_k   [U_i, U_k] = -Z_j   [U_j, U_k] = Z_i
//
// matches_display asserts all 16 ordered pairs (antisymmetry and zero
// diagonal included).  center_rescale records the factor relating the
// table's Z_x to the construction-basis center vectors.
struct Heis7Table {
    LieAlgebra algebra;                           // heisH(7)
    std::vector<std::vector<Rational>> gens;      // U, U_i, U_j, U_k
    std::vector<std::vector<Rational>> zs;        // Z_i, Z_j, Z_k
    bool matches_display = false;
    bool zs_independent = false;
    Rational center_rescale;                      // Z_x = rescale * e_{Z_x}
    bool ok() const { return matches_display && zs_independent; }
};

Heis7Table heis7_bracket_table();

// One polynomial identity certified by exact evaluation on an integer grid.
// points_per_variable exceeding degree_bound per variable makes the grid a
// complete interpolation proof of the identity, not a sample.
struct GridIdentity {
    std::string id;
    std::size_t grid_points = 0;
    std::size_t points_per_variable = 0;
    std::size_t degree_bound = 0;                 // max degree in any one variable
    bool pass = false;
    std::vector<Rational> failing_point;          // first failing grid point, if any
};

// Outcome of the no-surjection argument for u_max(n) -> heisH(7):
//   * the bracket table of the target generators holds (table_ok);
//   * for ANY linear map pinned to those generator images and respecting the
//     five pairwise brackets, the three image formulas hold identically in
//     the formal parameters t_1..t_4 (identity_checks, grid-certified);
//   * the 2x2 minor of the image coordinate matrix factors as
//     t_1^2 (t_1^2 + t_4^2), a sum of squares that vanishes over the reals
//     only at t_1 = 0 (minor_forces_t1_zero);
//   * the receiving line is too small: the derived subalgebra of
//     heisC(2n-3) is one-dimensional while Z_i, Z_j span two dimensions
//     (dimD_contradiction).
// semidirect_membership_ok certifies the source-side bookkeeping: the
// combinations t_a X_1 - t_1 X_a drop into the heisC complement of the
// distinguished generator t and bracket into the derived line, for random
// heisC components of the X's at every grid point.
struct ObstructionReport {
    std::size_t n = 0;
    bool table_ok = false;
    std::vector<GridIdentity> identity_checks;
    bool minor_forces_t1_zero = false;
    bool dimD_contradiction = false;
    bool semidirect_membership_ok = false;
    std::string splitting_note;                   // complement fixed by the constructor

    bool pass() const;
};

// Certifies the full obstruction for u_max(n); requires n >= 3.
ObstructionReport obstruction_identities(std::size_t n);

// Evidence harness: random full-rank-7 rational maps u_max(n) -> heisH(7)
// are checked against the morphism property; every one is expected to break
// it on some basis pair.  Samples below rank 7 are rejected by the
// precondition and not counted.  When rank 7 is unreachable (dim u_max < 7)
// or trials = 0 the run is a vacuous pass, flagged with a warning.
struct FalsifierReport {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t surjective_samples = 0;           // samples meeting the rank-7 precondition
    std::size_t rejected_rank = 0;                // skipped below-rank samples
    std::size_t counterexamples = 0;              // sampled maps that were morphisms
    std::optional<QMat> counterexample;           // first offender, if any ever appears
    bool vacuous = false;
    std::string warning;

    bool pass() const { return counterexamples == 0; }
};

FalsifierReport random_morphism_falsifier(std::size_t n, std::size_t trials,
                                          std::uint64_t seed);

}  // namespace lieverify
