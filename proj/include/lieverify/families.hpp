#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieverify/lie_algebra.hpp"

namespace lieverify {

// A constructed algebra together with its adapted-basis bookkeeping: named
// index groups (root spaces, letter generators), the Cartan involution in
// basis coordinates where applicable, and the ambient bilinear form
// preserved by the realization.
struct AlgebraModel {
    LieAlgebra alg;
    std::map<std::string, std::vector<std::size_t>> parts;
    std::optional<QMat> theta;      // involution X -> -X* in basis coordinates
    std::optional<SMat> ambient_form;
    ScalarKind kind = ScalarKind::rational;
    std::size_t param = 0;

    Subspace part_span(const std::string& name) const;
    const std::vector<std::size_t>& part(const std::string& name) const;
};

// Rank-one matrix families preserving the form with antidiagonal corner 1s
// and an identity middle block, realized as (k+1)x(k+1) matrices over the
// scalars: rational -> o(1,k), complex -> su(1,k), quaternion -> sp(1,k).
// Basis order: grading generator A; imaginary diagonal generators; middle
// skew/anti-Hermitian block row-major; then the +1, -1, +2, -2 root spaces.
// Parts: "A", "h0", "m", "h+1", "h-1", "h+2", "h-2".
AlgebraModel make_o1k(std::size_t k);
AlgebraModel make_su1k(std::size_t k);
AlgebraModel make_sp1k(std::size_t k);

// Generic orthogonal algebra of an arbitrary symmetric rational form:
// basis computed as the kernel of the skew-symmetry condition (canonical
// but unlabeled order).  Used for cross-checks against the adapted bases.
LieAlgebra make_orthogonal(const std::string& name, const QMat& form);

// Classical Heisenberg algebra of odd dimension m = 2r+1, basis
// X_1..X_r, Y_1..Y_r, Z with [X_l, Y_l] = -2 Z (the symplectic form is the
// one induced by the unitary rank-one corner bracket: omega(u,v) =
// -2 Im <u,v>).  Realized by faithful rational matrices of size m+1.
LieAlgebra make_heisC(std::size_t m);

// Quaternionic Heisenberg algebra of dimension m = 4r+3, basis U_{l,s}
// (l = 1..r, s in {1,i,j,k}) and Z_i, Z_j, Z_k, with bracket the
// quaternion-imaginary form omega(u,v) = sum_l (u_l conj(v_l) - v_l conj(u_l)).
LieAlgebra make_heisH(std::size_t m);

// o(2,n) in the isotropic-flag coordinates where the quadratic form reads
// 2 x_1 x_{n+2} + 2 x_2 x_{n+1} + x_3^2 + ... + x_n^2.  Basis order puts the
// parabolic subalgebra first and the complement letters (c, z_i, beta)
// last.  Parts: one per letter ("Ea", "Eb", "Ec", "Ed", "Ealpha", "Ebeta"),
// "U", "V", "W", "Z", "Ablock", plus "p" and "complement".
AlgebraModel make_o2n(std::size_t n);

// Parabolic subalgebra p of o(2,n): the letters with c = z_i = beta = 0.
LieAlgebra make_parabolic(std::size_t n);

// Maximal unipotent subalgebra of p: basis t, u_1..u_{n-2}, v_1..v_{n-2},
// alpha (the strictly upper-triangular shape).
LieAlgebra make_umax(std::size_t n);

// The 15-dimensional two-step nilpotent algebra on octonions + imaginary
// octonions: [x, y] = x conj(y) - y conj(x) into the second summand, second
// summand central.  Basis x0..x7, s1..s7.
LieAlgebra make_f4_nilradical();

// Subalgebra spanned by a subset of basis vectors; verifies closure and
// keeps the corresponding realization matrices.
LieAlgebra coordinate_subalgebra(const LieAlgebra& g, const std::vector<std::size_t>& indices,
                                 const std::string& name);

// Faithful rational matrices for a two-step nilpotent algebra, acting on
// Q ⊕ complement ⊕ center: rho(x,s)(c, v, w) = (0, c x, (1/2)[x,v] + c s).
std::vector<SMat> two_step_realization(const LieAlgebra& g,
                                       const std::vector<std::size_t>& complement,
                                       const std::vector<std::size_t>& center);

// String-keyed constructor mirroring the family tags used by the CLI and
// tests: "o1k", "su1k", "sp1k", "heisC", "heisH", "o2n", "parabolic",
// "umax", "f4_nilradical".
LieAlgebra make_algebra(const std::string& family, std::size_t param);

}  // namespace lieverify
