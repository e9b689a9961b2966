#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lieverify/matrix.hpp"

namespace lieverify {

// Abstract finite root system: a finite spanning set of nonzero vectors in
// Q^rank, closed under negation.  Realizations are integral: B_r and D_r in
// the usual +-e_i +- e_j coordinates, A_r on the sum-zero hyperplane of
// Q^{r+1} coordinatized by the consecutive-difference basis, BC1 = {+-1, +-2}.
// Direct sums concatenate coordinates block-diagonally.
struct RootSystem {
    std::string tag;
    std::size_t rank = 0;
    std::vector<std::vector<Rational>> roots;
    std::vector<std::size_t> base;  // indices of the first spanning independent subset

    bool closed_under_negation() const;
    bool spans_ambient() const;
};

// Supported tags: "A<r>" and "B<r>" (r >= 1), "D<r>" (r >= 2), "BC1", and
// "+"-separated direct sums such as "A1+BC1" or "A3+A1".  Unsupported tags
// throw std::domain_error.
RootSystem make_root_system(const std::string& tag);

// Result of the exhaustive embedding search from R1 into R2.  An embedding
// is an injective linear map of spans sending every root of R1 to a root of
// R2; by default the image must in addition be a closed subset of R2 (two
// image roots whose sum is a root of R2 must sum to an image root), which is
// the subsystem notion that restricted root systems of subalgebras satisfy.
// Setting require_closed_image = false drops the closure requirement and
// keeps only set containment.
//
// The certificate is exact: the search walks base-image tuples in R2 with
// partial-consistency pruning, and on a negative answer
//     leaves_examined + pruned_tuples == predicted_total = |R2|^rank(R1).
// On a positive answer the witness matrix (columns = images of the base
// roots of R1) is re-verified from scratch.
struct EmbedReport {
    std::string from, into;
    bool embeds = false;
    bool require_closed_image = true;
    std::optional<QMat> witness;          // rank(R2) x rank(R1), columns = base images
    bool witness_verified = false;
    std::uint64_t leaves_examined = 0;
    std::uint64_t pruned_tuples = 0;
    std::uint64_t predicted_total = 0;
    bool exhaustive = false;              // counts cover the whole tuple space
};

// Requires rank(R1) <= rank(R2).
EmbedReport embeds(const RootSystem& r1, const RootSystem& r2,
                   bool require_closed_image = true);

// Independent oracle for BC1 embeddability (containment reading): true iff
// some root of R has its double also a root of R.
bool some_root_with_double(const RootSystem& r);

// Smallest dimension of a faithful irreducible module of o(1,n-1)-type data:
// 2 for n = 3, 4 for n in {4,5,6}, n for n >= 7.  Throws std::domain_error
// for n < 3.
std::size_t min_faithful_dim(std::size_t n);

// All pairs 3 <= m <= n <= N violating d_n * d_m >= n + m, each annotated:
// the (3,3) pair is the rank-two case excluded by hypothesis, and the (6,3)
// pair is eliminated by the closed-subsystem check A3+A1 -/-> D4, which the
// scan runs and records when the pair is in range.
struct DimScanReport {
    std::size_t bound = 0;
    std::vector<std::pair<std::size_t, std::size_t>> exceptions;  // (n, m), m <= n
    std::vector<std::string> notes;                               // parallel to exceptions
    std::optional<EmbedReport> d4_check;     // present when (6,3) is in range
    bool d4_check_eliminates = false;        // the embedding search returned false
};

// Requires N >= 3.
DimScanReport dim_inequality_scan(std::size_t N);

}  // namespace lieverify
