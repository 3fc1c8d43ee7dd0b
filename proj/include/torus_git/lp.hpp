#pragma once

#include <optional>
#include <vector>

#include "torus_git/linalg.hpp"
#include "torus_git/rational.hpp"

namespace torus_git::ratlp {

/// Outcome of the phase-1 feasibility problem  A x = b, x >= 0.
///
/// Exactly one of the two certificates is populated:
///   * `solution` with A x = b, x >= 0 when feasible;
///   * `farkas` y with yᵀA >= 0 and yᵀb < 0 when infeasible.
struct FeasibilityResult {
    bool feasible = false;
    RatVector solution;
    RatVector farkas;
    std::size_t pivots = 0;
};

/// Revised phase-1 simplex with Bland's rule. Rows with negative
/// right-hand side are negated first so the all-artificial basis is feasible.
FeasibilityResult solve_feasibility(const RatMatrix& a, const RatVector& b);

/// Re-checks a FeasibilityResult by exact evaluation.
bool verify_feasibility(const RatMatrix& a, const RatVector& b, const FeasibilityResult& r);

enum class Membership { Inside, Outside };

struct MembershipCertificate {
    Membership verdict = Membership::Outside;
    RatVector coefficients;  // convex weights, one per input point (Inside)
    RatVector separator;     // <separator, p - target> > 0 for all p (Outside)
};

/// Decides target ∈ conv(points) and returns an exactly checkable certificate.
/// Throws DimensionMismatch on ragged input or empty point list.
MembershipCertificate convex_membership(const std::vector<RatVector>& points, const RatVector& target);

bool verify_certificate(const std::vector<RatVector>& points, const RatVector& target,
                        const MembershipCertificate& cert);

/// Result of the interior test.
///
/// When `interior` holds, `directions[2j]` and `directions[2j+1]` express -e_j
/// and +e_j as nonnegative combinations of the vectors p - target, which
/// proves the cone they generate is the whole space. Otherwise, when the
/// target lies in the hull, `supporting` is a nonzero λ with
/// <p - target, λ> >= 0 for every p.
struct InteriorCertificate {
    bool interior = false;
    MembershipCertificate hull;
    std::vector<RatVector> directions;
    std::optional<RatVector> supporting;
};

/// True iff target lies in the topological interior of conv(points) in the
/// full ambient space.
InteriorCertificate interior_membership(const std::vector<RatVector>& points, const RatVector& target);

bool verify_certificate(const std::vector<RatVector>& points, const RatVector& target,
                        const InteriorCertificate& cert);

}  // namespace torus_git::ratlp
