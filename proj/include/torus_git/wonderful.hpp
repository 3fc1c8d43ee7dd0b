#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torus_git/rootsys.hpp"
#include "torus_git/stability.hpp"
#include "torus_git/weyl.hpp"

namespace torus_git::wonderful {

using rootsys::RootDatum;
using rootsys::Weight;
using stability::State;
using weyl::WeylGroup;

struct BoundaryDivisor {
    std::size_t index = 0;
    Weight character;  // O(D_i) = L_{α_i}
};

/// Flag-variety data of the closed orbit G/B × G/B⁻. The second factor
/// carries -χ; it is analysed as G/B with the dominant character -w₀(χ).
struct ClosedOrbit {
    Weight first;
    Weight second;
    Weight translated;
};

struct WonderfulModel {
    RootDatum datum;
    Weight chi;
    std::vector<Weight> support;
    std::vector<BoundaryDivisor> boundary;
    ClosedOrbit closed_orbit;
};

/// χ must be dominant and in the root lattice.
WonderfulModel build_model(const WeylGroup& g, const Weight& chi);

/// 1×T state of the identity in P(End V(χ)): the negated support.
State identity_state(const WonderfulModel& m);

struct Restriction {
    Weight first;
    Weight second;
    Weight translated;
    std::vector<std::pair<Weight, Weight>> boundary;  // (α_i, -α_i)
    /// μ agrees at every T-fixed point w·B⁻ of (G/B⁻, -χ) and its image
    /// w·w₀·B of (G/B, -w₀χ), for every ±λ_i.
    bool translation_validated = false;
    std::optional<std::size_t> mismatch;  // Weyl index of the first disagreement
};

Restriction closed_orbit_restriction(const WeylGroup& g, const WonderfulModel& m);

enum class CheckStatus { MachineCheckedPass, MachineCheckedFail, Asserted };

const char* status_name(CheckStatus s);

struct Check {
    std::string id;
    std::string description;
    CheckStatus status = CheckStatus::Asserted;
    std::string witness;  // empty unless MachineCheckedFail
};

struct VerificationReport {
    bool hypotheses_met = true;
    std::vector<std::string> notes;
    std::vector<Check> checks;
    std::optional<std::size_t> min_unstable_codim_in_z;
    std::optional<std::size_t> derived_codim_bound_in_x;
    std::optional<std::size_t> picard_rank_x;
    std::optional<std::size_t> picard_rank_z;
    std::optional<std::size_t> picard_rank_y;
    std::vector<std::string> picard_basis;

    bool machine_checks_pass() const;
    const Check* find(const std::string& id) const;
};

/// Full Proposition-level evidence: the report plus the certificates it rests on.
struct Prop1Evidence {
    VerificationReport report;
    Restriction restriction;
    stability::Lemma2Report z_level;  // cells of (G/B, -w₀χ)
    State identity;
    stability::Verdict identity_verdict;
};

Prop1Evidence verify_prop1(const WeylGroup& g, const WonderfulModel& m);

VerificationReport picard_rank_report(const RootDatum& d);

/// Throws polarization::ExcludedByHypothesis for A1 and A2. Other types run
/// the Proposition-level checks with hypotheses_met = false.
Prop1Evidence verify_cor1(const WeylGroup& g, const WonderfulModel& m);

}  // namespace torus_git::wonderful
