#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torus_git/lp.hpp"
#include "torus_git/rootsys.hpp"
#include "torus_git/weyl.hpp"

namespace torus_git::stability {

using ratlp::Rational;
using ratlp::RatVector;
using rootsys::Coweight;
using rootsys::RootDatum;
using rootsys::Weight;
using weyl::WeylGroup;

/// Torus characters on the nonzero coordinates of a point of a projective
/// representation. Sorted and duplicate free; never empty.
class State {
public:
    explicit State(std::vector<Weight> weights);

    const std::vector<Weight>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    bool contains(const Weight& w) const;

    friend bool operator==(const State&, const State&) = default;

private:
    std::vector<Weight> weights_;
};

/// Hilbert–Mumford weight for the left action: μ(s, λ) = -min_{ψ ∈ s} <ψ, λ>.
/// Destabilizing means μ < 0.
Rational mu(const RootDatum& d, const State& s, const Coweight& lambda);

enum class VerdictKind { Unstable, SemistableNotStable, Stable };

const char* verdict_name(VerdictKind k);

/// Classification with its certificate. Hull coefficients and interior
/// directions are indexed like `State::weights()`.
///
///   Unstable:             `destabilizer` (primitive, μ < 0)
///   SemistableNotStable:  `hull` coefficients and nonzero `supporting` λ
///                         with <ψ, λ> >= 0 on the whole state
///   Stable:               `hull` coefficients and `directions`, writing
///                         each ∓e_j (ω-coordinates) as a nonnegative
///                         combination of the state's weights
struct Verdict {
    VerdictKind kind = VerdictKind::Unstable;
    std::optional<Coweight> destabilizer;
    std::optional<Coweight> supporting;
    RatVector hull;
    std::vector<RatVector> directions;
};

Verdict classify_state(const RootDatum& d, const State& s);

/// Exact re-verification of every certificate field relevant to the kind.
bool verify_verdict(const RootDatum& d, const State& s, const Verdict& v);

/// Weights ν of the support with w(χ) ≤ ν: the torus state of a generic point
/// of the Schubert cell BwB/B.
State schubert_cell_state(const RootDatum& d, const std::vector<Weight>& support, const Weight& chi,
                          const weyl::WeylElement& w);
State schubert_cell_state(const RootDatum& d, const Weight& chi, const weyl::WeylElement& w);

struct CellReport {
    std::size_t weyl_index = 0;  // index into the enumerated group
    std::vector<std::size_t> reduced_word;
    std::size_t length = 0;
    std::size_t codim = 0;
    Weight w_chi;
    bool w_chi_leq_zero = false;
    std::size_t state_size = 0;
    Verdict generic_verdict;
};

struct CellSweep {
    Weight chi;
    bool hypotheses_met = false;  // χ passes every Lemma-1 condition
    std::vector<Weight> support;
    std::vector<CellReport> cells;  // group order: length, then lex on word
};

/// One report per Weyl element; cells are classified in parallel.
CellSweep classify_cells(const WeylGroup& g, const Weight& chi);

struct CheckOutcome {
    bool pass = true;
    std::vector<std::size_t> witnesses;  // indices into CellSweep::cells
};

struct Lemma2Report {
    CellSweep sweep;
    CheckOutcome codim_implication;  // w(χ) ≰ 0  ⇒  codim ≥ 2
    CheckOutcome no_strictly_semistable;
    CheckOutcome low_codim_stable;   // codim ≤ 1  ⇒  Stable
    std::optional<std::size_t> min_unstable_codim;

    bool all_pass() const {
        return codim_implication.pass && no_strictly_semistable.pass && low_codim_stable.pass;
    }
};

Lemma2Report verify_lemma2(const WeylGroup& g, const Weight& chi);

namespace reference {
CellSweep classify_cells(const WeylGroup& g, const Weight& chi);
}  // namespace reference

}  // namespace torus_git::stability
