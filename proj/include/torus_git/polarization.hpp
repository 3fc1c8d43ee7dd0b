#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "torus_git/rootsys.hpp"
#include "torus_git/weyl.hpp"

namespace torus_git::polarization {

using rootsys::Coweight;
using rootsys::IntVector;
using rootsys::RootDatum;
using rootsys::Weight;
using weyl::WeylGroup;

/// The four conditions a polarization character must satisfy, in check order.
enum class Condition { InNS, RegularDominant, ReflectionsNonneg, PairingsNonzero };

const char* condition_name(Condition c);

/// Evidence for the first failing condition. `index` is the simple-root index
/// i; `weyl_index` (PairingsNonzero only) indexes the enumerated group and
/// names w with <χ, w(λ_i)> = 0.
struct FailureWitness {
    Condition condition = Condition::InNS;
    std::size_t index = 0;
    std::optional<std::size_t> weyl_index;
};

struct ChiCertificate {
    Weight chi;
    bool in_ns = false;
    bool regular_dominant = false;
    bool reflections_nonneg = false;
    bool pairings_nonzero = false;
    std::optional<FailureWitness> failure;

    bool passes() const { return in_ns && regular_dominant && reflections_nonneg && pairings_nonzero; }
};

ChiCertificate check_lemma1(const WeylGroup& g, const Weight& chi);

/// Re-runs the single check named by the witness; true iff it fails again.
bool witness_reproduces(const WeylGroup& g, const Weight& chi, const FailureWitness& w);

/// All χ in ℕS of height ≤ height_bound passing check_lemma1, in graded-lex
/// order of α-coordinates (total height, then lexicographically ascending).
/// Candidates are evaluated in parallel.
std::vector<Weight> search_chi(const WeylGroup& g, std::size_t height_bound);

/// Nonnegative integer vectors of length n with sum ≤ bound, graded-lex.
std::vector<IntVector> graded_lex_box(std::size_t n, std::size_t bound);

class ExcludedByHypothesis : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProofPathOptions {
    std::size_t max_m_steps = 16;  // m ranges over [m_min, m_min + max_m_steps]
    std::size_t k_bound = 8;       // Σ k_i ≤ k_bound
};

/// χ = 2mρ + Σ k_i·N·ω_i with N = det(Cartan), the first (by m, then graded-lex
/// in k) that passes check_lemma1. `m_min` is the least m ≥ 1 with
/// m·s_i(2ρ) - N·α_i ∈ ℕS for every i, and the search starts there.
struct ProofPathResult {
    Weight chi;
    std::int64_t m = 0;
    std::int64_t m_min = 0;
    IntVector k;
    std::int64_t determinant = 0;
    /// m·s_i(2ρ) - N·α_i in α-coordinates, one per i, for the chosen m.
    std::vector<IntVector> intermediate;
    bool intermediate_in_ns = false;
    ChiCertificate certificate;
};

ProofPathResult construct_chi_proof_path(const WeylGroup& g, const ProofPathOptions& opts = {});

namespace reference {
ChiCertificate check_lemma1(const WeylGroup& g, const Weight& chi);
std::vector<Weight> search_chi(const WeylGroup& g, std::size_t height_bound);
}  // namespace reference

}  // namespace torus_git::polarization
