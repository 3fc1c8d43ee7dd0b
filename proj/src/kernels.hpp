#pragma once

// Per-item kernels shared by the OpenMP drivers and the serial reference
// drivers. Each kernel touches only its own inputs.

#include <optional>

#include "torus_git/polarization.hpp"
#include "torus_git/stability.hpp"

namespace torus_git::detail {

/// First i with <χ, w_k(λ_i)> = 0, where w_k = g[k].
std::optional<std::size_t> zero_pairing_index(const weyl::WeylGroup& g, std::size_t k, const rootsys::Weight& chi);

/// Fills the first three Lemma-1 conditions and their witness.
polarization::ChiCertificate local_conditions(const rootsys::RootDatum& d, const rootsys::Weight& chi);

/// Assembles the certificate given per-element pairing results.
void finish_certificate(polarization::ChiCertificate& cert,
                        const std::vector<std::optional<std::size_t>>& zero_index);

/// Full Lemma-1 test for a search candidate given in α-coordinates.
bool candidate_passes(const weyl::WeylGroup& g, const rootsys::IntVector& alpha);

stability::CellReport classify_cell(const weyl::WeylGroup& g, const std::vector<rootsys::Weight>& support,
                                    const rootsys::Weight& chi, std::size_t k);

}  // namespace torus_git::detail
