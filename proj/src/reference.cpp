// Serial drivers over the same per-item kernels as the OpenMP versions.
// Tests compare both; the benchmark times both.

#include "kernels.hpp"
#include "torus_git/polarization.hpp"
#include "torus_git/stability.hpp"

namespace torus_git::polarization::reference {

ChiCertificate check_lemma1(const WeylGroup& g, const Weight& chi) {
    ChiCertificate cert = detail::local_conditions(g.datum(), chi);
    std::vector<std::optional<std::size_t>> zero_index(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) zero_index[k] = detail::zero_pairing_index(g, k, chi);
    detail::finish_certificate(cert, zero_index);
    return cert;
}

std::vector<Weight> search_chi(const WeylGroup& g, std::size_t height_bound) {
    std::vector<Weight> out;
    for (const auto& alpha : graded_lex_box(g.datum().rank(), height_bound))
        if (detail::candidate_passes(g, alpha)) out.push_back(g.datum().from_alpha(alpha));
    return out;
}

}  // namespace torus_git::polarization::reference

namespace torus_git::stability::reference {

CellSweep classify_cells(const WeylGroup& g, const Weight& chi) {
    CellSweep sweep;
    sweep.chi = chi;
    sweep.hypotheses_met = polarization::reference::check_lemma1(g, chi).passes();
    sweep.support = rootsys::weight_support(g.datum(), chi);
    for (std::size_t k = 0; k < g.size(); ++k) sweep.cells.push_back(detail::classify_cell(g, sweep.support, chi, k));
    return sweep;
}

}  // namespace torus_git::stability::reference
