#include "torus_git/stability.hpp"

#include <algorithm>
#include <stdexcept>

#include "kernels.hpp"
#include "torus_git/polarization.hpp"

namespace torus_git::stability {

State::State(std::vector<Weight> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("state must contain at least one weight");
    std::sort(weights_.begin(), weights_.end());
    weights_.erase(std::unique(weights_.begin(), weights_.end()), weights_.end());
}

bool State::contains(const Weight& w) const { return std::binary_search(weights_.begin(), weights_.end(), w); }

Rational mu(const RootDatum& d, const State& s, const Coweight& lambda) {
    std::optional<Rational> lowest;
    for (const auto& psi : s.weights()) {
        Rational p = rootsys::pairing(d, psi, lambda);
        if (!lowest || p < *lowest) lowest = std::move(p);
    }
    return -*lowest;
}

const char* verdict_name(VerdictKind k) {
    switch (k) {
    case VerdictKind::Unstable: return "Unstable";
    case VerdictKind::SemistableNotStable: return "SemistableNotStable";
    case VerdictKind::Stable: return "Stable";
    }
    return "?";
}

namespace {

std::vector<RatVector> omega_points(const State& s) {
    std::vector<RatVector> pts;
    pts.reserve(s.size());
    for (const auto& w : s.weights()) pts.emplace_back(w.omega.begin(), w.omega.end());
    return pts;
}

// A functional s on ω-coordinates corresponds to the coweight Cᵀ s, since
// <ψ, Cᵀ s> = α(ψ)ᵀ Cᵀ s = ω(ψ)·s. The result is scaled to be primitive.
Coweight coweight_from_functional(const RootDatum& d, const RatVector& s) {
    const std::size_t n = d.rank();
    RatVector lam(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (d.cartan()[i][j] != 0) lam[j] += Rational(d.cartan()[i][j]) * s[i];
    return Coweight{ratlp::primitive_integer(lam)};
}

}  // namespace

Verdict classify_state(const RootDatum& d, const State& s) {
    for (const auto& w : s.weights())
        if (w.rank() != d.rank()) throw ratlp::DimensionMismatch("state weight rank does not match root datum");
    const std::vector<RatVector> pts = omega_points(s);
    const RatVector origin(d.rank());
    ratlp::InteriorCertificate cert = ratlp::interior_membership(pts, origin);

    Verdict v;
    if (cert.hull.verdict == ratlp::Membership::Outside) {
        v.kind = VerdictKind::Unstable;
        v.destabilizer = coweight_from_functional(d, cert.hull.separator);
        return v;
    }
    v.hull = std::move(cert.hull.coefficients);
    if (cert.interior) {
        v.kind = VerdictKind::Stable;
        v.directions = std::move(cert.directions);
    } else {
        v.kind = VerdictKind::SemistableNotStable;
        v.supporting = coweight_from_functional(d, *cert.supporting);
    }
    return v;
}

bool verify_verdict(const RootDatum& d, const State& s, const Verdict& v) {
    const std::vector<RatVector> pts = omega_points(s);
    const RatVector origin(d.rank());
    switch (v.kind) {
    case VerdictKind::Unstable:
        return v.destabilizer && mu(d, s, *v.destabilizer).sign() < 0;
    case VerdictKind::SemistableNotStable: {
        ratlp::MembershipCertificate hull{ratlp::Membership::Inside, v.hull, {}};
        if (!ratlp::verify_certificate(pts, origin, hull)) return false;
        if (!v.supporting || v.supporting->is_zero()) return false;
        for (const auto& psi : s.weights())
            if (rootsys::pairing(d, psi, *v.supporting).sign() < 0) return false;
        return true;
    }
    case VerdictKind::Stable: {
        ratlp::InteriorCertificate cert;
        cert.interior = true;
        cert.hull = ratlp::MembershipCertificate{ratlp::Membership::Inside, v.hull, {}};
        cert.directions = v.directions;
        return ratlp::verify_certificate(pts, origin, cert);
    }
    }
    return false;
}

State schubert_cell_state(const RootDatum& d, const std::vector<Weight>& support, const Weight& chi,
                          const weyl::WeylElement& w) {
    const Weight lowest = weyl::act_on_weight(w, chi);
    const std::int64_t det = d.cartan_determinant();
    std::vector<Weight> upper;
    for (const auto& nu : support) {
        const rootsys::IntVector a = d.scaled_alpha(nu - lowest);
        if (std::all_of(a.begin(), a.end(), [det](std::int64_t x) { return x >= 0 && x % det == 0; }))
            upper.push_back(nu);
    }
    if (upper.empty()) throw std::invalid_argument("w(χ) is not in the given support");
    return State(std::move(upper));
}

State schubert_cell_state(const RootDatum& d, const Weight& chi, const weyl::WeylElement& w) {
    return schubert_cell_state(d, rootsys::weight_support(d, chi), chi, w);
}

CellSweep classify_cells(const WeylGroup& g, const Weight& chi) {
    CellSweep sweep;
    sweep.chi = chi;
    sweep.hypotheses_met = polarization::check_lemma1(g, chi).passes();
    sweep.support = rootsys::weight_support(g.datum(), chi);
    sweep.cells.resize(g.size());
    const auto count = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < count; ++k)
        sweep.cells[static_cast<std::size_t>(k)] =
            detail::classify_cell(g, sweep.support, chi, static_cast<std::size_t>(k));
    return sweep;
}

Lemma2Report verify_lemma2(const WeylGroup& g, const Weight& chi) {
    Lemma2Report r;
    r.sweep = classify_cells(g, chi);
    for (std::size_t k = 0; k < r.sweep.cells.size(); ++k) {
        const CellReport& c = r.sweep.cells[k];
        if (!c.w_chi_leq_zero && c.codim < 2) {
            r.codim_implication.pass = false;
            r.codim_implication.witnesses.push_back(k);
        }
        if (c.generic_verdict.kind == VerdictKind::SemistableNotStable) {
            r.no_strictly_semistable.pass = false;
            r.no_strictly_semistable.witnesses.push_back(k);
        }
        if (c.codim <= 1 && c.generic_verdict.kind != VerdictKind::Stable) {
            r.low_codim_stable.pass = false;
            r.low_codim_stable.witnesses.push_back(k);
        }
        if (c.generic_verdict.kind == VerdictKind::Unstable &&
            (!r.min_unstable_codim || c.codim < *r.min_unstable_codim))
            r.min_unstable_codim = c.codim;
    }
    return r;
}

}  // namespace torus_git::stability

namespace torus_git::detail {

stability::CellReport classify_cell(const weyl::WeylGroup& g, const std::vector<rootsys::Weight>& support,
                                    const rootsys::Weight& chi, std::size_t k) {
    const rootsys::RootDatum& d = g.datum();
    const weyl::WeylElement& w = g[k];
    stability::CellReport c;
    c.weyl_index = k;
    c.reduced_word = w.reduced_word;
    c.length = w.length;
    c.codim = g.longest().length - w.length;
    c.w_chi = weyl::act_on_weight(w, chi);
    c.w_chi_leq_zero = rootsys::dominance_leq(d, c.w_chi, rootsys::Weight{rootsys::IntVector(d.rank(), 0)}) ==
                       rootsys::Dominance::True;
    const stability::State state = stability::schubert_cell_state(d, support, chi, w);
    c.state_size = state.size();
    c.generic_verdict = stability::classify_state(d, state);
    return c;
}

}  // namespace torus_git::detail
