#include "torus_git/polarization.hpp"

#include <algorithm>
#include <functional>

#include "kernels.hpp"

namespace torus_git::polarization {

const char* condition_name(Condition c) {
    switch (c) {
    case Condition::InNS: return "in_NS";
    case Condition::RegularDominant: return "regular_dominant";
    case Condition::ReflectionsNonneg: return "reflections_nonneg";
    case Condition::PairingsNonzero: return "pairings_nonzero";
    }
    return "?";
}

}  // namespace torus_git::polarization

namespace torus_git::detail {

using polarization::ChiCertificate;
using polarization::Condition;
using polarization::FailureWitness;

std::optional<std::size_t> zero_pairing_index(const weyl::WeylGroup& g, std::size_t k, const rootsys::Weight& chi) {
    const rootsys::Weight image = weyl::act_on_weight(g[g.inverse_index(k)], chi);
    const rootsys::IntVector a = g.datum().scaled_alpha(image);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == 0) return i;
    return std::nullopt;
}

ChiCertificate local_conditions(const rootsys::RootDatum& d, const rootsys::Weight& chi) {
    ChiCertificate cert;
    cert.chi = chi;
    const std::int64_t det = d.cartan_determinant();
    const rootsys::IntVector a = d.scaled_alpha(chi);  // det · α(χ)
    const std::size_t n = d.rank();

    std::optional<std::size_t> bad_ns, bad_regular, bad_reflection;
    for (std::size_t i = 0; i < n; ++i)
        if (!bad_ns && (a[i] < 0 || a[i] % det != 0)) bad_ns = i;
    for (std::size_t i = 0; i < n; ++i)
        if (!bad_regular && chi.omega[i] <= 0) bad_regular = i;
    // s_i(χ) = χ - ω_i(χ)·α_i only changes the i-th α-coordinate.
    for (std::size_t i = 0; i < n && !bad_reflection; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t coord = a[j] - (j == i ? det * chi.omega[i] : 0);
            if (coord < 0) {
                bad_reflection = i;
                break;
            }
        }
    }
    cert.in_ns = !bad_ns;
    cert.regular_dominant = !bad_regular;
    cert.reflections_nonneg = !bad_reflection;
    if (bad_ns)
        cert.failure = FailureWitness{Condition::InNS, *bad_ns, std::nullopt};
    else if (bad_regular)
        cert.failure = FailureWitness{Condition::RegularDominant, *bad_regular, std::nullopt};
    else if (bad_reflection)
        cert.failure = FailureWitness{Condition::ReflectionsNonneg, *bad_reflection, std::nullopt};
    return cert;
}

void finish_certificate(ChiCertificate& cert, const std::vector<std::optional<std::size_t>>& zero_index) {
    cert.pairings_nonzero = true;
    for (std::size_t k = 0; k < zero_index.size(); ++k) {
        if (!zero_index[k]) continue;
        cert.pairings_nonzero = false;
        if (!cert.failure) cert.failure = FailureWitness{Condition::PairingsNonzero, *zero_index[k], k};
        break;
    }
}

bool candidate_passes(const weyl::WeylGroup& g, const rootsys::IntVector& alpha) {
    const rootsys::RootDatum& d = g.datum();
    const rootsys::Weight chi = d.from_alpha(alpha);
    if (!rootsys::is_regular_dominant(chi)) return false;
    for (std::size_t i = 0; i < d.rank(); ++i)
        if (alpha[i] < chi.omega[i]) return false;
    for (const auto& w : g.elements()) {
        const rootsys::IntVector a = d.scaled_alpha(weyl::act_on_weight(w, chi));
        if (std::find(a.begin(), a.end(), 0) != a.end()) return false;
    }
    return true;
}

}  // namespace torus_git::detail

namespace torus_git::polarization {

ChiCertificate check_lemma1(const WeylGroup& g, const Weight& chi) {
    ChiCertificate cert = detail::local_conditions(g.datum(), chi);
    std::vector<std::optional<std::size_t>> zero_index(g.size());
    const auto count = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < count; ++k)
        zero_index[static_cast<std::size_t>(k)] = detail::zero_pairing_index(g, static_cast<std::size_t>(k), chi);
    detail::finish_certificate(cert, zero_index);
    return cert;
}

bool witness_reproduces(const WeylGroup& g, const Weight& chi, const FailureWitness& w) {
    const RootDatum& d = g.datum();
    if (w.index >= d.rank()) return false;
    const rootsys::RatVector alpha = rootsys::alpha_coords(d, chi);
    switch (w.condition) {
    case Condition::InNS: return alpha[w.index].sign() < 0 || !alpha[w.index].is_integer();
    case Condition::RegularDominant: return chi.omega[w.index] <= 0;
    case Condition::ReflectionsNonneg: {
        const rootsys::RatVector reflected = rootsys::alpha_coords(d, rootsys::reflect(d, chi, w.index));
        return std::any_of(reflected.begin(), reflected.end(), [](const auto& x) { return x.sign() < 0; });
    }
    case Condition::PairingsNonzero: {
        if (!w.weyl_index || *w.weyl_index >= g.size()) return false;
        // Independent route: translate the coweight instead of the weight.
        Coweight lambda_i{IntVector(d.rank(), 0)};
        lambda_i.lambda[w.index] = 1;
        const Coweight moved = weyl::act_on_coweight(d, g[*w.weyl_index], lambda_i);
        return rootsys::pairing(d, chi, moved).is_zero();
    }
    }
    return false;
}

std::vector<IntVector> graded_lex_box(std::size_t n, std::size_t bound) {
    std::vector<IntVector> out;
    IntVector cur(n, 0);
    // Lex-ascending compositions of `total` into n parts.
    std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t pos, std::int64_t remaining) {
        if (pos + 1 == n) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (std::int64_t v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            fill(pos + 1, remaining - v);
        }
    };
    if (n == 0) return out;
    for (std::size_t total = 0; total <= bound; ++total) fill(0, static_cast<std::int64_t>(total));
    return out;
}

std::vector<Weight> search_chi(const WeylGroup& g, std::size_t height_bound) {
    const std::vector<IntVector> candidates = graded_lex_box(g.datum().rank(), height_bound);
    std::vector<char> pass(candidates.size(), 0);
    const auto count = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t c = 0; c < count; ++c)
        pass[static_cast<std::size_t>(c)] = detail::candidate_passes(g, candidates[static_cast<std::size_t>(c)]) ? 1 : 0;
    std::vector<Weight> out;
    for (std::size_t c = 0; c < candidates.size(); ++c)
        if (pass[c]) out.push_back(g.datum().from_alpha(candidates[c]));
    return out;
}

ProofPathResult construct_chi_proof_path(const WeylGroup& g, const ProofPathOptions& opts) {
    const RootDatum& d = g.datum();
    const std::size_t n = d.rank();
    if (n < 2) throw ExcludedByHypothesis("excluded by hypothesis: rank must be at least 2");
    if (d.type() == rootsys::SimpleType::A && n == 2)
        throw ExcludedByHypothesis("excluded by hypothesis: root system A2");

    ProofPathResult res;
    res.determinant = d.cartan_determinant();
    const IntVector two_rho_alpha = rootsys::integral_alpha_coords(d, rootsys::two_rho(d));

    // m·s_i(2ρ) - N·α_i = m·(2ρ - 2α_i) - N·α_i in α-coordinates.
    auto intermediate = [&](std::int64_t m) {
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < n; ++i) {
            IntVector v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = m * two_rho_alpha[j];
            v[i] -= 2 * m + res.determinant;
            rows.push_back(std::move(v));
        }
        return rows;
    };
    auto all_nonneg = [](const std::vector<IntVector>& rows) {
        return std::all_of(rows.begin(), rows.end(), [](const IntVector& v) {
            return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
        });
    };

    // Only the i-th coordinate of row i can be negative: m·(2ρ_i - 2) - N.
    res.m_min = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t slope = two_rho_alpha[i] - 2;
        if (slope <= 0) throw SearchExhausted("no m with m·s_i(2ρ) - N·α_i in ℕS for every i");
        res.m_min = std::max(res.m_min, (res.determinant + slope - 1) / slope);
    }
    if (!all_nonneg(intermediate(res.m_min))) throw std::logic_error("minimal m does not satisfy the claim");

    const std::vector<IntVector> ks = graded_lex_box(n, opts.k_bound);
    const Weight rho2 = rootsys::two_rho(d);
    for (std::int64_t m = res.m_min; m <= res.m_min + static_cast<std::int64_t>(opts.max_m_steps); ++m) {
        for (const auto& k : ks) {
            Weight chi = m * rho2;
            for (std::size_t i = 0; i < n; ++i) chi.omega[i] += k[i] * res.determinant;
            ChiCertificate cert = check_lemma1(g, chi);
            if (!cert.passes()) continue;
            res.chi = chi;
            res.m = m;
            res.k = k;
            res.intermediate = intermediate(m);
            res.intermediate_in_ns = all_nonneg(res.intermediate);
            res.certificate = std::move(cert);
            return res;
        }
    }
    throw SearchExhausted("no candidate 2mρ + Σ k_i·N·ω_i passed within the search bounds");
}

}  // namespace torus_git::polarization
