#include "torus_git/wonderful.hpp"

#include <algorithm>
#include <sstream>

#include "torus_git/polarization.hpp"

namespace torus_git::wonderful {

namespace {

std::string word_string(const std::vector<std::size_t>& word) {
    if (word.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << "s" << word[i] + 1;
    return os.str();
}

std::string cell_witnesses(const stability::Lemma2Report& r, const std::vector<std::size_t>& cells) {
    std::ostringstream os;
    for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "; " : "") << word_string(r.sweep.cells[cells[k]].reduced_word);
    return os.str();
}

Check machine(std::string id, std::string description, bool pass, std::string witness = {}) {
    return Check{std::move(id), std::move(description),
                 pass ? CheckStatus::MachineCheckedPass : CheckStatus::MachineCheckedFail,
                 pass ? std::string{} : std::move(witness)};
}

Check asserted(std::string id, std::string description) {
    return Check{std::move(id), std::move(description), CheckStatus::Asserted, {}};
}

}  // namespace

const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::MachineCheckedPass: return "machine_checked_pass";
    case CheckStatus::MachineCheckedFail: return "machine_checked_fail";
    case CheckStatus::Asserted: return "asserted";
    }
    return "?";
}

bool VerificationReport::machine_checks_pass() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const Check& c) { return c.status == CheckStatus::MachineCheckedFail; });
}

const Check* VerificationReport::find(const std::string& id) const {
    const auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.id == id; });
    return it == checks.end() ? nullptr : &*it;
}

WonderfulModel build_model(const WeylGroup& g, const Weight& chi) {
    const RootDatum& d = g.datum();
    WonderfulModel m;
    m.datum = d;
    m.chi = chi;
    m.support = rootsys::weight_support(d, chi);
    for (std::size_t i = 0; i < d.rank(); ++i) m.boundary.push_back({i, d.simple_root(i)});
    m.closed_orbit.first = chi;
    m.closed_orbit.second = -chi;
    m.closed_orbit.translated = -weyl::act_on_weight(g.longest(), chi);
    return m;
}

State identity_state(const WonderfulModel& m) {
    std::vector<Weight> negated;
    negated.reserve(m.support.size());
    for (const auto& nu : m.support) negated.push_back(-nu);
    return State(std::move(negated));
}

Restriction closed_orbit_restriction(const WeylGroup& g, const WonderfulModel& m) {
    const RootDatum& d = g.datum();
    Restriction r;
    r.first = m.closed_orbit.first;
    r.second = m.closed_orbit.second;
    r.translated = m.closed_orbit.translated;
    for (const auto& b : m.boundary) r.boundary.emplace_back(b.character, -b.character);

    std::vector<rootsys::Coweight> probes;
    for (std::size_t i = 0; i < d.rank(); ++i)
        for (const std::int64_t s : {1, -1}) {
            rootsys::Coweight c{rootsys::IntVector(d.rank(), 0)};
            c.lambda[i] = s;
            probes.push_back(c);
        }
    r.translation_validated = true;
    for (std::size_t k = 0; k < g.size() && r.translation_validated; ++k) {
        // (G/B⁻, -χ) at w·B⁻ has the single weight w(-χ).
        const State opposite({weyl::act_on_weight(g[k], r.second)});
        // Under gB⁻ ↦ g·w₀·B it becomes the T-fixed point w·w₀·B of (G/B, -w₀χ).
        const std::size_t image = g.product_index(k, g.longest_index());
        const State translated({weyl::act_on_weight(g[image], r.translated)});
        for (const auto& lambda : probes)
            if (stability::mu(d, opposite, lambda) != stability::mu(d, translated, lambda)) {
                r.translation_validated = false;
                r.mismatch = k;
                break;
            }
    }
    return r;
}

Prop1Evidence verify_prop1(const WeylGroup& g, const WonderfulModel& m) {
    const RootDatum& d = g.datum();
    const State identity = identity_state(m);
    Prop1Evidence ev{{}, {}, {}, identity, stability::classify_state(d, identity)};
    VerificationReport& rep = ev.report;

    const polarization::ChiCertificate chi_cert = polarization::check_lemma1(g, m.chi);
    rep.hypotheses_met = chi_cert.passes();
    if (!rep.hypotheses_met) rep.notes.emplace_back("hypotheses not met: χ fails a polarization condition");
    rep.checks.push_back(machine("polarization_conditions", "χ satisfies all four polarization conditions",
                                 chi_cert.passes(),
                                 chi_cert.failure ? polarization::condition_name(chi_cert.failure->condition) : ""));

    ev.restriction = closed_orbit_restriction(g, m);
    rep.checks.push_back(machine("closed_orbit_translation",
                                 "(G/B⁻, -χ) agrees with (G/B, -w₀χ) on μ at every T-fixed point",
                                 ev.restriction.translation_validated,
                                 ev.restriction.mismatch ? word_string(g[*ev.restriction.mismatch].reduced_word) : ""));

    ev.z_level = stability::verify_lemma2(g, m.closed_orbit.translated);
    const auto& z = ev.z_level;
    rep.checks.push_back(machine("z_level_codim_implication",
                                 "closed orbit, second factor: w(χ') ≰ 0 implies codim ≥ 2 for every cell",
                                 z.codim_implication.pass, cell_witnesses(z, z.codim_implication.witnesses)));
    rep.checks.push_back(machine("z_level_semistable_equals_stable",
                                 "closed orbit, second factor: no generic cell state is strictly semistable",
                                 z.no_strictly_semistable.pass, cell_witnesses(z, z.no_strictly_semistable.witnesses)));
    rep.checks.push_back(machine("z_level_low_codim_stable",
                                 "closed orbit, second factor: every cell of codim ≤ 1 has a stable generic state",
                                 z.low_codim_stable.pass, cell_witnesses(z, z.low_codim_stable.witnesses)));

    rep.min_unstable_codim_in_z = z.min_unstable_codim;
    const bool codim_z_ok = z.min_unstable_codim && *z.min_unstable_codim >= 2;
    rep.checks.push_back(machine("z_level_unstable_codim", "minimal codimension of an unstable cell in Z is at least 2",
                                 codim_z_ok,
                                 z.min_unstable_codim ? "minimum is " + std::to_string(*z.min_unstable_codim)
                                                      : "no unstable cell found"));

    if (z.min_unstable_codim) rep.derived_codim_bound_in_x = *z.min_unstable_codim + 1;
    rep.checks.push_back(asserted("boundary_codim_transfer",
                                  "unstable points of X lie in the boundary, and inside each D_i the unstable "
                                  "locus has the codimension found on Z (geometric step, not machine-checked)"));
    const bool codim_x_ok = rep.derived_codim_bound_in_x && *rep.derived_codim_bound_in_x >= 3;
    rep.checks.push_back(machine("x_level_unstable_codim",
                                 "derived codimension bound in X = (min codim in Z) + 1 is at least 3", codim_x_ok,
                                 rep.derived_codim_bound_in_x
                                     ? "bound is " + std::to_string(*rep.derived_codim_bound_in_x)
                                     : "no bound"));

    const bool identity_ok = ev.identity.contains(Weight{rootsys::IntVector(d.rank(), 0)}) &&
                             ev.identity_verdict.kind == stability::VerdictKind::Stable;
    rep.checks.push_back(machine("identity_stable", "the 1×T state of the identity contains 0 and is stable",
                                 identity_ok, stability::verdict_name(ev.identity_verdict.kind)));

    rep.checks.push_back(asserted("x_level_semistable_equals_stable",
                                  "X^ss = X^s, from Z^ss = Z^s via the B-fixed-point argument on the quotient "
                                  "(geometric step, not machine-checked)"));
    return ev;
}

VerificationReport picard_rank_report(const RootDatum& d) {
    VerificationReport rep;
    const std::size_t n = d.rank();
    if (d.type() != rootsys::SimpleType::A) {
        rep.hypotheses_met = false;
        rep.notes.emplace_back("outside theorem hypotheses: stated for PSL(n+1) (type A) only");
    } else if (n < 3) {
        rep.hypotheses_met = false;
        rep.notes.emplace_back("outside theorem hypotheses: requires n ≥ 3");
    }

    rep.picard_rank_x = n;
    rep.picard_rank_z = 2 * n;
    for (std::size_t i = 0; i < n; ++i) rep.picard_basis.push_back("X: L_{ω" + std::to_string(i + 1) + "}");

    // O(D_i) = L_{α_i}; independence in Pic(X) ≅ weight lattice is det(Cartan) ≠ 0.
    rep.checks.push_back(machine("boundary_classes_independent",
                                 "the boundary classes L_{α_i} are linearly independent (det Cartan ≠ 0)",
                                 d.cartan_determinant() != 0, "det = " + std::to_string(d.cartan_determinant())));
    rep.checks.push_back(asserted("boundary_classes_descend",
                                  "each D_i^ss descends to a divisor Z_i of Y with independent classes L_i"));
    rep.checks.push_back(asserted("pic_g_mod_t", "Pic(G/T) is the character lattice of the preimage of T"));

    if (d.type() == rootsys::SimpleType::A) {
        rep.picard_rank_y = n + n;
        for (std::size_t i = 0; i < n; ++i) rep.picard_basis.push_back("Y: L_" + std::to_string(i + 1) + " (boundary)");
        for (std::size_t i = 0; i < n; ++i) rep.picard_basis.push_back("Y: ω" + std::to_string(i + 1) + " (characters)");
        rep.checks.push_back(machine("picard_rank_y", "rank Pic(Y) = n boundary classes + n characters = 2n",
                                     *rep.picard_rank_y == 2 * n && *rep.picard_rank_y - *rep.picard_rank_x == n));
    }
    return rep;
}

Prop1Evidence verify_cor1(const WeylGroup& g, const WonderfulModel& m) {
    const RootDatum& d = g.datum();
    if (d.type() == rootsys::SimpleType::A && d.rank() <= 2)
        throw polarization::ExcludedByHypothesis("excluded by hypothesis: requires PSL(n+1) with n ≥ 3, not A" +
                                                 std::to_string(d.rank()));
    Prop1Evidence ev = verify_prop1(g, m);
    VerificationReport& rep = ev.report;
    if (d.type() != rootsys::SimpleType::A) {
        rep.hypotheses_met = false;
        rep.notes.emplace_back("corollary stated for PSL(n+1) only: freeness and smoothness lines not produced for " +
                               d.label());
        return ev;
    }
    const Check* codim = rep.find("x_level_unstable_codim");
    rep.checks.push_back(machine("cor_unstable_codim", "unstable locus of X has codimension at least 3",
                                 codim && codim->status == CheckStatus::MachineCheckedPass, "see x_level_unstable_codim"));
    rep.checks.push_back(asserted("cor_free_action",
                                  "the 1×T action on the semistable locus is free (stabilizers on Z^ss are trivial)"));
    rep.checks.push_back(asserted("cor_smooth_quotient", "X^ss//T is a smooth projective embedding of G/T"));
    return ev;
}

}  // namespace torus_git::wonderful
