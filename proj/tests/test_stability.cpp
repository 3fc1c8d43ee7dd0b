#include <doctest.h>

#include <set>

#include "common.hpp"
#include "oracles.hpp"
#include "torus_git/polarization.hpp"

using namespace testing;
using stability::State;
using stability::VerdictKind;

namespace {

oracle::Kind to_oracle(VerdictKind k) {
    switch (k) {
    case VerdictKind::Unstable: return oracle::Kind::Unstable;
    case VerdictKind::SemistableNotStable: return oracle::Kind::SemistableNotStable;
    case VerdictKind::Stable: return oracle::Kind::Stable;
    }
    return oracle::Kind::Unstable;
}

rootsys::Coweight fundamental(std::size_t n, std::size_t i) {
    rootsys::Coweight c{IntVector(n, 0)};
    c.lambda[i] = 1;
    return c;
}

}  // namespace

TEST_SUITE("stability") {

TEST_CASE("State normalizes") {
    const State s({Weight{{1, 0}}, Weight{{0, 1}}, Weight{{1, 0}}});
    CHECK(s.size() == 2);
    CHECK(s.contains(Weight{{0, 1}}));
    CHECK_THROWS(State({}));
}

TEST_CASE("mu examples") {
    const auto& g = group('A', 3);
    const auto& d = g.datum();
    const Weight chi{{3, 3, 1}};
    CHECK(stability::mu(d, State({chi}), fundamental(3, 0)) == Rational(-4));
    CHECK(stability::mu(d, State({chi}), rootsys::Coweight{{0, 0, 0}}) == Rational(0));
    CHECK(stability::mu(d, State({weyl::act_on_weight(g.longest(), chi)}), fundamental(3, 0)) == Rational(3));
    // Positive homogeneity.
    const State s(rootsys::weight_support(d, Weight{{1, 0, 1}}));
    const rootsys::Coweight l{{2, -1, 3}}, l3{{6, -3, 9}};
    CHECK(stability::mu(d, s, l3) == Rational(3) * stability::mu(d, s, l));
}

TEST_CASE("classify_state examples") {
    const auto& g = group('A', 3);
    const auto& d = g.datum();
    const Weight chi{{3, 3, 1}};
    const auto single = stability::classify_state(d, State({chi}));
    CHECK(single.kind == VerdictKind::Unstable);
    REQUIRE(single.destabilizer.has_value());
    CHECK(stability::mu(d, State({chi}), *single.destabilizer) < Rational(0));

    const State full(rootsys::weight_support(d, chi));
    CHECK(full.contains(Weight{{0, 0, 0}}));
    const auto v = stability::classify_state(d, full);
    CHECK(v.kind == VerdictKind::Stable);
    CHECK(stability::verify_verdict(d, full, v));

    const State seg({d.simple_root(0), -d.simple_root(0)});
    const auto sv = stability::classify_state(d, seg);
    CHECK(sv.kind == VerdictKind::SemistableNotStable);
    REQUIRE(sv.supporting.has_value());
    CHECK_FALSE(sv.supporting->is_zero());
    CHECK(stability::verify_verdict(d, seg, sv));
}

TEST_CASE("classify_state agrees with the geometric oracles") {
    for (const auto& [t, n] : {std::pair{'A', 2}, {'A', 3}, {'G', 2}, {'B', 3}}) {
        const auto d = datum(t, n);
        int kinds[3] = {0, 0, 0};
        for (int trial = 0; trial < 150; ++trial) {
            std::vector<Weight> ws;
            const auto count = uniform(1, 7);
            for (int k = 0; k < count; ++k) {
                Weight w{IntVector(n)};
                for (auto& x : w.omega) x = uniform(-2, 2);
                ws.push_back(w);
            }
            if (trial % 5 == 0) ws.push_back(-ws.front());  // bias toward boundary cases
            const State s(ws);
            const auto v = stability::classify_state(d, s);
            CHECK(stability::verify_verdict(d, s, v));
            CHECK(to_oracle(v.kind) == oracle::classify(omega_points(s)));
            ++kinds[static_cast<int>(v.kind)];
        }
        CHECK(kinds[0] > 0);
        CHECK(kinds[1] > 0);
        CHECK(kinds[2] > 0);
    }
}

TEST_CASE("tampered verdicts fail verification") {
    const auto d = datum('A', 2);
    const State s({Weight{{1, 0}}, Weight{{-1, 1}}, Weight{{0, -1}}});
    auto v = stability::classify_state(d, s);
    REQUIRE(v.kind == VerdictKind::Stable);
    auto wrong = v;
    wrong.kind = VerdictKind::Unstable;
    wrong.destabilizer = rootsys::Coweight{{1, 0}};
    CHECK_FALSE(stability::verify_verdict(d, s, wrong));
    v.hull[0] = v.hull[0] + Rational(1);
    CHECK_FALSE(stability::verify_verdict(d, s, v));
}

TEST_CASE("mu is W-equivariant") {
    const auto& g = group('B', 3);
    const auto& d = g.datum();
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Weight> ws;
        for (int k = 0; k < 4; ++k) {
            Weight w{IntVector(3)};
            for (auto& x : w.omega) x = uniform(-3, 3);
            ws.push_back(w);
        }
        const State s(ws);
        rootsys::Coweight lambda{IntVector(3)};
        for (auto& x : lambda.lambda) x = uniform(-3, 3);
        for (const auto& w : g.elements()) {
            std::vector<Weight> moved;
            for (const auto& psi : s.weights()) moved.push_back(weyl::act_on_weight(w, psi));
            CHECK(stability::mu(d, State(moved), weyl::act_on_coweight(d, w, lambda)) == stability::mu(d, s, lambda));
        }
    }
}

TEST_CASE("schubert_cell_state") {
    const auto& g = group('A', 3);
    const auto& d = g.datum();
    const Weight chi{{3, 3, 1}};
    const auto support = rootsys::weight_support(d, chi);
    CHECK(stability::schubert_cell_state(d, support, chi, g.longest()).weights() == support);
    CHECK(stability::schubert_cell_state(d, support, chi, g[0]).weights() == std::vector<Weight>{chi});
    for (const auto& w : g.elements()) {
        const State s = stability::schubert_cell_state(d, support, chi, w);
        const Weight low = weyl::act_on_weight(w, chi);
        CHECK(s.contains(low));
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(stability::mu(d, s, fundamental(3, i)) == -rootsys::pairing(d, low, fundamental(3, i)));
        CHECK(stability::mu(d, s, fundamental(3, 0)) == -rootsys::alpha_coords(d, low)[0]);
    }
}

TEST_CASE("classify_cells examples for A3 χ = (3,3,1)") {
    const auto& g = group('A', 3);
    const auto sweep = stability::classify_cells(g, Weight{{3, 3, 1}});
    CHECK(sweep.hypotheses_met);
    REQUIRE(sweep.cells.size() == 24);
    const auto& top = sweep.cells.back();
    CHECK(top.codim == 0);
    CHECK(top.w_chi_leq_zero);
    CHECK(top.generic_verdict.kind == VerdictKind::Stable);
    const auto& e = sweep.cells.front();
    CHECK(e.codim == 6);
    CHECK(e.generic_verdict.kind == VerdictKind::Unstable);
    for (const auto& c : sweep.cells) {
        CHECK(c.codim + c.length == 6);
        if (c.length == 5) CHECK(c.w_chi_leq_zero);
        CHECK(c.generic_verdict.kind != VerdictKind::SemistableNotStable);
        const State s = stability::schubert_cell_state(g.datum(), sweep.support, sweep.chi, g[c.weyl_index]);
        CHECK(s.size() == c.state_size);
        CHECK(stability::verify_verdict(g.datum(), s, c.generic_verdict));
    }
}

TEST_CASE("unstable cells are destabilized by some w(λ_i)") {
    for (const auto& [t, n, chi] : {std::tuple{'A', 2, Weight{{2, 2}}}, std::tuple{'A', 3, Weight{{3, 3, 1}}},
                                     std::tuple{'A', 3, Weight{{2, 2, 2}}}}) {
        const auto& g = group(t, n);
        const auto& d = g.datum();
        const auto sweep = stability::classify_cells(g, chi);
        for (const auto& c : sweep.cells) {
            const State s = stability::schubert_cell_state(d, sweep.support, chi, g[c.weyl_index]);
            bool found = false;
            for (const auto& w : g.elements())
                for (std::size_t i = 0; i < n && !found; ++i)
                    found = stability::mu(d, s, weyl::act_on_coweight(d, w, fundamental(n, i))) < Rational(0);
            CHECK(found == (c.generic_verdict.kind == VerdictKind::Unstable));
        }
    }
}

TEST_CASE("verify_lemma2") {
    const auto& g = group('A', 3);
    const auto ok = stability::verify_lemma2(g, Weight{{3, 3, 1}});
    CHECK(ok.all_pass());
    CHECK(ok.min_unstable_codim == 2);

    const auto rho = stability::verify_lemma2(g, Weight{{2, 2, 2}});
    CHECK(rho.codim_implication.pass);
    CHECK_FALSE(rho.no_strictly_semistable.pass);
    REQUIRE_FALSE(rho.no_strictly_semistable.witnesses.empty());
    const auto& witness = rho.sweep.cells[rho.no_strictly_semistable.witnesses.front()];
    CHECK(witness.generic_verdict.kind == VerdictKind::SemistableNotStable);
    CHECK(rho.low_codim_stable.pass);

    const auto b3 = stability::verify_lemma2(group('B', 3), Weight{{2, 1, 2}});
    CHECK(b3.all_pass());
    CHECK(b3.min_unstable_codim == 3);
}

TEST_CASE("every Lemma-1 χ in A3 up to height 16 passes Lemma 2") {
    const auto& g = group('A', 3);
    for (const auto& chi : polarization::search_chi(g, 16)) {
        CAPTURE(chi.omega);
        const auto r = stability::verify_lemma2(g, chi);
        CHECK(r.all_pass());
        REQUIRE(r.min_unstable_codim.has_value());
        CHECK(*r.min_unstable_codim >= 2);
    }
}

TEST_CASE("parallel and serial classify_cells agree") {
    const auto& g = group('A', 3);
    for (const auto& chi : {Weight{{3, 3, 1}}, Weight{{2, 2, 2}}}) {
        const auto p = stability::classify_cells(g, chi);
        const auto s = stability::reference::classify_cells(g, chi);
        REQUIRE(p.cells.size() == s.cells.size());
        CHECK(p.support == s.support);
        CHECK(p.hypotheses_met == s.hypotheses_met);
        for (std::size_t k = 0; k < p.cells.size(); ++k) {
            CHECK(p.cells[k].generic_verdict.kind == s.cells[k].generic_verdict.kind);
            CHECK(p.cells[k].generic_verdict.hull == s.cells[k].generic_verdict.hull);
            CHECK(p.cells[k].generic_verdict.destabilizer == s.cells[k].generic_verdict.destabilizer);
            CHECK(p.cells[k].w_chi == s.cells[k].w_chi);
        }
    }
}

}  // TEST_SUITE
