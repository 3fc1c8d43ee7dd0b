#include <doctest.h>

#include "common.hpp"
#include "oracles.hpp"
#include "torus_git/polarization.hpp"

using namespace testing;
using polarization::Condition;

TEST_SUITE("polarization") {

TEST_CASE("check_lemma1 examples") {
    const auto& g = group('A', 3);
    const auto ok = polarization::check_lemma1(g, Weight{{3, 3, 1}});
    CHECK(ok.passes());
    CHECK_FALSE(ok.failure.has_value());

    const auto rho = polarization::check_lemma1(g, Weight{{2, 2, 2}});
    CHECK(rho.in_ns);
    CHECK(rho.regular_dominant);
    CHECK(rho.reflections_nonneg);
    CHECK_FALSE(rho.pairings_nonzero);
    REQUIRE(rho.failure.has_value());
    CHECK(rho.failure->condition == Condition::PairingsNonzero);
    CHECK(rho.failure->index == 1);  // λ₂
    REQUIRE(rho.failure->weyl_index.has_value());
    CHECK(polarization::witness_reproduces(g, Weight{{2, 2, 2}}, *rho.failure));

    const auto w1 = polarization::check_lemma1(g, g.datum().fundamental_weight(0));
    CHECK_FALSE(w1.in_ns);
    REQUIRE(w1.failure.has_value());
    CHECK(w1.failure->condition == Condition::InNS);
    CHECK(polarization::witness_reproduces(g, g.datum().fundamental_weight(0), *w1.failure));
}

TEST_CASE("check_lemma1 agrees with the permutation oracle on every box point") {
    for (const auto n : {2, 3, 4}) {
        const auto& g = group('A', static_cast<std::size_t>(n));
        const std::size_t bound = n == 4 ? 14 : 16;
        for (const auto& alpha : polarization::graded_lex_box(static_cast<std::size_t>(n), bound)) {
            const Weight chi = g.datum().from_alpha(alpha);
            const auto lib = polarization::check_lemma1(g, chi);
            const auto orc = oracle::type_a_lemma1(chi.omega);
            CAPTURE(chi.omega);
            CHECK(lib.in_ns == orc.in_ns);
            CHECK(lib.regular_dominant == orc.regular_dominant);
            CHECK(lib.reflections_nonneg == orc.reflections_nonneg);
            CHECK(lib.pairings_nonzero == orc.pairings_nonzero);
        }
    }
}

TEST_CASE("failure witnesses reproduce") {
    for (const auto& [t, n] : {std::pair{'A', 3}, {'B', 3}, {'G', 2}}) {
        const auto& g = group(t, n);
        for (int trial = 0; trial < 60; ++trial) {
            Weight chi{IntVector(n)};
            for (auto& x : chi.omega) x = uniform(-2, 6);
            const auto cert = polarization::check_lemma1(g, chi);
            CHECK(cert.passes() == !cert.failure.has_value());
            if (cert.failure) CHECK(polarization::witness_reproduces(g, chi, *cert.failure));
        }
    }
}

TEST_CASE("graded_lex_box order") {
    const auto box = polarization::graded_lex_box(2, 2);
    const std::vector<IntVector> expected{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
    CHECK(box == expected);
    CHECK(polarization::graded_lex_box(3, 4).size() == 35);
}

TEST_CASE("search_chi") {
    const auto& a3 = group('A', 3);
    const auto found = polarization::search_chi(a3, 12);
    REQUIRE_FALSE(found.empty());
    CHECK(std::find(found.begin(), found.end(), Weight{{3, 3, 1}}) != found.end());
    CHECK(found.front() == Weight{{1, 3, 3}});
    CHECK(polarization::search_chi(a3, 11).empty());  // minimal height is 12
    CHECK(polarization::search_chi(a3, 3).empty());
    CHECK(polarization::search_chi(a3, 20).size() == 16);
    CHECK(polarization::search_chi(group('A', 2), 30).empty());
    const auto b3 = polarization::search_chi(group('B', 3), 20);
    REQUIRE(b3.size() == 3);
    CHECK(b3.front() == Weight{{2, 1, 2}});
    for (const auto& chi : polarization::search_chi(a3, 20)) {
        CHECK(polarization::reference::check_lemma1(a3, chi).passes());
        CHECK(oracle::type_a_lemma1(chi.omega).passes());
        // Every s_i(χ) lies in ℕS.
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(rootsys::dominance_leq(a3.datum(), Weight{{0, 0, 0}}, rootsys::reflect(a3.datum(), chi, i)) ==
                  rootsys::Dominance::True);
    }
}

TEST_CASE("passing is preserved by positive scaling") {
    const auto& g = group('A', 3);
    for (const auto& chi : polarization::search_chi(g, 16))
        for (const std::int64_t k : {2, 3, 5}) CHECK(polarization::check_lemma1(g, k * chi).passes());
}

TEST_CASE("parallel and serial drivers agree") {
    for (const auto& [t, n] : {std::pair{'A', 3}, {'A', 4}, {'B', 3}}) {
        const auto& g = group(t, n);
        CHECK(polarization::search_chi(g, 18) == polarization::reference::search_chi(g, 18));
        for (int trial = 0; trial < 20; ++trial) {
            Weight chi{IntVector(n)};
            for (auto& x : chi.omega) x = uniform(0, 5);
            const auto p = polarization::check_lemma1(g, chi);
            const auto s = polarization::reference::check_lemma1(g, chi);
            CHECK(p.passes() == s.passes());
            CHECK(p.failure.has_value() == s.failure.has_value());
            if (p.failure && s.failure) {
                CHECK(p.failure->condition == s.failure->condition);
                CHECK(p.failure->index == s.failure->index);
                CHECK(p.failure->weyl_index == s.failure->weyl_index);
            }
        }
    }
}

TEST_CASE("construct_chi_proof_path") {
    const auto& a3 = group('A', 3);
    const auto r = polarization::construct_chi_proof_path(a3);
    CHECK(r.determinant == 4);
    CHECK(r.m == 4);
    CHECK(r.m_min == 4);
    CHECK(r.k == IntVector{0, 0, 1});
    CHECK(r.chi == Weight{{8, 8, 12}});
    CHECK(r.intermediate_in_ns);
    CHECK(r.certificate.passes());
    CHECK(polarization::reference::check_lemma1(a3, r.chi).passes());
    // Shape: 2mρ + Σ k_i N ω_i.
    Weight expect = r.m * rootsys::two_rho(a3.datum());
    for (std::size_t i = 0; i < 3; ++i) expect.omega[i] += r.k[i] * r.determinant;
    CHECK(expect == r.chi);

    const auto a4 = polarization::construct_chi_proof_path(group('A', 4));
    CHECK(a4.chi == Weight{{6, 6, 6, 11}});
    CHECK(a4.m == 3);
    CHECK(a4.certificate.passes());

    CHECK_THROWS_AS(polarization::construct_chi_proof_path(group('A', 2)), polarization::ExcludedByHypothesis);
    CHECK_THROWS_AS(polarization::construct_chi_proof_path(group('A', 1)), polarization::ExcludedByHypothesis);
}

TEST_CASE("s_1(2ρ) in ℕS for A3") {
    const auto d = datum('A', 3);
    const auto a = rootsys::alpha_coords(d, rootsys::reflect(d, rootsys::two_rho(d), 0));
    CHECK(a == rats({1, 4, 3}));
}

}  // TEST_SUITE
