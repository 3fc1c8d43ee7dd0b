#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "torus_git/rootsys.hpp"
#include "torus_git/stability.hpp"
#include "torus_git/weyl.hpp"

namespace testing {

using namespace torus_git;
using rootsys::IntVector;
using rootsys::Weight;
using ratlp::Rational;
using ratlp::RatVector;

inline RatVector rats(const std::vector<std::int64_t>& v) { return RatVector(v.begin(), v.end()); }

inline rootsys::RootDatum datum(char t, std::size_t n) { return rootsys::build_root_datum(rootsys::parse_type(t), n); }

inline const weyl::WeylGroup& group(char t, std::size_t n) {
    static std::map<std::pair<char, std::size_t>, weyl::WeylGroup> cache;
    const auto key = std::pair{t, n};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, weyl::WeylGroup::enumerate(datum(t, n))).first;
    return it->second;
}

inline std::vector<RatVector> omega_points(const stability::State& s) {
    std::vector<RatVector> out;
    for (const auto& w : s.weights()) out.push_back(rats(w.omega));
    return out;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace testing
