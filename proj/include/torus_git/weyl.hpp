#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "torus_git/rootsys.hpp"

namespace torus_git::weyl {

using rootsys::Coweight;
using rootsys::IntVector;
using rootsys::RootDatum;
using rootsys::Weight;

inline constexpr std::size_t kDefaultWeylLimit = 1'000'000;

class EnumerationLimitExceeded : public std::runtime_error {
public:
    EnumerationLimitExceeded(std::uint64_t order, std::size_t limit);
    std::uint64_t order() const { return order_; }

private:
    std::uint64_t order_;
};

/// Enumeration guard: TORUS_GIT_MAX_WEYL when set to a positive integer,
/// kDefaultWeylLimit otherwise.
std::size_t default_weyl_limit();

/// |W| from the product of the degrees of the type.
std::uint64_t weyl_order(const RootDatum& d);

/// Weyl group element. `action` is the n×n row-major integer matrix acting on
/// ω-coordinate column vectors. Simple reflections are indexed from 0; the
/// word s_{i1} s_{i2} … s_{ik} acts as s_{i1}(s_{i2}(…(ψ))).
struct WeylElement {
    IntVector action;
    std::size_t length = 0;
    std::vector<std::size_t> reduced_word;

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action == b.action; }
};

WeylElement identity_element(const RootDatum& d);
WeylElement simple_reflection(const RootDatum& d, std::size_t i);

/// Product a·b (apply b first). The word is the concatenation and is not
/// reduced in general; `length` is recomputed from inversions.
WeylElement compose(const RootDatum& d, const WeylElement& a, const WeylElement& b);

/// Number of positive roots sent to negative roots.
std::size_t inversion_count(const RootDatum& d, const WeylElement& w);

Weight act_on_weight(const WeylElement& w, const Weight& psi);

/// Contragredient action, computed from the word: s_i(λ) = λ - <α_i, λ> α_i^∨.
Coweight act_on_coweight(const RootDatum& d, const WeylElement& w, const Coweight& lambda);

/// W-orbit of ψ by closure under simple reflections, sorted.
std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& psi);

/// Fully enumerated Weyl group. Elements are ordered by length and then
/// lexicographically by reduced word; every stored word is the
/// lexicographically smallest reduced word of its element.
class WeylGroup {
public:
    static WeylGroup enumerate(const RootDatum& d, std::size_t limit = default_weyl_limit());

    const RootDatum& datum() const { return datum_; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const WeylElement& operator[](std::size_t k) const { return elements_[k]; }

    std::size_t longest_index() const { return elements_.size() - 1; }
    const WeylElement& longest() const { return elements_.back(); }
    std::size_t identity_index() const { return 0; }

    /// Index of the element with the given action; throws std::out_of_range.
    std::size_t index_of(const WeylElement& w) const;
    std::size_t inverse_index(std::size_t k) const { return inverse_[k]; }
    /// Index of elements[a] · elements[b].
    std::size_t product_index(std::size_t a, std::size_t b) const;

private:
    RootDatum datum_;
    std::vector<WeylElement> elements_;
    std::map<IntVector, std::size_t> by_rho_image_;
    std::vector<std::size_t> inverse_;
};

WeylElement longest_element(const RootDatum& d, std::size_t limit = default_weyl_limit());
std::vector<WeylElement> enumerate_weyl(const RootDatum& d, std::size_t limit = default_weyl_limit());

/// ⟨χ, w(λ_i)⟩ via the i-th α-coordinate of w⁻¹(χ).
rootsys::Rational pairing_with_translated_coweight(const WeylGroup& g, std::size_t w_index, const Weight& chi,
                                                   std::size_t i);

}  // namespace torus_git::weyl
