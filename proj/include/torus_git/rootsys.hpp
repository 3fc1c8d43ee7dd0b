#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "torus_git/linalg.hpp"
#include "torus_git/rational.hpp"

namespace torus_git::rootsys {

using ratlp::RatMatrix;
using ratlp::Rational;
using ratlp::RatVector;
using IntVector = std::vector<std::int64_t>;

enum class SimpleType { A, B, C, D, E, F, G };

char type_letter(SimpleType t);
SimpleType parse_type(char letter);  // throws InvalidRootDatum

class InvalidRootDatum : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInRootLattice : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Character of the maximal torus, in fundamental-weight coordinates:
/// omega[i] = <ψ, α_i^∨>.
struct Weight {
    IntVector omega;

    std::size_t rank() const { return omega.size(); }
    bool is_zero() const;
    bool is_dominant() const;

    Weight operator-() const;
    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a, const Weight& b);
    friend Weight operator*(std::int64_t k, const Weight& a);
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// One-parameter subgroup in the basis λ_j dual to the simple roots:
/// <α_i, λ_j> = δ_ij.
struct Coweight {
    IntVector lambda;

    std::size_t rank() const { return lambda.size(); }
    bool is_zero() const;
    friend bool operator==(const Coweight&, const Coweight&) = default;
    friend auto operator<=>(const Coweight&, const Coweight&) = default;
};

/// Cartan data of a simple root system. The Cartan matrix follows the
/// convention cartan[i][j] = <α_j, α_i^∨>, so column j holds the
/// ω-coordinates of α_j and ω = cartan · α for every weight.
class RootDatum {
public:
    SimpleType type() const { return type_; }
    std::size_t rank() const { return rank_; }
    std::string label() const;

    const std::vector<IntVector>& cartan() const { return cartan_; }
    const RatMatrix& inverse_cartan() const { return inverse_cartan_; }
    std::int64_t cartan_determinant() const { return determinant_; }

    /// Positive roots in α-coordinates, sorted by height then lexicographically.
    const std::vector<IntVector>& positive_roots() const { return positive_roots_; }

    /// `determinant · (1,…,1) · cartan⁻¹`: pairing with an ω-vector gives the
    /// height of that weight scaled by the determinant.
    const IntVector& scaled_height_row() const { return height_row_; }

    /// `determinant · α-coordinates` of ψ, exact in integers.
    IntVector scaled_alpha(const Weight& w) const;

    Weight simple_root(std::size_t i) const;
    Weight fundamental_weight(std::size_t i) const;
    Weight from_alpha(const IntVector& alpha) const;

    friend RootDatum build_root_datum(SimpleType type, std::size_t rank);

private:
    SimpleType type_ = SimpleType::A;
    std::size_t rank_ = 0;
    std::vector<IntVector> cartan_;
    RatMatrix inverse_cartan_;
    std::int64_t determinant_ = 0;
    std::vector<IntVector> positive_roots_;
    IntVector height_row_;
    std::vector<IntVector> scaled_inverse_;  // determinant · cartan⁻¹
};

/// Builds the root datum for a simple type with Bourbaki numbering.
/// Valid: A_n (n≥1), B_n (n≥2), C_n (n≥2), D_n (n≥4), E_6..E_8, F_4, G_2.
RootDatum build_root_datum(SimpleType type, std::size_t rank);

RatVector alpha_coords(const RootDatum& d, const Weight& w);

/// Height Σ α-coordinates, exactly.
Rational height(const RootDatum& d, const Weight& w);

/// α-coordinates when all are integers.
bool in_root_lattice(const RootDatum& d, const Weight& w);
IntVector integral_alpha_coords(const RootDatum& d, const Weight& w);  // throws NotInRootLattice

Rational pairing(const RootDatum& d, const Weight& w, const Coweight& c);

enum class Dominance { True, False, NonIntegral };

/// w1 ≤ w2 iff w2 - w1 is a nonnegative integer combination of simple
/// roots. NonIntegral: coordinates nonnegative but not all integral.
Dominance dominance_leq(const RootDatum& d, const Weight& w1, const Weight& w2);

Weight two_rho(const RootDatum& d);

bool is_regular_dominant(const Weight& w);

/// s_i(ψ) = ψ - <ψ, α_i^∨> α_i.
Weight reflect(const RootDatum& d, const Weight& w, std::size_t i);

/// Dominant ν with ν ≤ χ, sorted. χ must be dominant and in the root lattice.
std::vector<Weight> dominant_weights_leq(const RootDatum& d, const Weight& chi);

/// Weights of the irreducible representation with highest weight χ
/// (support only), sorted. Same preconditions as dominant_weights_leq.
std::vector<Weight> weight_support(const RootDatum& d, const Weight& chi);

}  // namespace torus_git::rootsys
