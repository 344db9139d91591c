#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "latmono/lattice.hpp"
#include "latmono/matrix.hpp"

namespace latmono {

/// Discriminant group A_L = L*/L of an even nondegenerate lattice together
/// with q_L : A_L → Q/2Z and b_L : A_L × A_L → Q/Z.
///
/// Elements are coordinate vectors with respect to generators g₁..g_k of
/// orders d₁ | … | d_k (the elementary divisors > 1 of the Gram matrix).
class FiniteQuadraticForm {
 public:
  const IntVector& divisors() const noexcept { return divisors_; }
  std::size_t generator_count() const noexcept { return divisors_.size(); }
  /// Columns are representatives of the generators in L ⊗ Q (lattice coordinates).
  const RatMatrix& generator_lifts() const noexcept { return lifts_; }

  Integer order() const;
  bool is_trivial() const noexcept { return divisors_.empty(); }
  bool is_two_elementary() const;

  /// q(x) reduced into [0, 2).
  Rational q(const IntVector& coords) const;
  /// b(x, y) reduced into [0, 1).
  Rational b(const IntVector& x, const IntVector& y) const;

  /// Class in A_L of a vector of L* (rational lattice coordinates).
  IntVector coordinates(const RatVector& dual_vector) const;
  RatVector lift(const IntVector& coords) const;

  /// All elements in lexicographic coordinate order. Throws if |A_L| > limit.
  std::vector<IntVector> elements(std::size_t limit = 1u << 16) const;

 private:
  friend FiniteQuadraticForm discriminant_form(const Lattice&);

  IntVector divisors_;
  RatMatrix lifts_;
  IntMatrix coordinate_map_;  // rows of U·G for the nontrivial divisors
  RatMatrix value_gram_;      // exact ⟨g̃ᵢ, g̃ⱼ⟩
};

/// Throws std::invalid_argument for odd or degenerate lattices.
FiniteQuadraticForm discriminant_form(const Lattice& lattice);

bool is_2_elementary(const Lattice& lattice);

/// Element of Q/2Z with denominator dividing 4, kept as a numerator mod 8.
class QuarterMod2 {
 public:
  constexpr QuarterMod2() = default;
  static QuarterMod2 from_rational(const Rational& r);

  constexpr std::uint8_t quarters() const noexcept { return quarters_; }
  constexpr QuarterMod2 operator-() const noexcept { return QuarterMod2(static_cast<std::uint8_t>((8 - quarters_) % 8)); }
  Rational value() const {
    Rational r(quarters_, 4);
    r.canonicalize();
    return r;
  }
  friend constexpr bool operator==(QuarterMod2, QuarterMod2) = default;

 private:
  constexpr explicit QuarterMod2(std::uint8_t q) : quarters_(q) {}
  std::uint8_t quarters_ = 0;
};

/// Packed element of (Z/2)^r: coordinate j is bit (r − 1 − j), so integer
/// order is lexicographic order of coordinate vectors.
using F2Element = std::uint32_t;

/// Linear map of (Z/2)^r given by the images of the generators.
struct F2Linear {
  int rank = 0;
  std::vector<F2Element> images;

  static F2Linear identity(int rank);
  F2Element apply(F2Element x) const;
  F2Linear compose(const F2Linear& inner) const;  // this ∘ inner
  bool is_invertible() const;
  friend bool operator==(const F2Linear&, const F2Linear&) = default;
};

/// Table form of a 2-elementary discriminant form (rank ≤ 16).
class TwoElementaryForm {
 public:
  explicit TwoElementaryForm(const FiniteQuadraticForm& form);

  int rank() const noexcept { return rank_; }
  F2Element size() const noexcept { return F2Element{1} << rank_; }
  F2Element generator(int j) const noexcept { return F2Element{1} << (rank_ - 1 - j); }

  QuarterMod2 q(F2Element x) const { return q_table_[x]; }
  /// 2·b(x, y) mod 2, i.e. true iff b(x, y) = 1/2.
  bool b(F2Element x, F2Element y) const;

  IntVector coordinates(F2Element x) const;
  F2Element encode(const IntVector& coords) const;

  /// True iff q(map(x)) = q(x) for every element x.
  bool preserves(const F2Linear& map) const;

 private:
  int rank_ = 0;
  std::vector<QuarterMod2> q_table_;
  std::vector<F2Element> bilinear_rows_;  // bit k of row j: 2·b(gⱼ, g_k)
};

/// Image of an isometry of L on A_L, as images of the generators.
struct DiscriminantAutomorphism {
  std::vector<IntVector> images;
  F2Linear to_f2(const TwoElementaryForm& form) const;
};

/// Action on A_L of an isometry M (x ↦ M·x) of L. Verifies that q is
/// preserved; throws std::invalid_argument if M is not an isometry.
DiscriminantAutomorphism induced_discriminant_action(const Lattice& lattice, const IntMatrix& m);
DiscriminantAutomorphism induced_discriminant_action(const Lattice& lattice, const FiniteQuadraticForm& form,
                                                     const IntMatrix& m);

/// Anti-isometry γ : A_S → A_T with q_T(γx) ≡ −q_S(x) (mod 2Z).
struct GlueMap {
  FiniteQuadraticForm source;
  FiniteQuadraticForm target;
  F2Linear map;

  F2Element apply(F2Element x) const { return map.apply(x); }
  /// Exhaustive check of the anti-isometry condition over all of A_S.
  bool is_anti_isometry() const;
};

using GlueFilter = std::function<bool(const F2Linear&)>;

/// Depth-first search over images of the generators of A_S in
/// lexicographic order; returns the first anti-isometry accepted by
/// `accept` (any, when no filter is given). Both forms must be 2-elementary.
std::optional<GlueMap> find_anti_isometry(const FiniteQuadraticForm& source, const FiniteQuadraticForm& target,
                                          const GlueFilter& accept = {});

/// Overlattice of S ⊕ T generated by S ⊕ T and the graph of γ.
struct Overlattice {
  Lattice lattice;
  RatMatrix basis;          // columns in S ⊕ T coordinates
  IntMatrix first_basis;    // S inside the overlattice (columns)
  IntMatrix second_basis;   // T inside the overlattice (columns)
  Integer index;            // [overlattice : S ⊕ T]
};

/// Throws std::invalid_argument if γ does not give an integral even glue.
Overlattice glue_overlattice(const Lattice& s, const Lattice& t, const GlueMap& glue);

struct OrthogonalGroup {
  Integer order;
  std::vector<F2Linear> generators;     // strong generators, base = g₁..g_r
  std::vector<std::size_t> orbit_sizes;  // basic orbit lengths
};

/// O(q) for a 2-elementary form of rank ≤ 10 by stabilizer-chain
/// backtracking over images of the generators.
OrthogonalGroup orthogonal_group_order(const FiniteQuadraticForm& form);

}  // namespace latmono
