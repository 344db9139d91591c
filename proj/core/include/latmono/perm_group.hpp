#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "latmono/matrix.hpp"

namespace latmono {

/// Bijection of {0, …, n−1}; p[x] is the image of x.
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;
  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Smallest moved point, or degree() for the identity.
  std::size_t first_moved() const;

  /// (a * b)[x] = a[b[x]]  (apply b first).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::string cycle_string() const;

 private:
  std::vector<Point> images_;
};

/// Permutation group with a base and strong generating set built by
/// deterministic Schreier–Sims.
class PermGroup {
 public:
  /// Base points are `base_prefix` followed by 0, 1, 2, … (skipping repeats);
  /// levels with trivial basic orbit are dropped from base().
  static PermGroup from_generators(std::size_t degree, std::vector<Permutation> generators,
                                   const std::vector<std::size_t>& base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }
  std::vector<std::size_t> base() const;
  std::vector<std::size_t> basic_orbit_sizes() const;

  Integer order() const;
  std::vector<std::size_t> orbit(std::size_t point) const;
  bool is_transitive() const;

  /// |G| / |orbit(point)|, cross-checked against a stabilizer chain with
  /// `point` as first base point.
  Integer stabilizer_order(std::size_t point) const;

  bool contains(const Permutation& p) const;

  /// True iff p commutes with every generator. Throws std::invalid_argument
  /// if p is not in the group.
  bool is_central(const Permutation& p) const;

  /// Center of a transitive group: every central element is determined by
  /// the image of 0. Throws std::invalid_argument if not transitive.
  std::vector<Permutation> center_of_transitive() const;

 private:
  struct Level {
    std::size_t point = 0;
    std::vector<std::int32_t> transversal_index;  // per point: index into reps, or −1
    std::vector<Permutation> reps;                // reps[k] maps point to orbit[k]
    std::vector<std::size_t> orbit;
  };

  void rebuild_level(std::size_t level);
  /// Sifts g starting at `level`; returns the residue and the level where
  /// sifting stopped (levels_.size() if it passed all levels).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t level) const;
  void schreier_sims();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<std::size_t> strong_level_;  // first level not fixed by the strong generator
  std::vector<Level> levels_;
};

}  // namespace latmono
