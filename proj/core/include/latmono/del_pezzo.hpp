#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latmono/graph.hpp"
#include "latmono/lattice.hpp"
#include "latmono/matrix.hpp"

namespace latmono {

/// A class in the Picard lattice, coordinates in the basis {e₀, …, e₇}.
struct DivisorClass {
  std::string label;
  IntVector coords;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// diag(1, −1, …, −1), 8×8.
IntMatrix picard_gram();
Lattice picard_lattice();
/// k = −3e₀ + e₁ + ⋯ + e₇, with ⟨k, k⟩ = 2.
IntVector canonical_class();

Integer pairing(const IntVector& a, const IntVector& b);
Integer pairing(const DivisorClass& a, const DivisorClass& b);

/// The 56 exceptional classes in the order L_1..L_7, L_1*..L_7*,
/// L_{i,j} (lex), L_{i,j}* (lex).
const std::vector<DivisorClass>& exceptional_classes();

/// Position in exceptional_classes(), if the vector is one of them.
std::optional<std::size_t> class_index(const IntVector& coords);

/// L ↔ L*, L_{i,j} ↔ L_{i,j}*. Throws std::invalid_argument for a
/// non-exceptional class.
DivisorClass dual_of(const DivisorClass& c);
std::size_t dual_index(std::size_t index);

/// Indices of the classes other than c, c* pairing 0 (s) and 1 (s_star) with c.
struct LineSets {
  std::vector<std::size_t> s;
  std::vector<std::size_t> s_star;
};
LineSets line_sets(const DivisorClass& c);

/// The linear map with [L] ↦ [L*] for all 56 classes, solved from eight
/// independent classes and verified on the rest.
IntMatrix geiser_involution();

/// Edge iff the pairing is 0 (disjoint classes). After projecting to k^⊥
/// these are the nearest pairs of the 56 minimal vectors, so neighbourhoods
/// are 16-regular Schläfli graphs.
Graph gosset_graph();
/// Edge iff the pairing is 1. Same automorphism group as gosset_graph(), but
/// its neighbourhoods are the 10-regular complements of the Schläfli graph.
Graph meeting_graph();
/// Neighbourhood of L_1 in the Gosset graph (the lines disjoint from L_1).
Graph schlafli_graph();

/// Integer box containing every x with ⟨x,x⟩ = norm and ⟨x,k⟩ = degree.
/// On the affine plane Σxᵢ = −degree − 3x₀ the form restricts to a definite
/// one, and Cauchy–Schwarz gives (degree + 3x₀)² ≤ 7(x₀² − norm).
struct CoefficientBox {
  long x0_min = 0;
  long x0_max = -1;
  long xi_bound = 0;
};
CoefficientBox coefficient_box(long norm, long degree);

/// All solutions of ⟨x,x⟩ = norm, ⟨x,k⟩ = degree, lexicographic order.
std::vector<IntVector> enumerate_norm_vectors(long norm, long degree);

}  // namespace latmono
