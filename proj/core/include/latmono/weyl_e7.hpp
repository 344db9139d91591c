#pragma once

#include <vector>

#include "latmono/discriminant.hpp"
#include "latmono/matrix.hpp"
#include "latmono/perm_group.hpp"

namespace latmono {

/// All r with ⟨r,r⟩ = −2 and ⟨r,k⟩ = 0 in the Picard lattice, lexicographic
/// order. Closure under every reflection is verified.
const std::vector<IntVector>& roots();

/// e₁−e₂, …, e₆−e₇, e₀−e₁−e₂−e₃.
std::vector<IntVector> simple_roots();

bool is_root(const IntVector& v);

/// s_r(x) = x + ⟨x,r⟩·r as a matrix acting on columns. Throws
/// std::invalid_argument if r is not a root.
IntMatrix reflection(const IntVector& r);

/// Permutation of the 56 exceptional classes induced by an isometry.
/// Throws std::logic_error if some class is not sent to a class.
Permutation class_permutation(const IntMatrix& m);

/// W(E₇) acting on the 56 classes, generated by the simple reflections.
const PermGroup& weyl_group_on_classes();

struct CenterQuotient {
  Integer center_order;
  Integer quotient_order;
  Permutation geiser;
  bool geiser_in_center = false;
};
CenterQuotient center_and_quotient();

/// W(E₇) acting on A_{L₊}, with L₊ the Picard lattice scaled by 2.
struct DiscriminantRepresentation {
  std::vector<F2Linear> generator_images;  // images of the simple reflections
  Integer image_order;
  Integer group_order;
  bool kernel_trivial = false;
};
DiscriminantRepresentation discriminant_representation();

/// Permutation of the 2^r elements of a 2-elementary form induced by a map.
Permutation f2_permutation(const F2Linear& map);

}  // namespace latmono
