#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latmono/exact.hpp"
#include "latmono/matrix.hpp"

namespace latmono {

/// A free Z-module of finite rank with a symmetric integral Gram matrix.
class Lattice {
 public:
  Lattice(std::string name, IntMatrix gram, std::vector<std::string> basis_labels = {});

  const std::string& name() const noexcept { return name_; }
  const IntMatrix& gram() const noexcept { return gram_; }
  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
  std::size_t rank() const noexcept { return gram_.rows(); }

  bool is_even() const;
  bool is_nondegenerate() const;
  bool is_unimodular() const;
  Integer determinant() const;
  Signature signature() const;

  Integer pairing(const IntVector& a, const IntVector& b) const { return bilinear(gram_, a, b); }

  /// True iff Mᵀ·G·M = G.
  bool is_isometry(const IntMatrix& m) const;

 private:
  std::string name_;
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

enum class StandardKind { U, U2, A1, D4, E8Neg, Diag };

/// U, U(2), A₁ = ⟨−2⟩, D₄ (negative definite, Cartan basis
/// {(1,1,0,0), (−1,1,0,0), (0,−1,1,0), (0,0,−1,1)} of the even-sum sublattice
/// of Z⁴ with the negated dot product), E₈(−1) in the K3 node ordering, and
/// the rank-one lattice ⟨n⟩.
Lattice standard_lattice(StandardKind kind, long n = 1);

/// Accepts "U", "U(2)", "A1", "D4", "E8(-1)" and "<n>". Throws
/// std::invalid_argument for anything else.
Lattice standard_lattice(std::string_view name);

/// Basis vectors of D₄ in the ambient Z⁴ (columns).
IntMatrix d4_embedding();

Lattice direct_sum(const std::vector<Lattice>& parts, std::string name = {});
Lattice rescale(const Lattice& lattice, long factor);

/// Saturated basis (columns, in ambient coordinates) of the orthogonal
/// complement of the span of `sub_basis`.
IntMatrix orthogonal_complement(const Lattice& ambient, const IntMatrix& sub_basis);

/// True iff ambient / span(sub_basis) is torsion-free.
bool is_primitive(const Lattice& ambient, const IntMatrix& sub_basis);

/// Gram matrix of the sublattice spanned by the columns of `basis`.
IntMatrix restricted_gram(const Lattice& ambient, const IntMatrix& basis);

/// True iff the column spans of `a` and `b` coincide (both full column rank).
bool same_span(const IntMatrix& a, const IntMatrix& b);

}  // namespace latmono
