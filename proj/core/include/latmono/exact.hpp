#pragma once

#include <cstddef>
#include <optional>

#include "latmono/matrix.hpp"

namespace latmono {

/// U·M·V = D with U, V unimodular and D diagonal, d₁ | d₂ | …, dᵢ ≥ 0.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  std::size_t rank() const;
  /// Diagonal entries d₁..d_min(m,n), zeros included.
  IntVector invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant. Throws std::invalid_argument on
/// non-square input.
Integer determinant(const IntMatrix& m);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
  Signature operator+(const Signature& o) const {
    return {positive + o.positive, negative + o.negative, zero + o.zero};
  }
};

/// Inertia of a symmetric integer matrix by rational congruence
/// diagonalization. Throws std::invalid_argument if `m` is not symmetric.
Signature signature(const IntMatrix& m);
Signature signature(const RatMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Inverse over Q; throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& m);
RatMatrix inverse(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Saturated Z-basis (as columns) of {x ∈ Zⁿ : A·x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Solves A·X = B over Q for A of full column rank; std::nullopt if no
/// solution exists.
std::optional<RatMatrix> solve_rational(const RatMatrix& a, const RatMatrix& b);

}  // namespace latmono
