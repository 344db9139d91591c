#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latmono/exact.hpp"
#include "latmono/k3.hpp"
#include "latmono/lattice.hpp"
#include "latmono/matrix.hpp"

namespace latmono {

/// re + im·i with arbitrary-precision parts.
class GaussianInt {
 public:
  GaussianInt() = default;
  GaussianInt(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianInt(Integer re, Integer im) : re_(std::move(re)), im_(std::move(im)) {}

  const Integer& re() const noexcept { return re_; }
  const Integer& im() const noexcept { return im_; }

  GaussianInt conj() const { return {re_, -im_}; }
  /// |z|² = re² + im²
  Integer norm() const { return re_ * re_ + im_ * im_; }
  bool is_unit() const { return norm() == 1; }

  GaussianInt& operator+=(const GaussianInt& o);
  GaussianInt& operator-=(const GaussianInt& o);
  GaussianInt& operator*=(const GaussianInt& o);

  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
  friend GaussianInt operator-(const GaussianInt& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }

  /// `a+bi` with b's sign folded in, e.g. `1-1i`, `-2+0i`.
  std::string to_string() const;

 private:
  Integer re_;
  Integer im_;
};

inline const GaussianInt kI{Integer(0), Integer(1)};

using GaussMatrix = Matrix<GaussianInt>;

GaussMatrix conjugate_transpose(const GaussMatrix& m);
bool is_hermitian(const GaussMatrix& m);
/// Real 2r×2r matrix of a Z[i]-linear map in the basis (b₀, i·b₀, b₁, i·b₁, …).
IntMatrix realify(const GaussMatrix& m);
/// Rows of `a+bi` entries separated by spaces.
std::string to_string(const GaussMatrix& m);

/// Free Z[i]-module with a hermitian Gram H; h(x, y) = x*·H·y for
/// coordinate vectors, conjugate-linear in the first argument.
struct HermitianLattice {
  std::string name;
  GaussMatrix gram;
  IntMatrix zbasis_in_L;  // columns: Z[i]-basis in coordinates of the source Z-lattice

  std::size_t rank() const { return gram.rows(); }
};

/// gram[j][k] = ⟨b_j, b_k⟩ − i·⟨b_j, T·b_k⟩, with i acting on L as T.
/// Throws std::invalid_argument if T² ≠ −I, T is not an isometry, or
/// {b, T·b} is not a Z-basis of L.
HermitianLattice hermitian_from_isometry(const Lattice& l, const IntMatrix& t, const IntMatrix& zbasis);

/// Z[i]-basis {u; p₁, q₁; p₂, q₂; e, f} of L₋ (columns in L₋ coordinates).
IntMatrix l_minus_zbasis();
HermitianLattice h_l_minus();

/// The three summand forms: A₁² on {u}, D₄ on {p, q}, U ⊕ U(2) on {e, f}.
struct SummandForms {
  HermitianLattice a1_pair;
  HermitianLattice d4;
  HermitianLattice u_u2;
};
SummandForms summand_hermitian_forms();

/// Determinant over Z[i] by cofactor-free elimination over Q(i); exact.
GaussianInt hermitian_determinant(const GaussMatrix& m);

/// Inertia of H by congruence diagonalization over Q(i). Throws
/// std::invalid_argument for a degenerate Gram.
Signature hermitian_signature(const HermitianLattice& h);

/// The associated real lattice on (b₀, i·b₀, b₁, i·b₁, …): Gram = Re h, and
/// the matrix of multiplication by i.
std::pair<Lattice, IntMatrix> to_real_lattice(const HermitianLattice& h);

/// Coordinates of the real basis (b_j, T·b_j) in the source lattice.
IntMatrix real_basis_in_L(const HermitianLattice& h, const IntMatrix& t);

/// g*·H·g = H and det g a unit of Z[i].
bool is_unitary(const GaussMatrix& g, const HermitianLattice& h);

/// P(z) = Σ H_jk z_j z̄_k written as Σ c_j |z_j|² + Σ_{j<k} (α Re(z_j z̄_k) + β Im(z_j z̄_k)).
/// With h conjugate-linear in its first argument, h(x, x) for x = Σ z_j b_j
/// equals P(z̄).
struct HermitianPolynomial {
  std::vector<Integer> diagonal;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Integer, Integer>> cross;  // (α, β), zero terms omitted

  friend bool operator==(const HermitianPolynomial&, const HermitianPolynomial&) = default;
  std::string to_string() const;
};
HermitianPolynomial hermitian_polynomial(const HermitianLattice& h);

}  // namespace latmono
