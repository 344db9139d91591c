#include "latmono/gaussian.hpp"

#include <sstream>
#include <stdexcept>

namespace latmono {
namespace {

// Element of Q(i).
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussRational(const GaussianInt& z) : re(z.re()), im(z.im()) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    const Rational n = b.norm();
    if (n == 0) throw std::domain_error("GaussRational: division by zero");
    const GaussRational p = a * b.conj();
    return {p.re / n, p.im / n};
  }
};

using GQMatrix = std::vector<std::vector<GaussRational>>;

GQMatrix to_gq(const GaussMatrix& m) {
  GQMatrix out(m.rows(), std::vector<GaussRational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = GaussRational(m(r, c));
  return out;
}

IntMatrix unit_columns(std::size_t rows, const std::vector<std::size_t>& which) {
  IntMatrix out(rows, which.size());
  for (std::size_t j = 0; j < which.size(); ++j) out(which[j], j) = 1;
  return out;
}

}  // namespace

GaussianInt& GaussianInt::operator+=(const GaussianInt& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianInt& GaussianInt::operator-=(const GaussianInt& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianInt& GaussianInt::operator*=(const GaussianInt& o) {
  Integer r = re_ * o.re_ - im_ * o.im_;
  Integer i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string GaussianInt::to_string() const {
  std::string out = re_.get_str();
  if (im_ < 0)
    out += "-" + Integer(-im_).get_str();
  else
    out += "+" + im_.get_str();
  return out + "i";
}

GaussMatrix conjugate_transpose(const GaussMatrix& m) {
  GaussMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c).conj();
  return out;
}

bool is_hermitian(const GaussMatrix& m) { return m.is_square() && conjugate_transpose(m) == m; }

IntMatrix realify(const GaussMatrix& m) {
  IntMatrix out(2 * m.rows(), 2 * m.cols());
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const GaussianInt& z = m(j, k);
      out(2 * j, 2 * k) = z.re();
      out(2 * j, 2 * k + 1) = -z.im();
      out(2 * j + 1, 2 * k) = z.im();
      out(2 * j + 1, 2 * k + 1) = z.re();
    }
  return out;
}

std::string to_string(const GaussMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c).to_string();
    }
    os << '\n';
  }
  return os.str();
}

HermitianLattice hermitian_from_isometry(const Lattice& l, const IntMatrix& t, const IntMatrix& zbasis) {
  const std::size_t n = l.rank();
  if (t.rows() != n || t.cols() != n) throw std::invalid_argument("hermitian_from_isometry: T has wrong shape");
  if (t * t != -IntMatrix::identity(n)) throw std::invalid_argument("hermitian_from_isometry: T^2 != -I");
  if (!l.is_isometry(t)) throw std::invalid_argument("hermitian_from_isometry: T is not an isometry");
  if (zbasis.rows() != n || 2 * zbasis.cols() != n)
    throw std::invalid_argument("hermitian_from_isometry: basis has wrong shape");

  HermitianLattice h{l.name() + "[i]", GaussMatrix(zbasis.cols(), zbasis.cols()), zbasis};
  const IntMatrix real = real_basis_in_L(h, t);
  if (!is_unimodular(real)) throw std::invalid_argument("hermitian_from_isometry: basis does not generate L over Z[i]");

  const IntMatrix& g = l.gram();
  const IntMatrix tb = t * zbasis;
  for (std::size_t j = 0; j < zbasis.cols(); ++j)
    for (std::size_t k = 0; k < zbasis.cols(); ++k)
      h.gram(j, k) = GaussianInt(bilinear(g, zbasis.column(j), zbasis.column(k)),
                                 -bilinear(g, zbasis.column(j), tb.column(k)));
  if (!is_hermitian(h.gram)) throw std::logic_error("hermitian_from_isometry: gram is not hermitian");
  return h;
}

IntMatrix real_basis_in_L(const HermitianLattice& h, const IntMatrix& t) {
  const IntMatrix& b = h.zbasis_in_L;
  const IntMatrix tb = t * b;
  IntMatrix out(b.rows(), 2 * b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t r = 0; r < b.rows(); ++r) {
      out(r, 2 * j) = b(r, j);
      out(r, 2 * j + 1) = tb(r, j);
    }
  return out;
}

IntMatrix l_minus_zbasis() { return unit_columns(14, {0, 2, 4, 6, 8, 10, 11}); }

HermitianLattice h_l_minus() {
  const auto [lm, deck] = l_minus_with_T();
  HermitianLattice h = hermitian_from_isometry(lm, deck.matrix, l_minus_zbasis());
  h.name = "h_L-";
  return h;
}

SummandForms summand_hermitian_forms() {
  const auto [lm, deck] = l_minus_with_T();
  auto block = [&](const SummandBlock& b) {
    return std::make_pair(lm.gram().submatrix(b.offset, b.offset, b.size, b.size),
                          deck.matrix.submatrix(b.offset, b.offset, b.size, b.size));
  };
  const auto [ga, ta] = block(deck.blocks[0]);
  const auto [gd, td] = block(deck.blocks[1]);
  const auto [gu, tu] = block(deck.blocks[3]);

  // p = (1,1,0,0), q = (0,−1,1,0) in the ambient Z⁴ of D₄
  const IntMatrix amb{{1, 0}, {1, -1}, {0, 1}, {0, 0}};
  const auto pq = solve_rational(to_rational(d4_embedding()), to_rational(amb));
  if (!pq || !is_integral(*pq)) throw std::logic_error("summand_hermitian_forms: p, q not in D4");

  SummandForms out{hermitian_from_isometry(Lattice("A1+A1", ga), ta, unit_columns(2, {0})),
                   hermitian_from_isometry(Lattice("D4", gd), td, to_integer(*pq)),
                   hermitian_from_isometry(Lattice("U+U(2)", gu), tu, unit_columns(4, {0, 1}))};
  return out;
}

GaussianInt hermitian_determinant(const GaussMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("hermitian_determinant: matrix is not square");
  GQMatrix a = to_gq(m);
  const std::size_t n = a.size();
  GaussRational det(1, 0);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return GaussianInt();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = det * GaussRational(-1, 0);
    }
    det = det * a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const GaussRational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  if (det.re.get_den() != 1 || det.im.get_den() != 1)
    throw std::logic_error("hermitian_determinant: non-integral determinant");
  return {det.re.get_num(), det.im.get_num()};
}

Signature hermitian_signature(const HermitianLattice& h) {
  if (!is_hermitian(h.gram)) throw std::invalid_argument("hermitian_signature: gram is not hermitian");
  if (hermitian_determinant(h.gram) == GaussianInt()) throw std::invalid_argument("hermitian_signature: gram is degenerate");
  GQMatrix a = to_gq(h.gram);
  const std::size_t n = a.size();
  // Congruence A ↦ P*·A·P, one elementary operation at a time.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const GaussRational& c) {
    // column_dst += c·column_src; row_dst += c̄·row_src
    for (std::size_t r = 0; r < n; ++r) a[r][dst] = a[r][dst] + c * a[r][src];
    for (std::size_t k = 0; k < n; ++k) a[dst][k] = a[dst][k] + c.conj() * a[src][k];
  };
  auto swap_sym = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a[j][j].is_zero()) ++j;
      if (j < n) {
        swap_sym(k, j);
      } else {
        j = k + 1;
        while (j < n && a[k][j].is_zero()) ++j;
        if (j == n) throw std::logic_error("hermitian_signature: zero row in nondegenerate gram");
        // new diagonal entry 2·|a_kj|² > 0
        add_multiple(k, j, a[j][k]);
      }
    }
    const GaussRational pivot = a[k][k];
    if (pivot.im != 0) throw std::logic_error("hermitian_signature: non-real diagonal");
    for (std::size_t l = k + 1; l < n; ++l) {
      if (a[k][l].is_zero()) continue;
      add_multiple(l, k, GaussRational(0, 0) - a[k][l] / pivot);
    }
    if (pivot.re > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }

  const Signature real = to_real_lattice(h).first.signature();
  if (real.positive != 2 * sig.positive || real.negative != 2 * sig.negative)
    throw std::logic_error("hermitian_signature: disagrees with the real form");
  return sig;
}

std::pair<Lattice, IntMatrix> to_real_lattice(const HermitianLattice& h) {
  const std::size_t r = h.rank();
  IntMatrix g(2 * r, 2 * r);
  IntMatrix t(2 * r, 2 * r);
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < r; ++j) {
    labels.push_back("b" + std::to_string(j));
    labels.push_back("ib" + std::to_string(j));
    t(2 * j + 1, 2 * j) = 1;
    t(2 * j, 2 * j + 1) = -1;
    for (std::size_t k = 0; k < r; ++k) {
      const GaussianInt& z = h.gram(j, k);
      g(2 * j, 2 * k) = z.re();
      g(2 * j + 1, 2 * k + 1) = z.re();
      g(2 * j + 1, 2 * k) = z.im();
      g(2 * j, 2 * k + 1) = -z.im();
    }
  }
  return {Lattice(h.name + "_R", g, labels), t};
}

bool is_unitary(const GaussMatrix& g, const HermitianLattice& h) {
  if (!g.is_square() || g.rows() != h.rank()) return false;
  if (conjugate_transpose(g) * h.gram * g != h.gram) return false;
  return abs(determinant(realify(g))) == 1;
}

HermitianPolynomial hermitian_polynomial(const HermitianLattice& h) {
  HermitianPolynomial p;
  const std::size_t r = h.rank();
  for (std::size_t j = 0; j < r; ++j) p.diagonal.push_back(h.gram(j, j).re());
  // H_jk z_j z̄_k + H_kj z_k z̄_j = 2·Re(H_jk w) with w = z_j z̄_k
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = j + 1; k < r; ++k) {
      const GaussianInt& z = h.gram(j, k);
      if (z == GaussianInt()) continue;
      p.cross[{j, k}] = {2 * z.re(), -2 * z.im()};
    }
  return p;
}

std::string HermitianPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Integer& c, const std::string& mono) {
    if (c == 0) return;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    os << abs(c) << mono;
    first = false;
  };
  for (std::size_t j = 0; j < diagonal.size(); ++j) term(diagonal[j], "|z" + std::to_string(j) + "|^2");
  for (const auto& [jk, ab] : cross) {
    const std::string w = "(z" + std::to_string(jk.first) + "*conj(z" + std::to_string(jk.second) + "))";
    term(ab.first, "Re" + w);
    term(ab.second, "Im" + w);
  }
  return first ? "0" : os.str();
}

}  // namespace latmono
