#include "latmono/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace latmono {
namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, c1), a(r, c2));
}

// row_dst += f · row_src
void add_row(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (a(src, c) != 0) a(dst, c) += f * a(src, c);
}

void add_col(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a(r, src) != 0) a(r, dst) += f * a(r, src);
}

// Smallest nonzero |a(i,j)| with i, j ≥ t; ties broken by lowest (row, col).
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

IntVector SmithForm::invariant_factors() const {
  IntVector out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t diag = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      std::size_t pr = 0;
      std::size_t pc = 0;
      if (!find_pivot(a, t, pr, pc)) return {a, u, v};
      swap_rows(a, t, pr);
      swap_rows(u, t, pr);
      swap_cols(a, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row(a, i, t, -q);
        add_row(u, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        add_col(a, j, t, -q);
        add_col(v, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            add_row(a, t, i, 1);
            add_row(u, t, i, 1);
            divides = false;
            break;
          }
      if (!divides) continue;

      if (a(t, t) < 0) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(t, c) = -a(t, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(t, c) = -u(t, c);
      }
      break;
    }
  }
  return {a, u, v};
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Signature signature(const RatMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("signature: matrix is not symmetric");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Signature sig;

  auto swap_sym = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  // x_l ← x_l − f·x_src, applied as a congruence.
  auto eliminate = [&](std::size_t l, std::size_t src, const Rational& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < n; ++c) a(l, c) -= f * a(src, c);
    for (std::size_t r = 0; r < n; ++r) a(r, l) -= f * a(r, src);
  };

  std::size_t k = 0;
  while (k < n) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) swap_sym(k, j);
    }
    if (a(k, k) != 0) {
      const Rational pivot = a(k, k);
      for (std::size_t l = k + 1; l < n; ++l) eliminate(l, k, a(l, k) / pivot);
      if (pivot > 0)
        ++sig.positive;
      else
        ++sig.negative;
      ++k;
      continue;
    }
    // All remaining diagonal entries vanish.
    std::size_t j = k + 1;
    while (j < n && a(k, j) == 0) ++j;
    if (j == n) {
      ++sig.zero;
      ++k;
      continue;
    }
    // Hyperbolic block [[0, h], [h, 0]] on (k, j): one positive, one negative.
    swap_sym(k + 1, j);
    const Rational h = a(k, k + 1);
    for (std::size_t l = k + 2; l < n; ++l) {
      const Rational alpha = a(l, k + 1) / h;
      const Rational beta = a(l, k) / h;
      eliminate(l, k, alpha);
      eliminate(l, k + 1, beta);
    }
    ++sig.positive;
    ++sig.negative;
    k += 2;
  }
  return sig;
}

Signature signature(const IntMatrix& m) { return signature(to_rational(m)); }

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(c, j), a(p, j));
      std::swap(inv(c, j), inv(p, j));
    }
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatMatrix inverse(const IntMatrix& m) { return inverse(to_rational(m)); }

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  return abs(determinant(m)) == 1;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const SmithForm snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  std::vector<std::size_t> cols;
  for (std::size_t j = r; j < a.cols(); ++j) cols.push_back(j);
  return snf.V.columns(cols);
}

std::optional<RatMatrix> solve_rational(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_rational: row mismatch");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  RatMatrix aug(a.rows(), n + k);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < k; ++c) aug(r, n + c) = b(r, c);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < aug.rows(); ++c) {
    std::size_t p = r;
    while (p < aug.rows() && aug(p, c) == 0) ++p;
    if (p == aug.rows()) continue;
    for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(r, j), aug(p, j));
    const Rational piv = aug(r, c);
    for (std::size_t j = 0; j < aug.cols(); ++j) aug(r, j) /= piv;
    for (std::size_t i = 0; i < aug.rows(); ++i) {
      if (i == r || aug(i, c) == 0) continue;
      const Rational f = aug(i, c);
      for (std::size_t j = 0; j < aug.cols(); ++j) aug(i, j) -= f * aug(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  if (pivot_cols.size() != n) throw std::invalid_argument("solve_rational: columns are dependent");
  for (std::size_t i = r; i < aug.rows(); ++i)
    for (std::size_t j = n; j < n + k; ++j)
      if (aug(i, j) != 0) return std::nullopt;
  RatMatrix x(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) x(pivot_cols[i], j) = aug(i, n + j);
  return x;
}

}  // namespace latmono
