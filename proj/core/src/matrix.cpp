#include "latmono/matrix.hpp"

#include <ostream>
#include <sstream>

namespace latmono {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

bool is_integral(const RatMatrix& m) {
  for (const auto& v : m.data())
    if (v.get_den() != 1) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& v = m(r, c);
      if (v.get_den() != 1) throw std::domain_error("to_integer: non-integral entry " + v.get_str());
      out(r, c) = v.get_num();
    }
  return out;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix out(rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

IntMatrix column_matrix(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix out(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column_matrix: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = columns[c][r];
  }
  return out;
}

Integer bilinear(const IntMatrix& gram, const IntVector& a, const IntVector& b) {
  Integer acc = 0;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (a[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < gram.cols(); ++j) row += gram(i, j) * b[j];
    acc += a[i] * row;
  }
  return acc;
}

Rational bilinear(const RatMatrix& gram, const RatVector& a, const RatVector& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < gram.cols(); ++j) row += gram(i, j) * b[j];
    acc += a[i] * row;
  }
  return acc;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c).get_str();
    }
    os << '\n';
  }
  return os;
}

}  // namespace latmono
