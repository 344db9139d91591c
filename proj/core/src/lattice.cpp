#include "latmono/lattice.hpp"

#include <charconv>
#include <stdexcept>

namespace latmono {
namespace {

void require_independent(const IntMatrix& basis, const char* who) {
  if (rank(basis) != basis.cols())
    throw std::invalid_argument(std::string(who) + ": sublattice basis is dependent");
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("b" + std::to_string(i));
  return out;
}

}  // namespace

Lattice::Lattice(std::string name, IntMatrix gram, std::vector<std::string> basis_labels)
    : name_(std::move(name)), gram_(std::move(gram)), labels_(std::move(basis_labels)) {
  if (!gram_.is_symmetric()) throw std::invalid_argument("Lattice '" + name_ + "': Gram matrix not symmetric");
  if (labels_.empty()) labels_ = default_labels(gram_.rows());
  if (labels_.size() != gram_.rows())
    throw std::invalid_argument("Lattice '" + name_ + "': label count does not match rank");
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (!mpz_even_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

bool Lattice::is_nondegenerate() const { return latmono::determinant(gram_) != 0; }
bool Lattice::is_unimodular() const { return abs(latmono::determinant(gram_)) == 1; }
Integer Lattice::determinant() const { return latmono::determinant(gram_); }
Signature Lattice::signature() const { return latmono::signature(gram_); }

bool Lattice::is_isometry(const IntMatrix& m) const {
  if (m.rows() != rank() || m.cols() != rank()) return false;
  return m.transpose() * gram_ * m == gram_;
}

IntMatrix d4_embedding() {
  // columns (1,1,0,0), (−1,1,0,0), (0,−1,1,0), (0,0,−1,1)
  return IntMatrix{{1, -1, 0, 0}, {1, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}};
}

Lattice standard_lattice(StandardKind kind, long n) {
  switch (kind) {
    case StandardKind::U:
      return Lattice("U", IntMatrix{{0, 1}, {1, 0}}, {"e", "f"});
    case StandardKind::U2:
      return Lattice("U(2)", IntMatrix{{0, 2}, {2, 0}}, {"e'", "f'"});
    case StandardKind::A1:
      return Lattice("A1", IntMatrix{{-2}}, {"a"});
    case StandardKind::D4: {
      const IntMatrix b = d4_embedding();
      const IntMatrix neg_dot = -IntMatrix::identity(4);
      return Lattice("D4", b.transpose() * neg_dot * b, {"d1", "d2", "d3", "d4"});
    }
    case StandardKind::E8Neg:
      return Lattice("E8(-1)",
                     IntMatrix{{-2, 1, 0, 0, 0, 0, 0, 0},
                               {1, -2, 1, 0, 0, 0, 0, 0},
                               {0, 1, -2, 1, 0, 0, 0, 0},
                               {0, 0, 1, -2, 1, 0, 0, 0},
                               {0, 0, 0, 1, -2, 1, 0, 1},
                               {0, 0, 0, 0, 1, -2, 1, 0},
                               {0, 0, 0, 0, 0, 1, -2, 0},
                               {0, 0, 0, 0, 1, 0, 0, -2}});
    case StandardKind::Diag: {
      IntMatrix g(1, 1);
      g(0, 0) = n;
      return Lattice("<" + std::to_string(n) + ">", g, {"x"});
    }
  }
  throw std::invalid_argument("standard_lattice: unknown kind");
}

Lattice standard_lattice(std::string_view name) {
  if (name == "U") return standard_lattice(StandardKind::U);
  if (name == "U(2)") return standard_lattice(StandardKind::U2);
  if (name == "A1") return standard_lattice(StandardKind::A1);
  if (name == "D4") return standard_lattice(StandardKind::D4);
  if (name == "E8(-1)") return standard_lattice(StandardKind::E8Neg);
  if (name.size() > 2 && name.front() == '<' && name.back() == '>') {
    long n = 0;
    const auto body = name.substr(1, name.size() - 2);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), n);
    if (ec == std::errc() && ptr == body.data() + body.size())
      return standard_lattice(StandardKind::Diag, n);
  }
  throw std::invalid_argument("standard_lattice: unknown kind '" + std::string(name) + "'");
}

Lattice direct_sum(const std::vector<Lattice>& parts, std::string name) {
  std::vector<IntMatrix> blocks;
  std::vector<std::string> labels;
  std::string joined;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    blocks.push_back(parts[i].gram());
    const std::string prefix = parts[i].name() + "#" + std::to_string(i) + ".";
    for (const auto& l : parts[i].basis_labels()) labels.push_back(prefix + l);
    if (i) joined += "+";
    joined += parts[i].name();
  }
  if (name.empty()) name = joined.empty() ? "0" : joined;
  return Lattice(std::move(name), block_diagonal(blocks), std::move(labels));
}

Lattice rescale(const Lattice& lattice, long factor) {
  if (factor == 0) throw std::invalid_argument("rescale: factor must be nonzero");
  if (factor == 1) return lattice;
  return Lattice(lattice.name() + "(" + std::to_string(factor) + ")", Integer(factor) * lattice.gram(),
                 lattice.basis_labels());
}

IntMatrix restricted_gram(const Lattice& ambient, const IntMatrix& basis) {
  return basis.transpose() * ambient.gram() * basis;
}

IntMatrix orthogonal_complement(const Lattice& ambient, const IntMatrix& sub_basis) {
  if (sub_basis.rows() != ambient.rank()) throw std::invalid_argument("orthogonal_complement: dimension mismatch");
  if (!ambient.is_nondegenerate()) throw std::invalid_argument("orthogonal_complement: ambient is degenerate");
  if (sub_basis.cols() == 0) return IntMatrix::identity(ambient.rank());
  require_independent(sub_basis, "orthogonal_complement");
  return integer_kernel(sub_basis.transpose() * ambient.gram());
}

bool is_primitive(const Lattice& ambient, const IntMatrix& sub_basis) {
  if (sub_basis.rows() != ambient.rank()) throw std::invalid_argument("is_primitive: dimension mismatch");
  if (sub_basis.cols() == 0) return true;
  require_independent(sub_basis, "is_primitive");
  const SmithForm snf = smith_normal_form(sub_basis);
  for (const auto& d : snf.invariant_factors())
    if (d != 1) return false;
  return true;
}

bool same_span(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const auto x = solve_rational(to_rational(a), to_rational(b));
  if (!x || !is_integral(*x)) return false;
  return is_unimodular(to_integer(*x));
}

}  // namespace latmono
