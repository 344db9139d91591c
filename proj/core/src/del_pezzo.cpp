#include "latmono/del_pezzo.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace latmono {
namespace {

constexpr std::size_t kDim = 8;

IntVector make(std::array<long, kDim> v) { return IntVector(v.begin(), v.end()); }

std::vector<DivisorClass> build_classes() {
  std::vector<DivisorClass> out;
  for (int i = 1; i <= 7; ++i) {
    std::array<long, kDim> v{};
    v[static_cast<std::size_t>(i)] = 1;
    out.push_back({"L_" + std::to_string(i), make(v)});
  }
  for (int i = 1; i <= 7; ++i) {
    std::array<long, kDim> v{3, -1, -1, -1, -1, -1, -1, -1};
    v[static_cast<std::size_t>(i)] = -2;
    out.push_back({"L_" + std::to_string(i) + "*", make(v)});
  }
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      std::array<long, kDim> v{1, 0, 0, 0, 0, 0, 0, 0};
      v[static_cast<std::size_t>(i)] = -1;
      v[static_cast<std::size_t>(j)] = -1;
      out.push_back({"L_{" + std::to_string(i) + "," + std::to_string(j) + "}", make(v)});
    }
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      std::array<long, kDim> v{2, -1, -1, -1, -1, -1, -1, -1};
      v[static_cast<std::size_t>(i)] = 0;
      v[static_cast<std::size_t>(j)] = 0;
      out.push_back({"L_{" + std::to_string(i) + "," + std::to_string(j) + "}*", make(v)});
    }
  return out;
}

const std::map<IntVector, std::size_t>& index_map() {
  static const std::map<IntVector, std::size_t> m = [] {
    std::map<IntVector, std::size_t> out;
    const auto& cls = exceptional_classes();
    for (std::size_t i = 0; i < cls.size(); ++i) out.emplace(cls[i].coords, i);
    return out;
  }();
  return m;
}

long isqrt_floor(long n) {
  if (n < 0) return -1;
  long r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void enumerate_tail(std::array<long, kDim>& x, std::size_t pos, long bound, long remaining_sq, long remaining_sum,
                    std::vector<IntVector>& out) {
  if (pos == kDim) {
    if (remaining_sq == 0 && remaining_sum == 0) out.push_back(make(x));
    return;
  }
  for (long v = -bound; v <= bound; ++v) {
    if (v * v > remaining_sq) continue;
    x[pos] = v;
    enumerate_tail(x, pos + 1, bound, remaining_sq - v * v, remaining_sum - v, out);
  }
}

}  // namespace

IntMatrix picard_gram() {
  IntMatrix g = -IntMatrix::identity(kDim);
  g(0, 0) = 1;
  return g;
}

Lattice picard_lattice() {
  return Lattice("Pic", picard_gram(), {"e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"});
}

IntVector canonical_class() { return make({-3, 1, 1, 1, 1, 1, 1, 1}); }

Integer pairing(const IntVector& a, const IntVector& b) {
  if (a.size() != kDim || b.size() != kDim) throw std::invalid_argument("pairing: expected 8-vectors");
  Integer acc = a[0] * b[0];
  for (std::size_t i = 1; i < kDim; ++i) acc -= a[i] * b[i];
  return acc;
}

Integer pairing(const DivisorClass& a, const DivisorClass& b) { return pairing(a.coords, b.coords); }

const std::vector<DivisorClass>& exceptional_classes() {
  static const std::vector<DivisorClass> classes = build_classes();
  return classes;
}

std::optional<std::size_t> class_index(const IntVector& coords) {
  const auto& m = index_map();
  auto it = m.find(coords);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::size_t dual_index(std::size_t index) {
  if (index < 7) return index + 7;
  if (index < 14) return index - 7;
  if (index < 35) return index + 21;
  if (index < 56) return index - 21;
  throw std::invalid_argument("dual_index: index out of range");
}

DivisorClass dual_of(const DivisorClass& c) {
  const auto idx = class_index(c.coords);
  if (!idx) throw std::invalid_argument("dual_of: not an exceptional class");
  return exceptional_classes()[dual_index(*idx)];
}

LineSets line_sets(const DivisorClass& c) {
  const auto idx = class_index(c.coords);
  if (!idx) throw std::invalid_argument("line_sets: not an exceptional class");
  const std::size_t dual = dual_index(*idx);
  const auto& cls = exceptional_classes();
  LineSets out;
  for (std::size_t j = 0; j < cls.size(); ++j) {
    if (j == *idx || j == dual) continue;
    const Integer p = pairing(c, cls[j]);
    if (p == 0)
      out.s.push_back(j);
    else if (p == 1)
      out.s_star.push_back(j);
    else
      throw std::logic_error("line_sets: unexpected pairing " + p.get_str());
  }
  return out;
}

IntMatrix geiser_involution() {
  const auto& cls = exceptional_classes();
  // L_1..L_7 together with L_1* span Q⁸.
  std::vector<std::size_t> chosen{0, 1, 2, 3, 4, 5, 6, 7};
  IntMatrix x(kDim, kDim);
  IntMatrix y(kDim, kDim);
  for (std::size_t c = 0; c < kDim; ++c)
    for (std::size_t r = 0; r < kDim; ++r) {
      x(r, c) = cls[chosen[c]].coords[r];
      y(r, c) = cls[dual_index(chosen[c])].coords[r];
    }
  // M·X = Y  ⇔  Xᵀ·Mᵀ = Yᵀ
  const auto mt = solve_rational(to_rational(x.transpose()), to_rational(y.transpose()));
  if (!mt || !is_integral(*mt)) throw std::logic_error("geiser_involution: no integral solution");
  const IntMatrix m = to_integer(mt->transpose());
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (m.apply(cls[i].coords) != cls[dual_index(i)].coords)
      throw std::logic_error("geiser_involution: map does not send " + cls[i].label + " to its dual");
  if (!picard_lattice().is_isometry(m)) throw std::logic_error("geiser_involution: not an isometry");
  if (m * m != IntMatrix::identity(kDim)) throw std::logic_error("geiser_involution: not an involution");
  if (m.apply(canonical_class()) != canonical_class()) throw std::logic_error("geiser_involution: moves k");
  return m;
}

namespace {

Graph class_graph(long edge_value) {
  const auto& cls = exceptional_classes();
  std::vector<IntVector> coords;
  std::vector<std::string> labels;
  for (const auto& c : cls) {
    coords.push_back(c.coords);
    labels.push_back(c.label);
  }
  return intersection_graph(coords, picard_gram(), Integer(edge_value), std::move(labels));
}

}  // namespace

Graph gosset_graph() { return class_graph(0); }

Graph meeting_graph() { return class_graph(1); }

Graph schlafli_graph() { return neighborhood_subgraph(gosset_graph(), 0); }

CoefficientBox coefficient_box(long norm, long degree) {
  // 2x₀² + 6·degree·x₀ + degree² + 7·norm ≤ 0
  auto f = [&](long t) { return 2 * t * t + 6 * degree * t + degree * degree + 7 * norm; };
  CoefficientBox box;
  long center = (-3 * degree) / 2;
  long best = center;
  for (long t = center - 1; t <= center + 1; ++t)
    if (f(t) < f(best)) best = t;
  if (f(best) > 0) return box;
  long lo = best;
  while (f(lo - 1) <= 0) --lo;
  long hi = best;
  while (f(hi + 1) <= 0) ++hi;
  box.x0_min = lo;
  box.x0_max = hi;
  long max_sq = 0;
  for (long t = lo; t <= hi; ++t) max_sq = std::max(max_sq, t * t - norm);
  box.xi_bound = isqrt_floor(max_sq);
  return box;
}

std::vector<IntVector> enumerate_norm_vectors(long norm, long degree) {
  const CoefficientBox box = coefficient_box(norm, degree);
  std::vector<IntVector> out;
  std::array<long, kDim> x{};
  for (long x0 = box.x0_min; x0 <= box.x0_max; ++x0) {
    const long sq = x0 * x0 - norm;  // Σ xᵢ²
    const long sum = -degree - 3 * x0;  // Σ xᵢ
    if (sq < 0) continue;
    x[0] = x0;
    enumerate_tail(x, 1, box.xi_bound, sq, sum, out);
  }
  return out;
}

}  // namespace latmono
