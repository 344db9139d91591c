#include "latmono/discriminant.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace latmono {
namespace {

Rational reduce_mod(const Rational& r, long m) {
  Rational q = r / m;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational out = r - Rational(fl * m);
  out.canonicalize();
  return out;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Row-echelon span tracker over F₂ with stack-ordered undo.
class F2Span {
 public:
  explicit F2Span(int rank) : pivots_(static_cast<std::size_t>(rank), 0), rank_(rank) {}

  F2Element reduce(F2Element v) const {
    for (int bit = rank_ - 1; bit >= 0 && v; --bit)
      if ((v >> bit) & 1u) {
        const F2Element p = pivots_[static_cast<std::size_t>(bit)];
        if (p) v ^= p;
      }
    return v;
  }

  // Returns the pivot bit used, or -1 if v is dependent.
  int insert(F2Element v) {
    v = reduce(v);
    if (!v) return -1;
    const int bit = static_cast<int>(std::bit_width(v)) - 1;
    pivots_[static_cast<std::size_t>(bit)] = v;
    return bit;
  }

  void erase(int bit) { pivots_[static_cast<std::size_t>(bit)] = 0; }

 private:
  std::vector<F2Element> pivots_;
  int rank_;
};

// Backtracking over generator images for isometries (or anti-isometries)
// between two 2-elementary forms of equal rank.
class IsometrySearch {
 public:
  using Visitor = std::function<bool(const F2Linear&)>;

  IsometrySearch(const TwoElementaryForm& src, const TwoElementaryForm& dst, bool anti)
      : src_(src), dst_(dst), anti_(anti), span_(dst.rank()) {
    for (F2Element x = 1; x < dst_.size(); ++x) by_q_[dst_.q(x).quarters()].push_back(x);
  }

  // Visits every extension of `prefix` in lexicographic order until the
  // visitor returns true. Returns true iff stopped by the visitor.
  bool run(const std::vector<F2Element>& prefix, const Visitor& visit) {
    if (src_.rank() != dst_.rank()) return false;
    images_.assign(static_cast<std::size_t>(src_.rank()), 0);
    span_ = F2Span(dst_.rank());
    for (std::size_t j = 0; j < prefix.size(); ++j) {
      if (!admissible(static_cast<int>(j), prefix[j])) return false;
      images_[j] = prefix[j];
      span_.insert(prefix[j]);
    }
    visit_ = &visit;
    return dfs(static_cast<int>(prefix.size()));
  }

  std::vector<F2Element> candidates(int level, const std::vector<F2Element>& fixed) {
    images_.assign(static_cast<std::size_t>(src_.rank()), 0);
    span_ = F2Span(dst_.rank());
    for (std::size_t j = 0; j < fixed.size(); ++j) {
      images_[j] = fixed[j];
      span_.insert(fixed[j]);
    }
    std::vector<F2Element> out;
    for (F2Element c : by_q_[target_q(level).quarters()])
      if (admissible(level, c)) out.push_back(c);
    return out;
  }

 private:
  QuarterMod2 target_q(int level) const {
    const QuarterMod2 q = src_.q(src_.generator(level));
    return anti_ ? -q : q;
  }

  bool admissible(int level, F2Element c) const {
    if (dst_.q(c) != target_q(level)) return false;
    const F2Element g = src_.generator(level);
    for (int l = 0; l < level; ++l)
      if (dst_.b(c, images_[static_cast<std::size_t>(l)]) != src_.b(g, src_.generator(l))) return false;
    return span_.reduce(c) != 0;
  }

  bool dfs(int level) {
    if (level == src_.rank()) {
      F2Linear map{src_.rank(), images_};
      return (*visit_)(map);
    }
    for (F2Element c : by_q_[target_q(level).quarters()]) {
      if (!admissible(level, c)) continue;
      images_[static_cast<std::size_t>(level)] = c;
      const int bit = span_.insert(c);
      const bool stop = dfs(level + 1);
      span_.erase(bit);
      if (stop) return true;
    }
    return false;
  }

  const TwoElementaryForm& src_;
  const TwoElementaryForm& dst_;
  bool anti_;
  std::array<std::vector<F2Element>, 8> by_q_;
  std::vector<F2Element> images_;
  F2Span span_;
  const Visitor* visit_ = nullptr;
};

}  // namespace

// ---------------------------------------------------------------------------
// FiniteQuadraticForm

Integer FiniteQuadraticForm::order() const {
  Integer n = 1;
  for (const auto& d : divisors_) n *= d;
  return n;
}

bool FiniteQuadraticForm::is_two_elementary() const {
  return std::all_of(divisors_.begin(), divisors_.end(), [](const Integer& d) { return d == 2; });
}

Rational FiniteQuadraticForm::q(const IntVector& x) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) acc += Rational(x[i] * x[j]) * value_gram_(i, j);
  return reduce_mod(acc, 2);
}

Rational FiniteQuadraticForm::b(const IntVector& x, const IntVector& y) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) acc += Rational(x[i] * y[j]) * value_gram_(i, j);
  return reduce_mod(acc, 1);
}

IntVector FiniteQuadraticForm::coordinates(const RatVector& dual_vector) const {
  IntVector out(divisors_.size());
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < dual_vector.size(); ++j) acc += Rational(coordinate_map_(i, j)) * dual_vector[j];
    if (acc.get_den() != 1) throw std::invalid_argument("FiniteQuadraticForm::coordinates: vector not in L*");
    out[i] = mod_floor(acc.get_num(), divisors_[i]);
  }
  return out;
}

RatVector FiniteQuadraticForm::lift(const IntVector& coords) const {
  RatVector out(lifts_.rows());
  for (std::size_t r = 0; r < lifts_.rows(); ++r)
    for (std::size_t i = 0; i < coords.size(); ++i) out[r] += Rational(coords[i]) * lifts_(r, i);
  return out;
}

std::vector<IntVector> FiniteQuadraticForm::elements(std::size_t limit) const {
  if (order() > limit) throw std::length_error("FiniteQuadraticForm::elements: group too large");
  std::vector<IntVector> out;
  IntVector cur(divisors_.size(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = divisors_.size();
    while (i > 0) {
      --i;
      if (++cur[i] < divisors_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (divisors_.empty()) return out;
  }
}

FiniteQuadraticForm discriminant_form(const Lattice& lattice) {
  if (!lattice.is_even()) throw std::invalid_argument("discriminant_form: lattice '" + lattice.name() + "' is odd");
  if (!lattice.is_nondegenerate())
    throw std::invalid_argument("discriminant_form: lattice '" + lattice.name() + "' is degenerate");

  const IntMatrix& g = lattice.gram();
  const SmithForm snf = smith_normal_form(g);
  const IntMatrix ug = snf.U * g;
  const std::size_t n = g.rows();

  std::vector<std::size_t> nontrivial;
  for (std::size_t i = 0; i < n; ++i)
    if (snf.D(i, i) != 1) nontrivial.push_back(i);

  FiniteQuadraticForm form;
  const std::size_t k = nontrivial.size();
  form.lifts_ = RatMatrix(n, k);
  form.coordinate_map_ = IntMatrix(k, n);
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t i = nontrivial[a];
    form.divisors_.push_back(snf.D(i, i));
    // U·G·V = D, so V·eᵢ/dᵢ ∈ L* maps to eᵢ under y ↦ U·G·y.
    for (std::size_t r = 0; r < n; ++r) form.lifts_(r, a) = Rational(snf.V(r, i), snf.D(i, i));
    for (std::size_t c = 0; c < n; ++c) form.coordinate_map_(a, c) = ug(i, c);
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t r = 0; r < n; ++r) form.lifts_(r, a).canonicalize();
  }
  const RatMatrix gq = to_rational(g);
  form.value_gram_ = form.lifts_.transpose() * gq * form.lifts_;
  return form;
}

bool is_2_elementary(const Lattice& lattice) {
  if (!lattice.is_nondegenerate()) throw std::invalid_argument("is_2_elementary: lattice is degenerate");
  const SmithForm snf = smith_normal_form(lattice.gram());
  for (const auto& d : snf.invariant_factors())
    if (d != 1 && d != 2) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Compact 2-elementary machinery

QuarterMod2 QuarterMod2::from_rational(const Rational& r) {
  const Rational scaled = reduce_mod(r, 2) * 4;
  if (scaled.get_den() != 1) throw std::domain_error("QuarterMod2: denominator does not divide 4");
  return QuarterMod2(static_cast<std::uint8_t>(scaled.get_num().get_ui() % 8));
}

F2Linear F2Linear::identity(int rank) {
  F2Linear id{rank, {}};
  for (int j = 0; j < rank; ++j) id.images.push_back(F2Element{1} << (rank - 1 - j));
  return id;
}

F2Element F2Linear::apply(F2Element x) const {
  F2Element out = 0;
  for (int j = 0; j < rank; ++j)
    if ((x >> (rank - 1 - j)) & 1u) out ^= images[static_cast<std::size_t>(j)];
  return out;
}

F2Linear F2Linear::compose(const F2Linear& inner) const {
  F2Linear out{rank, {}};
  for (F2Element img : inner.images) out.images.push_back(apply(img));
  return out;
}

bool F2Linear::is_invertible() const {
  F2Span span(rank);
  for (F2Element img : images)
    if (span.insert(img) < 0) return false;
  return true;
}

TwoElementaryForm::TwoElementaryForm(const FiniteQuadraticForm& form) {
  if (!form.is_two_elementary()) throw std::invalid_argument("TwoElementaryForm: group is not 2-elementary");
  if (form.generator_count() > 16) throw std::invalid_argument("TwoElementaryForm: rank exceeds 16");
  rank_ = static_cast<int>(form.generator_count());
  const std::size_t r = form.generator_count();

  std::vector<QuarterMod2> gen_q(r);
  bilinear_rows_.assign(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    IntVector ej(r, 0);
    ej[j] = 1;
    gen_q[j] = QuarterMod2::from_rational(form.q(ej));
    for (std::size_t k = 0; k < r; ++k) {
      IntVector ek(r, 0);
      ek[k] = 1;
      const Rational bjk = form.b(ej, ek);
      if (bjk != 0) bilinear_rows_[j] |= generator(static_cast<int>(k));
    }
  }

  q_table_.assign(size(), QuarterMod2());
  for (F2Element x = 1; x < size(); ++x) {
    // split off the highest generator present: x = g ⊕ rest
    const int bit = static_cast<int>(std::bit_width(x)) - 1;
    const int j = rank_ - 1 - bit;
    const F2Element g = F2Element{1} << bit;
    const F2Element rest = x ^ g;
    const int sum = gen_q[static_cast<std::size_t>(j)].quarters() + q_table_[rest].quarters() + (b(g, rest) ? 4 : 0);
    Rational v(sum, 4);
    v.canonicalize();
    q_table_[x] = QuarterMod2::from_rational(v);
  }
}

bool TwoElementaryForm::b(F2Element x, F2Element y) const {
  unsigned parity = 0;
  for (int j = 0; j < rank_; ++j)
    if (x & generator(j)) parity ^= static_cast<unsigned>(std::popcount(bilinear_rows_[static_cast<std::size_t>(j)] & y)) & 1u;
  return parity != 0;
}

IntVector TwoElementaryForm::coordinates(F2Element x) const {
  IntVector out(static_cast<std::size_t>(rank_));
  for (int j = 0; j < rank_; ++j) out[static_cast<std::size_t>(j)] = (x & generator(j)) ? 1 : 0;
  return out;
}

F2Element TwoElementaryForm::encode(const IntVector& coords) const {
  F2Element x = 0;
  for (int j = 0; j < rank_; ++j)
    if (mpz_odd_p(coords[static_cast<std::size_t>(j)].get_mpz_t())) x |= generator(j);
  return x;
}

bool TwoElementaryForm::preserves(const F2Linear& map) const {
  if (map.rank != rank_ || !map.is_invertible()) return false;
  for (F2Element x = 0; x < size(); ++x)
    if (q(map.apply(x)) != q(x)) return false;
  return true;
}

F2Linear DiscriminantAutomorphism::to_f2(const TwoElementaryForm& form) const {
  F2Linear out{form.rank(), {}};
  for (const auto& img : images) out.images.push_back(form.encode(img));
  return out;
}

// ---------------------------------------------------------------------------
// Induced actions

DiscriminantAutomorphism induced_discriminant_action(const Lattice& lattice, const IntMatrix& m) {
  return induced_discriminant_action(lattice, discriminant_form(lattice), m);
}

DiscriminantAutomorphism induced_discriminant_action(const Lattice& lattice, const FiniteQuadraticForm& form,
                                                     const IntMatrix& m) {
  if (!lattice.is_isometry(m))
    throw std::invalid_argument("induced_discriminant_action: matrix is not an isometry of " + lattice.name());
  const RatMatrix mq = to_rational(m);
  DiscriminantAutomorphism act;
  for (std::size_t i = 0; i < form.generator_count(); ++i) {
    const RatVector img = mq.apply(form.generator_lifts().column(i));
    act.images.push_back(form.coordinates(img));
  }

  auto apply = [&](const IntVector& x) {
    IntVector y(form.generator_count(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) y[j] += x[i] * act.images[i][j];
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = mod_floor(y[j], form.divisors()[j]);
    return y;
  };

  bool ok = true;
  if (form.order() <= 4096) {
    for (const auto& x : form.elements())
      if (form.q(apply(x)) != form.q(x)) {
        ok = false;
        break;
      }
  } else {
    const std::size_t k = form.generator_count();
    for (std::size_t i = 0; i < k && ok; ++i) {
      IntVector ei(k, 0);
      ei[i] = 1;
      if (form.q(act.images[i]) != form.q(ei)) ok = false;
      for (std::size_t j = 0; j < k && ok; ++j) {
        IntVector ej(k, 0);
        ej[j] = 1;
        if (form.b(act.images[i], act.images[j]) != form.b(ei, ej)) ok = false;
      }
    }
  }
  if (!ok) throw std::logic_error("induced_discriminant_action: induced map does not preserve q");
  return act;
}

// ---------------------------------------------------------------------------
// Gluing

bool GlueMap::is_anti_isometry() const {
  if (!source.is_two_elementary() || !target.is_two_elementary()) return false;
  const TwoElementaryForm s(source);
  const TwoElementaryForm t(target);
  if (s.rank() != t.rank() || map.rank != s.rank() || !map.is_invertible()) return false;
  for (F2Element x = 0; x < s.size(); ++x)
    if (t.q(map.apply(x)) != -s.q(x)) return false;
  return true;
}

std::optional<GlueMap> find_anti_isometry(const FiniteQuadraticForm& source, const FiniteQuadraticForm& target,
                                          const GlueFilter& accept) {
  if (!source.is_two_elementary() || !target.is_two_elementary())
    throw std::invalid_argument("find_anti_isometry: forms must be 2-elementary");
  const TwoElementaryForm s(source);
  const TwoElementaryForm t(target);
  if (s.rank() != t.rank()) return std::nullopt;

  std::optional<F2Linear> found;
  IsometrySearch search(s, t, /*anti=*/true);
  search.run({}, [&](const F2Linear& map) {
    if (accept && !accept(map)) return false;
    found = map;
    return true;
  });
  if (!found) return std::nullopt;
  return GlueMap{source, target, *found};
}

Overlattice glue_overlattice(const Lattice& s, const Lattice& t, const GlueMap& glue) {
  if (glue.source.generator_lifts().rows() != s.rank() || glue.target.generator_lifts().rows() != t.rank())
    throw std::invalid_argument("glue_overlattice: glue map does not match the lattices");
  if (!glue.is_anti_isometry()) throw std::invalid_argument("glue_overlattice: glue map is not an anti-isometry");

  const Lattice sum = direct_sum({s, t}, s.name() + "+" + t.name());
  const std::size_t n = sum.rank();
  const TwoElementaryForm ts(glue.source);
  const TwoElementaryForm tt(glue.target);
  const std::size_t k = glue.source.generator_count();

  std::vector<RatVector> glue_vectors;
  Integer denom = 1;
  for (std::size_t j = 0; j < k; ++j) {
    RatVector v = glue.source.generator_lifts().column(j);
    const RatVector w = glue.target.lift(tt.coordinates(glue.apply(ts.generator(static_cast<int>(j)))));
    v.insert(v.end(), w.begin(), w.end());
    for (const auto& x : v) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
    glue_vectors.push_back(std::move(v));
  }

  IntMatrix w(n, n + k);
  for (std::size_t i = 0; i < n; ++i) w(i, i) = denom;
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Rational scaled = glue_vectors[j][i] * Rational(denom);
      w(i, n + j) = scaled.get_num();
    }

  const SmithForm snf = smith_normal_form(w);
  if (snf.rank() != n) throw std::logic_error("glue_overlattice: generators do not span");
  const RatMatrix u_inv = inverse(snf.U);
  RatMatrix basis(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j) = u_inv(i, j) * Rational(snf.D(j, j)) / Rational(denom);

  const RatMatrix gram_q = basis.transpose() * to_rational(sum.gram()) * basis;
  if (!is_integral(gram_q)) throw std::invalid_argument("glue_overlattice: glue is not integral");
  Lattice over(s.name() + "~" + t.name(), to_integer(gram_q));
  if (!over.is_even()) throw std::invalid_argument("glue_overlattice: glued lattice is odd");

  const RatMatrix b_inv = inverse(basis);
  const RatMatrix embed = b_inv * RatMatrix::identity(n);
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  for (std::size_t i = 0; i < s.rank(); ++i) first.push_back(i);
  for (std::size_t i = s.rank(); i < n; ++i) second.push_back(i);

  Rational det_b = 1;
  {
    // |det B| = 1 / index
    RatMatrix a = basis;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && a(p, c) == 0) ++p;
      if (p == n) throw std::logic_error("glue_overlattice: singular basis");
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(p, j));
        det_b = -det_b;
      }
      det_b *= a(c, c);
      for (std::size_t i = c + 1; i < n; ++i) {
        if (a(i, c) == 0) continue;
        const Rational f = a(i, c) / a(c, c);
        for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      }
    }
  }
  const Rational inv_index = abs(det_b);
  if (inv_index.get_num() != 1) throw std::logic_error("glue_overlattice: index is not integral");

  return Overlattice{std::move(over), basis, to_integer(embed.columns(first)), to_integer(embed.columns(second)),
                     Integer(inv_index.get_den())};
}

// ---------------------------------------------------------------------------
// O(q)

OrthogonalGroup orthogonal_group_order(const FiniteQuadraticForm& form) {
  if (!form.is_two_elementary()) throw std::invalid_argument("orthogonal_group_order: form is not 2-elementary");
  if (form.generator_count() > 10) throw std::invalid_argument("orthogonal_group_order: rank exceeds 10");
  const TwoElementaryForm q(form);
  const int r = q.rank();

  OrthogonalGroup result{Integer(1), {}, std::vector<std::size_t>(static_cast<std::size_t>(r), 1)};
  std::vector<int> gen_level;
  IsometrySearch search(q, q, /*anti=*/false);

  for (int level = r - 1; level >= 0; --level) {
    const F2Element base = q.generator(level);
    std::vector<F2Element> prefix;
    for (int l = 0; l < level; ++l) prefix.push_back(q.generator(l));

    auto orbit_of_base = [&]() {
      std::vector<char> seen(q.size(), 0);
      std::vector<F2Element> orbit{base};
      seen[base] = 1;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (std::size_t g = 0; g < result.generators.size(); ++g) {
          if (gen_level[g] < level) continue;
          const F2Element y = result.generators[g].apply(orbit[i]);
          if (!seen[y]) {
            seen[y] = 1;
            orbit.push_back(y);
          }
        }
      return std::make_pair(orbit, seen);
    };

    auto [orbit, seen] = orbit_of_base();
    for (F2Element c : search.candidates(level, prefix)) {
      if (seen[c]) continue;
      std::vector<F2Element> fixed = prefix;
      fixed.push_back(c);
      std::optional<F2Linear> found;
      search.run(fixed, [&](const F2Linear& map) {
        found = map;
        return true;
      });
      if (!found) continue;
      result.generators.push_back(*found);
      gen_level.push_back(level);
      std::tie(orbit, seen) = orbit_of_base();
    }
    result.orbit_sizes[static_cast<std::size_t>(level)] = orbit.size();
  }
  for (std::size_t s : result.orbit_sizes) result.order *= static_cast<unsigned long>(s);
  return result;
}

}  // namespace latmono
