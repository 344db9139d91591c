#include "latmono/k3.hpp"

#include <stdexcept>

#include "latmono/del_pezzo.hpp"

namespace latmono {

Lattice k3_lattice() {
  const Lattice u = standard_lattice(StandardKind::U);
  const Lattice e8 = standard_lattice(StandardKind::E8Neg);
  return direct_sum({u, u, u, e8, e8}, "K3");
}

Lattice l_plus() {
  IntMatrix g = -2 * IntMatrix::identity(8);
  g(0, 0) = 2;
  return Lattice("L+", g, {"h", "a1", "a2", "a3", "a4", "a5", "a6", "a7"});
}

IntMatrix l_plus_congruence() {
  const IntMatrix p = IntMatrix::identity(8);
  const IntMatrix doubled = Integer(2) * picard_gram();
  if (p.transpose() * doubled * p != l_plus().gram()) throw std::logic_error("l_plus_congruence: check failed");
  if (!is_unimodular(p)) throw std::logic_error("l_plus_congruence: base change not unimodular");
  return p;
}

IntMatrix d4_deck_block() {
  // ambient action on columns: e₁ ↦ −e₂, e₂ ↦ e₁, e₃ ↦ −e₄, e₄ ↦ e₃
  const IntMatrix amb{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
  const IntMatrix b = d4_embedding();
  const auto x = solve_rational(to_rational(b), to_rational(amb * b));
  if (!x || !is_integral(*x)) throw std::logic_error("d4_deck_block: D4 not preserved");
  return to_integer(*x);
}

std::pair<Lattice, DeckIsometry> l_minus_with_T() {
  const Lattice a1 = standard_lattice(StandardKind::A1);
  const Lattice d4 = standard_lattice(StandardKind::D4);
  const Lattice u = standard_lattice(StandardKind::U);
  const Lattice u2 = standard_lattice(StandardKind::U2);
  Lattice lm = direct_sum({Lattice("A1", a1.gram(), {"u"}), Lattice("A1", a1.gram(), {"v"}), d4, d4, u, u2}, "L-");

  const IntMatrix t_a1{{0, -1}, {1, 0}};          // Tu = v, Tv = −u
  const IntMatrix t_d4 = d4_deck_block();
  const IntMatrix t_u{{-1, 0, 2, 0},              // Te = −e − e′,  Te′ = 2e + e′
                      {0, 1, 0, 2},               // Tf = f − f′,   Tf′ = 2f − f′
                      {-1, 0, 1, 0},
                      {0, -1, 0, -1}};
  DeckIsometry deck;
  deck.matrix = block_diagonal({t_a1, t_d4, t_d4, t_u});
  deck.blocks = {{"A1+A1", 0, 2}, {"D4", 2, 4}, {"D4", 6, 4}, {"U+U(2)", 10, 4}};

  const IntMatrix& t = deck.matrix;
  const IntMatrix id = IntMatrix::identity(lm.rank());
  if (!lm.is_isometry(t)) throw std::logic_error("l_minus_with_T: T is not an isometry");
  if (t * t != -id) throw std::logic_error("l_minus_with_T: T^2 != -I");
  if (t * t * t * t != id) throw std::logic_error("l_minus_with_T: T^4 != I");
  return {std::move(lm), std::move(deck)};
}

bool verify_orthogonal_pair(const Lattice& ambient, const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != ambient.rank() || b.rows() != ambient.rank()) return false;
  if (a.cols() + b.cols() != ambient.rank()) return false;
  if (!(a.transpose() * ambient.gram() * b).is_zero()) return false;
  const IntMatrix ca = orthogonal_complement(ambient, a);
  const IntMatrix cb = orthogonal_complement(ambient, b);
  return same_span(ca, b) && same_span(cb, a);
}

Integer glue_group_order(const Lattice& s, const Lattice& t, const GlueMap& gamma) {
  if (!gamma.is_anti_isometry()) throw std::invalid_argument("glue_group_order: not an anti-isometry");
  if (gamma.source.order() != discriminant_form(s).order() || gamma.target.order() != discriminant_form(t).order())
    throw std::invalid_argument("glue_group_order: glue map does not match the lattices");
  return gamma.source.order();
}

const K3Glue& k3_glue() {
  static const K3Glue glue = [] {
    const Lattice lp = l_plus();
    auto [lm, deck] = l_minus_with_T();
    const FiniteQuadraticForm qp = discriminant_form(lp);
    const FiniteQuadraticForm qm = discriminant_form(lm);
    const TwoElementaryForm tp(qp);
    const TwoElementaryForm tm(qm);

    // L₊ shares its basis with the Picard lattice (congruence matrix is I).
    const IntMatrix p = l_plus_congruence();
    const IntMatrix tau = to_integer(inverse(p) * to_rational(geiser_involution() * p));
    const F2Linear tau_bar = induced_discriminant_action(lp, qp, tau).to_f2(tp);
    const F2Linear t_bar = induced_discriminant_action(lm, qm, deck.matrix).to_f2(tm);

    auto first = find_anti_isometry(qp, qm);
    if (!first) throw std::logic_error("k3_glue: no anti-isometry between the discriminant forms");
    std::size_t examined = 0;
    auto compatible = [&](const F2Linear& g) {
      ++examined;
      return g.compose(tau_bar) == t_bar.compose(g);
    };
    const bool first_ok = compatible(first->map);
    examined = 0;
    auto chosen = first_ok ? first : find_anti_isometry(qp, qm, compatible);
    if (!chosen) throw std::logic_error("k3_glue: no anti-isometry intertwines the Geiser involution with T");
    if (first_ok) examined = 1;

    Overlattice over = glue_overlattice(lp, lm, *chosen);
    return K3Glue{lp, lm, deck, *first, first_ok, *chosen, examined, tau_bar, t_bar, std::move(over)};
  }();
  return glue;
}

}  // namespace latmono
