#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "latmono/discriminant.hpp"
#include "latmono/lattice.hpp"

namespace latmono {

/// U³ ⊕ E₈(−1)².
Lattice k3_lattice();

/// ⟨2⟩ ⊕ A₁⁷, i.e. diag(2, −2, …, −2).
Lattice l_plus();

/// P with Pᵀ·(2·G_Pic)·P = Gram(L₊), verified exactly.
IntMatrix l_plus_congruence();

struct SummandBlock {
  std::string name;
  std::size_t offset = 0;
  std::size_t size = 0;
};

/// Order-4 isometry of L₋ with T² = −I, block diagonal over the summands.
struct DeckIsometry {
  IntMatrix matrix;
  std::vector<SummandBlock> blocks;
};

/// L₋ = A₁² ⊕ D₄ ⊕ D₄ ⊕ U ⊕ U(2) with basis u, v | D₄ | D₄ | e, f | e′, f′.
/// T⁴ = I, T² = −I and TᵀGT = G are verified (std::logic_error otherwise).
std::pair<Lattice, DeckIsometry> l_minus_with_T();

/// T on a D₄ summand in the Cartan basis, from (x₁,x₂,x₃,x₄) ↦ (x₂,−x₁,x₄,−x₃).
IntMatrix d4_deck_block();

/// True iff span(a) and span(b) are each the saturated orthogonal complement
/// of the other inside the ambient lattice.
bool verify_orthogonal_pair(const Lattice& ambient, const IntMatrix& a, const IntMatrix& b);

/// |graph(γ)| = |A_S|; throws std::invalid_argument if γ is not an
/// anti-isometry between the discriminant forms of S and T.
Integer glue_group_order(const Lattice& s, const Lattice& t, const GlueMap& gamma);

/// Everything needed for the L₊/L₋ gluing, computed once.
struct K3Glue {
  Lattice l_plus;
  Lattice l_minus;
  DeckIsometry deck;
  GlueMap first_gamma;               // lexicographically first anti-isometry
  bool first_gamma_compatible = false;
  GlueMap gamma;                     // first anti-isometry with γ∘τ̄ = T̄∘γ
  std::size_t gammas_examined = 0;   // anti-isometries tested before success
  F2Linear tau_bar;                  // Geiser involution on A_{L₊}
  F2Linear t_bar;                    // T on A_{L₋}
  Overlattice overlattice;           // glued along gamma
};

/// Throws std::logic_error if no T-compatible anti-isometry exists.
const K3Glue& k3_glue();

}  // namespace latmono
