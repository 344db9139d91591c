#include "latmono/suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "latmono/del_pezzo.hpp"
#include "latmono/discriminant.hpp"
#include "latmono/gaussian.hpp"
#include "latmono/graph.hpp"
#include "latmono/k3.hpp"
#include "latmono/weyl_e7.hpp"

namespace latmono {
namespace {

std::string str(const Integer& n) { return n.get_str(); }
std::string str(std::size_t n) { return std::to_string(n); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string str(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," + std::to_string(s.zero) + ")";
}

std::string str(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

std::string divisors_str(const FiniteQuadraticForm& q) {
  if (q.is_trivial()) return "trivial";
  std::string out;
  std::size_t i = 0;
  const auto& d = q.divisors();
  while (i < d.size()) {
    std::size_t j = i;
    while (j < d.size() && d[j] == d[i]) ++j;
    if (!out.empty()) out += "+";
    out += "(Z/" + d[i].get_str() + ")^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string gauss_str(const GaussMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? "," : "") + m(r, c).to_string();
    out += "]";
  }
  return out + "]";
}

const AutomorphismResult& gosset_automorphisms() {
  static const AutomorphismResult r = automorphism_group(gosset_graph());
  return r;
}

const OrthogonalGroup& o_q_plus() {
  static const OrthogonalGroup g = orthogonal_group_order(discriminant_form(l_plus()));
  return g;
}

const OrthogonalGroup& o_q_minus() {
  static const OrthogonalGroup g = orthogonal_group_order(discriminant_form(l_minus_with_T().first));
  return g;
}

// ---------------------------------------------------------------------------

void del_pezzo_suite(SuiteCertificate& s) {
  const auto& cls = exceptional_classes();
  const IntVector k = canonical_class();

  s.check("class_count", "number of exceptional classes", "56", [&] { return str(cls.size()); });
  s.check("self_pairing", "classes with <x,x> = -1", "56", [&] {
    return str(static_cast<std::size_t>(std::count_if(cls.begin(), cls.end(), [](const auto& c) { return pairing(c, c) == -1; })));
  });
  s.check("canonical_pairing", "classes with <x,k> = -1", "56", [&] {
    return str(static_cast<std::size_t>(
        std::count_if(cls.begin(), cls.end(), [&](const auto& c) { return pairing(c.coords, k) == -1; })));
  });
  s.check("canonical_norm", "<k,k>", "2", [&] { return str(pairing(k, k)); });
  s.check("l1_star", "coordinates of L_1*", "(3,-2,-1,-1,-1,-1,-1,-1)", [&] { return str(cls[7].coords); });
  s.check("dual_pairs", "unordered pairs with pairing 2, all of the form {L, L*}", "28", [&] {
    std::size_t n = 0;
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b)
        if (pairing(cls[a], cls[b]) == 2) {
          if (dual_index(a) != b) return std::string("pair (") + cls[a].label + "," + cls[b].label + ") is not dual";
          ++n;
        }
    return str(n);
  });
  s.check("pairing_values", "pairings between distinct classes", "{0,1,2}", [&] {
    std::set<long> vals;
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b) vals.insert(pairing(cls[a], cls[b]).get_si());
    std::string out = "{";
    for (long v : vals) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
  });
  s.check("coefficient_box", "box for <x,x> = -1, <x,k> = -1", "x0 in [0,3], |xi| <= 3", [] {
    const auto b = coefficient_box(-1, -1);
    return "x0 in [" + std::to_string(b.x0_min) + "," + std::to_string(b.x0_max) + "], |xi| <= " +
           std::to_string(b.xi_bound);
  });
  s.check("enumeration", "brute-force solutions of <x,x> = -1, <x,k> = -1 equal the class list", "56 equal", [&] {
    const auto found = enumerate_norm_vectors(-1, -1);
    std::set<IntVector> a(found.begin(), found.end());
    std::set<IntVector> b;
    for (const auto& c : cls) b.insert(c.coords);
    return str(found.size()) + (a == b ? " equal" : " differ");
  });
  s.check("line_sets", "|S_L| and |S*_L| for every class", "27/27 for all 56", [&] {
    for (const auto& c : cls) {
      const auto ls = line_sets(c);
      if (ls.s.size() != 27 || ls.s_star.size() != 27)
        return c.label + ": " + str(ls.s.size()) + "/" + str(ls.s_star.size());
    }
    return std::string("27/27 for all 56");
  });
  s.check("line_sets_dual", "S_{L*} = S*_L for every class", "true", [&] {
    for (const auto& c : cls)
      if (line_sets(dual_of(c)).s != line_sets(c).s_star) return std::string("false");
    return std::string("true");
  });
  s.check("geiser_formula", "tau(x) = -x + <x,k> k as matrices", "true", [&] {
    const IntMatrix tau = geiser_involution();
    IntMatrix expected = -IntMatrix::identity(8);
    const IntMatrix g = picard_gram();
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) expected(i, j) += k[i] * k[j] * g(j, j);
    return str(tau == expected);
  });
  s.check("geiser_e1", "tau(e1)", "(3,-2,-1,-1,-1,-1,-1,-1)", [&] { return str(geiser_involution().column(1)); });
  s.check("geiser_involutive", "tau^2 = I and tau(k) = k", "true", [&] {
    const IntMatrix tau = geiser_involution();
    return str(tau * tau == IntMatrix::identity(8) && tau.apply(k) == k);
  });
}

void gosset_suite(SuiteCertificate& s) {
  const Graph g = gosset_graph();
  s.check("vertices", "Gosset graph vertex count", "56", [&] { return str(g.size()); });
  s.check("regular_degree", "Gosset graph valency", "27", [&] {
    auto d = g.regular_degree();
    return d ? str(*d) : std::string("irregular");
  });
  s.check("edges", "Gosset graph edge count", "756", [&] { return str(g.edge_count()); });
  s.check("neighborhoods", "every neighbourhood: vertices/valency", "27/16 for all 56", [&] {
    for (std::size_t v = 0; v < g.size(); ++v) {
      const Graph n = neighborhood_subgraph(g, v);
      const auto d = n.regular_degree();
      if (n.size() != 27 || !d || *d != 16) return g.labels()[v] + ": irregular or wrong size";
    }
    return std::string("27/16 for all 56");
  });
  s.check("neighborhoods_isomorphic", "all 56 neighbourhoods isomorphic to the first", "true", [&] {
    const Graph first = neighborhood_subgraph(g, 0);
    for (std::size_t v = 1; v < g.size(); ++v)
      if (!are_isomorphic(first, neighborhood_subgraph(g, v))) return std::string("false");
    return std::string("true");
  });
  s.check("aut_order", "|Aut(Gosset)|", "2903040", [&] { return str(gosset_automorphisms().order); });
  s.check("aut_generators_valid", "every generator preserves edges and non-edges", "true", [&] {
    for (const auto& p : gosset_automorphisms().group.generators())
      if (!g.is_automorphism(p)) return std::string("false");
    return std::string("true");
  });
  s.check("transitive", "orbit of L_1 under Aut(Gosset)", "56", [&] {
    return str(gosset_automorphisms().group.orbit(0).size());
  });
  s.check("vertex_stabilizer", "stabilizer order of L_1", "51840", [&] {
    return str(gosset_automorphisms().group.stabilizer_order(0));
  });
  s.check("schlafli_aut_order", "|Aut(Schlafli)| for the neighbourhood of L_1", "51840", [&] {
    return str(automorphism_group(schlafli_graph()).order);
  });
  s.check("dual_blocks", "generators map dual pairs to dual pairs", "true", [&] {
    for (const auto& p : gosset_automorphisms().group.generators())
      for (std::size_t v = 0; v < g.size(); ++v)
        if (p[dual_index(v)] != dual_index(p[v])) return std::string("false");
    return std::string("true");
  });
  s.check("schlafli_complement", "Schlafli graph vs its complement", "false", [&] {
    const Graph sch = schlafli_graph();
    return str(are_isomorphic(sch, sch.complement()));
  });
  s.check("meeting_graph_local", "pairing-1 graph: neighbourhood of L_1 vertices/valency", "27/10", [] {
    const Graph n = neighborhood_subgraph(meeting_graph(), 0);
    const auto d = n.regular_degree();
    return str(n.size()) + "/" + (d ? str(*d) : std::string("irregular"));
  });
  s.check("meeting_graph_local_complement", "pairing-1 neighbourhood of L_1* is the Schlafli complement", "true", [] {
    return str(are_isomorphic(neighborhood_subgraph(meeting_graph(), 7), schlafli_graph().complement()));
  });
  s.check("meeting_graph_aut", "Aut(Gosset) generators preserve the pairing-1 graph", "true", [] {
    const Graph m = meeting_graph();
    for (const auto& p : gosset_automorphisms().group.generators())
      if (!m.is_automorphism(p)) return std::string("false");
    return std::string("true");
  });
}

void weyl_suite(SuiteCertificate& s) {
  const PermGroup& w = weyl_group_on_classes();
  s.check("root_count", "vectors with <r,r> = -2, <r,k> = 0", "126", [] { return str(roots().size()); });
  s.check("roots_negation", "root set closed under negation", "true", [] {
    std::set<IntVector> rs(roots().begin(), roots().end());
    for (const auto& r : roots()) {
      IntVector neg;
      for (const auto& x : r) neg.push_back(-x);
      if (!rs.count(neg)) return std::string("false");
    }
    return std::string("true");
  });
  s.check("simple_roots", "simple roots are roots", "7", [] {
    std::size_t n = 0;
    for (const auto& r : simple_roots()) n += is_root(r) ? 1 : 0;
    return str(n);
  });
  s.check("weyl_order", "order of W(E7) on the 56 classes", "2903040", [&] { return str(w.order()); });
  s.check("weyl_transitive", "orbit of L_1 under W(E7)", "56", [&] { return str(w.orbit(0).size()); });
  s.check("equals_aut_gosset", "W(E7) and Aut(Gosset) contain each other's generators", "true", [&] {
    const PermGroup& aut = gosset_automorphisms().group;
    for (const auto& p : w.generators())
      if (!aut.contains(p)) return std::string("false");
    for (const auto& p : aut.generators())
      if (!w.contains(p)) return std::string("false");
    return std::string("true");
  });
  s.check("pairings_preserved", "pairing(g a, g b) = pairing(a, b) for generators", "true", [&] {
    const auto& cls = exceptional_classes();
    for (const auto& p : w.generators())
      for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = 0; b < cls.size(); ++b)
          if (pairing(cls[p[a]], cls[p[b]]) != pairing(cls[a], cls[b])) return std::string("false");
    return std::string("true");
  });
  s.check("random_words", "100 random words preserve the Gram matrix and fix k", "true", [] {
    std::mt19937 rng(20240601u);
    const auto simple = simple_roots();
    std::vector<IntMatrix> refl;
    for (const auto& r : simple) refl.push_back(reflection(r));
    const Lattice pic = picard_lattice();
    for (int word = 0; word < 100; ++word) {
      IntMatrix m = IntMatrix::identity(8);
      const unsigned len = 1 + rng() % 30;
      for (unsigned i = 0; i < len; ++i) m = refl[rng() % refl.size()] * m;
      if (!pic.is_isometry(m) || m.apply(canonical_class()) != canonical_class()) return std::string("false");
    }
    return std::string("true");
  });
  s.check("geiser_member", "Geiser permutation lies in W(E7)", "true", [&] {
    return str(w.contains(class_permutation(geiser_involution())));
  });
  s.check("geiser_central", "Geiser permutation commutes with every generator", "true", [&] {
    return str(w.is_central(class_permutation(geiser_involution())));
  });
  s.check("geiser_order", "order of the Geiser permutation", "2", [] {
    const Permutation t = class_permutation(geiser_involution());
    return str(t.is_identity() ? std::size_t{1} : (t * t).is_identity() ? std::size_t{2} : std::size_t{0});
  });
  s.check("geiser_commutes_matrix", "tau commutes with each simple reflection", "true", [] {
    const IntMatrix tau = geiser_involution();
    for (const auto& r : simple_roots()) {
      const IntMatrix m = reflection(r);
      if (m * tau != tau * m) return std::string("false");
    }
    return std::string("true");
  });
  s.check("center_order", "|Z(W(E7))|", "2", [] { return str(center_and_quotient().center_order); });
  s.check("quotient_order", "|W(E7)/Z|", "1451520", [] { return str(center_and_quotient().quotient_order); });
  s.check("simple_reflection_not_central", "s_{e1-e2} is central", "false", [&] {
    return str(w.is_central(class_permutation(reflection(simple_roots()[0]))));
  });
  s.check("disc_image_order", "order of the image of W(E7) in O(q_{L+})", "2903040", [] {
    return str(discriminant_representation().image_order);
  });
  s.check("disc_kernel_trivial", "W(E7) -> O(q_{L+}) is injective", "true", [] {
    return str(discriminant_representation().kernel_trivial);
  });
}

void lattices_suite(SuiteCertificate& s) {
  const Lattice e8 = standard_lattice(StandardKind::E8Neg);
  const Lattice k3 = k3_lattice();
  const Lattice lp = l_plus();
  const Lattice lm = l_minus_with_T().first;

  s.check("e8_signature", "signature of E8(-1)", "(0,8,0)", [&] { return str(e8.signature()); });
  s.check("e8_det", "det E8(-1)", "1", [&] { return str(e8.determinant()); });
  s.check("e8_even", "E8(-1) is even", "true", [&] { return str(e8.is_even()); });
  s.check("k3_rank", "rank of U^3 + E8(-1)^2", "22", [&] { return str(k3.rank()); });
  s.check("k3_signature", "signature of U^3 + E8(-1)^2", "(3,19,0)", [&] { return str(k3.signature()); });
  s.check("k3_unimodular", "|det| of the K3 lattice", "1", [&] { return str(Integer(abs(k3.determinant()))); });
  s.check("k3_even", "K3 lattice is even", "true", [&] { return str(k3.is_even()); });
  s.check("d4_snf", "Smith form of the D4 Gram", "(1,1,2,2)", [] {
    return str(smith_normal_form(standard_lattice(StandardKind::D4).gram()).invariant_factors());
  });
  s.check("a1_q", "q of the generator of A_{A1}", "3/2", [] {
    return discriminant_form(standard_lattice(StandardKind::A1)).q({Integer(1)}).get_str();
  });
  s.check("l_plus_signature", "signature of L+", "(1,7,0)", [&] { return str(lp.signature()); });
  s.check("l_minus_signature", "signature of L-", "(2,12,0)", [&] { return str(lm.signature()); });
  s.check("l_plus_congruence", "P^T (2 G_Pic) P = Gram(L+) with P unimodular", "true", [] {
    const IntMatrix p = l_plus_congruence();
    return str(is_unimodular(p) && p.transpose() * (Integer(2) * picard_gram()) * p == l_plus().gram());
  });
  s.check("l_plus_discriminant", "A_{L+}", "(Z/2)^8", [&] { return divisors_str(discriminant_form(lp)); });
  s.check("l_minus_discriminant", "A_{L-}", "(Z/2)^8", [&] { return divisors_str(discriminant_form(lm)); });
  s.check("two_elementary", "L+, L-, K3 are 2-elementary", "true", [&] {
    return str(is_2_elementary(lp) && is_2_elementary(lm) && is_2_elementary(k3));
  });
  s.check("l_plus_det", "|det L+|", "256", [&] { return str(Integer(abs(lp.determinant()))); });
  s.check("o_q_plus", "|O(q_{L+})|", "2903040", [] { return str(o_q_plus().order); });
  s.check("o_q_minus", "|O(q_{L-})|", "2903040", [] { return str(o_q_minus().order); });
  s.check("small_glue", "glue of <2> and A1: |det|, even, signature", "1, true, (1,1,0)", [] {
    const Lattice two = standard_lattice(StandardKind::Diag, 2);
    const Lattice a1 = standard_lattice(StandardKind::A1);
    auto gamma = find_anti_isometry(discriminant_form(two), discriminant_form(a1));
    if (!gamma) return std::string("no anti-isometry");
    const Overlattice o = glue_overlattice(two, a1, *gamma);
    return Integer(abs(o.lattice.determinant())).get_str() + ", " + str(o.lattice.is_even()) + ", " +
           str(o.lattice.signature());
  });
  s.check("a1_a1_no_glue", "anti-isometry between q_{A1} and itself", "none", [] {
    const auto q = discriminant_form(standard_lattice(StandardKind::A1));
    return std::string(find_anti_isometry(q, q) ? "found" : "none");
  });
}

void k3_glue_suite(SuiteCertificate& s) {
  const K3Glue& g = k3_glue();
  const Lattice& over = g.overlattice.lattice;
  s.check("anti_isometry_exists", "anti-isometry q_{L+} -> q_{L-}", "true", [&] { return str(g.gamma.map.rank == 8); });
  s.check("anti_isometry_exhaustive", "elements with q_-(gamma x) = -q_+(x)", "256/256", [&] {
    const TwoElementaryForm tp(g.gamma.source);
    const TwoElementaryForm tm(g.gamma.target);
    std::size_t ok = 0;
    for (F2Element x = 0; x < tp.size(); ++x) ok += tm.q(g.gamma.apply(x)) == -tp.q(x) ? 1 : 0;
    return str(ok) + "/" + str(static_cast<std::size_t>(tp.size()));
  });
  s.check("overlattice_even", "glued lattice is even", "true", [&] { return str(over.is_even()); });
  s.check("overlattice_unimodular", "|det| of the glued lattice", "1", [&] { return str(Integer(abs(over.determinant()))); });
  s.check("overlattice_signature", "signature of the glued lattice", "(3,19,0)", [&] { return str(over.signature()); });
  s.check("glue_index", "[overlattice : L+ + L-]", "256", [&] { return str(g.overlattice.index); });
  s.check("glue_group_order", "|graph(gamma)|", "256", [&] { return str(glue_group_order(g.l_plus, g.l_minus, g.gamma)); });
  s.check("l_plus_primitive", "L+ primitive in the overlattice", "true", [&] {
    return str(is_primitive(over, g.overlattice.first_basis));
  });
  s.check("l_minus_primitive", "L- primitive in the overlattice", "true", [&] {
    return str(is_primitive(over, g.overlattice.second_basis));
  });
  s.check("orthogonal_pair", "L+ and L- are each other's orthogonal complement", "true", [&] {
    return str(verify_orthogonal_pair(over, g.overlattice.first_basis, g.overlattice.second_basis));
  });
  s.check("signature_sum", "(1,7) + (2,12)", "(3,19,0)", [&] { return str(g.l_plus.signature() + g.l_minus.signature()); });
  s.check("minus_identity_action", "-I on L+ acts trivially on A_{L+}", "true", [&] {
    const auto q = discriminant_form(g.l_plus);
    const TwoElementaryForm t(q);
    return str(induced_discriminant_action(g.l_plus, q, -IntMatrix::identity(8)).to_f2(t) == F2Linear::identity(8));
  });
  s.check("deck_geiser_compatible", "gamma o tau = T o gamma on A_{L+}", "true", [&] {
    return str(g.gamma.map.compose(g.tau_bar) == g.t_bar.compose(g.gamma.map));
  });
  s.check("first_gamma_compatible", "the lexicographically first gamma is compatible", "true", [&] {
    return str(g.first_gamma_compatible);
  });
}

void gaussian_suite(SuiteCertificate& s) {
  const auto [lm, deck] = l_minus_with_T();
  const IntMatrix& t = deck.matrix;
  const IntMatrix id = IntMatrix::identity(14);
  const HermitianLattice h = h_l_minus();
  const SummandForms parts = summand_hermitian_forms();

  s.check("a1_gram", "hermitian Gram on {u}", "[[-2+0i]]", [&] { return gauss_str(parts.a1_pair.gram); });
  s.check("d4_gram", "hermitian Gram on {p, q}", "[[-2+0i,1-1i],[1+1i,-2+0i]]", [&] { return gauss_str(parts.d4.gram); });
  s.check("u_gram", "hermitian Gram on {e, f}", "[[0+0i,1-1i],[1+1i,0+0i]]", [&] { return gauss_str(parts.u_u2.gram); });
  s.check("polynomial", "h_{L-} as a polynomial",
          "-2|z0|^2 - 2|z1|^2 - 2|z2|^2 - 2|z3|^2 - 2|z4|^2 + 2Re(z1*conj(z2)) + 2Im(z1*conj(z2)) + "
          "2Re(z3*conj(z4)) + 2Im(z3*conj(z4)) + 2Re(z5*conj(z6)) + 2Im(z5*conj(z6))",
          [&] { return hermitian_polynomial(h).to_string(); });
  s.check("hermitian_det", "det of the 7x7 hermitian Gram", "16+0i", [&] { return hermitian_determinant(h.gram).to_string(); });
  s.check("hermitian_signature", "signature of h_{L-}", "(1,6,0)", [&] { return str(hermitian_signature(h)); });
  s.check("t_order", "T^4 = I and T^2 = -I", "true", [&] { return str(t * t * t * t == id && t * t == -id); });
  s.check("t_isometry", "T^T G T = G", "true", [&] { return str(lm.is_isometry(t)); });
  s.check("t_is_scalar_i", "T in the real basis (b, Tb) is multiplication by i", "true", [&] {
    const IntMatrix b = real_basis_in_L(h, t);
    const RatMatrix conj = inverse(b) * to_rational(t * b);
    GaussMatrix scalar(7, 7);
    for (std::size_t j = 0; j < 7; ++j) scalar(j, j) = kI;
    return str(is_integral(conj) && to_integer(conj) == realify(scalar));
  });
  s.check("round_trip_gram", "real form of h_{L-} equals Gram(L-) in the basis (b, Tb)", "true", [&] {
    const IntMatrix b = real_basis_in_L(h, t);
    return str(to_real_lattice(h).first.gram() == b.transpose() * lm.gram() * b);
  });
  s.check("round_trip_t", "multiplication by i equals T in the basis (b, Tb)", "true", [&] {
    const IntMatrix b = real_basis_in_L(h, t);
    return str(to_rational(b) * to_rational(to_real_lattice(h).second) == to_rational(t * b));
  });
  s.check("real_signature", "signature of the real form", "(2,12,0)", [&] { return str(to_real_lattice(h).first.signature()); });
  s.check("unitary_scalar_i", "i*I is unitary", "true", [&] {
    GaussMatrix g(7, 7);
    for (std::size_t j = 0; j < 7; ++j) g(j, j) = kI;
    return str(is_unitary(g, h));
  });
  s.check("unitary_reflection", "reflection in a norm -2 vector is unitary of order 2", "true", [&] {
    GaussMatrix r(7, 1);
    r(0, 0) = GaussianInt(1);
    const GaussMatrix g = GaussMatrix::identity(7) + r * conjugate_transpose(r) * h.gram;
    return str(is_unitary(g, h) && g * g == GaussMatrix::identity(7) && g != GaussMatrix::identity(7));
  });
  s.check("non_unitary", "diag(1+i, 1, ..., 1) is unitary", "false", [&] {
    GaussMatrix g = GaussMatrix::identity(7);
    g(0, 0) = GaussianInt(Integer(1), Integer(1));
    return str(is_unitary(g, h));
  });
}

struct SuiteEntry {
  const char* name;
  void (*run)(SuiteCertificate&);
};

constexpr SuiteEntry kSuites[] = {
    {"del_pezzo", del_pezzo_suite}, {"gosset", gosset_suite},   {"weyl", weyl_suite},
    {"lattices", lattices_suite},   {"k3_glue", k3_glue_suite}, {"gaussian", gaussian_suite},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : kSuites) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

bool is_known_suite(std::string_view name) {
  if (name == "all") return true;
  for (const auto& e : kSuites)
    if (name == e.name) return true;
  return false;
}

SuiteCertificate run_suite(std::string_view name) {
  for (const auto& e : kSuites)
    if (name == e.name) {
      SuiteCertificate s;
      s.suite = e.name;
      e.run(s);
      return s;
    }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

Certificate run_suites(std::string_view name) {
  if (!is_known_suite(name)) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  Certificate cert;
  cert.toolkit_version = toolkit_version();
  if (name == "all") {
    for (const auto& n : suite_names()) cert.suites.push_back(run_suite(n));
  } else {
    cert.suites.push_back(run_suite(name));
  }
  return cert;
}

const std::vector<std::string>& export_names() {
  static const std::vector<std::string> names{"gosset", "schlafli", "h-minus", "k3-gram"};
  return names;
}

std::string export_object(std::string_view name) {
  if (name == "gosset") return gosset_graph().adjacency_list();
  if (name == "schlafli") return schlafli_graph().adjacency_list();
  if (name == "h-minus") return to_string(h_l_minus().gram);
  if (name == "k3-gram") return to_string(k3_lattice().gram());
  throw std::invalid_argument("unknown object '" + std::string(name) + "'");
}

}  // namespace latmono
