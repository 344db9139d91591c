#include "latmono/weyl_e7.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "latmono/del_pezzo.hpp"

namespace latmono {
namespace {

IntVector vec(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<IntVector> build_roots() {
  std::vector<IntVector> rs = enumerate_norm_vectors(-2, 0);
  const std::set<IntVector> as_set(rs.begin(), rs.end());
  for (const auto& r : rs) {
    const IntMatrix s = reflection(r);
    for (const auto& x : rs)
      if (!as_set.count(s.apply(x))) throw std::logic_error("roots: enumeration not closed under reflections");
  }
  return rs;
}

}  // namespace

bool is_root(const IntVector& v) {
  return v.size() == 8 && pairing(v, v) == -2 && pairing(v, canonical_class()) == 0;
}

const std::vector<IntVector>& roots() {
  static const std::vector<IntVector> rs = build_roots();
  return rs;
}

std::vector<IntVector> simple_roots() {
  return {vec({0, 1, -1, 0, 0, 0, 0, 0}), vec({0, 0, 1, -1, 0, 0, 0, 0}), vec({0, 0, 0, 1, -1, 0, 0, 0}),
          vec({0, 0, 0, 0, 1, -1, 0, 0}), vec({0, 0, 0, 0, 0, 1, -1, 0}), vec({0, 0, 0, 0, 0, 0, 1, -1}),
          vec({1, -1, -1, -1, 0, 0, 0, 0})};
}

IntMatrix reflection(const IntVector& r) {
  if (!is_root(r)) throw std::invalid_argument("reflection: not a root");
  // x ↦ x + r·(rᵀ G x)
  const IntMatrix g = picard_gram();
  IntMatrix m = IntMatrix::identity(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) += r[i] * r[j] * g(j, j);
  return m;
}

Permutation class_permutation(const IntMatrix& m) {
  const auto& cls = exceptional_classes();
  std::vector<Permutation::Point> img(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const auto j = class_index(m.apply(cls[i].coords));
    if (!j) throw std::logic_error("class_permutation: image of " + cls[i].label + " is not exceptional");
    img[i] = static_cast<Permutation::Point>(*j);
  }
  return Permutation(std::move(img));
}

const PermGroup& weyl_group_on_classes() {
  static const PermGroup group = [] {
    std::vector<Permutation> gens;
    for (const auto& r : simple_roots()) gens.push_back(class_permutation(reflection(r)));
    return PermGroup::from_generators(exceptional_classes().size(), std::move(gens));
  }();
  return group;
}

CenterQuotient center_and_quotient() {
  const PermGroup& w = weyl_group_on_classes();
  const std::vector<Permutation> center = w.center_of_transitive();
  CenterQuotient out;
  out.center_order = static_cast<unsigned long>(center.size());
  out.quotient_order = w.order() / out.center_order;
  out.geiser = class_permutation(geiser_involution());
  out.geiser_in_center = std::find(center.begin(), center.end(), out.geiser) != center.end();
  return out;
}

Permutation f2_permutation(const F2Linear& map) {
  const std::size_t size = std::size_t{1} << map.rank;
  std::vector<Permutation::Point> img(size);
  for (std::size_t x = 0; x < size; ++x) img[x] = map.apply(static_cast<F2Element>(x));
  return Permutation(std::move(img));
}

DiscriminantRepresentation discriminant_representation() {
  const Lattice l_plus = rescale(picard_lattice(), 2);
  const FiniteQuadraticForm form = discriminant_form(l_plus);
  const TwoElementaryForm table(form);

  DiscriminantRepresentation out;
  std::vector<Permutation> perms;
  for (const auto& r : simple_roots()) {
    const F2Linear img = induced_discriminant_action(l_plus, form, reflection(r)).to_f2(table);
    if (!table.preserves(img)) throw std::logic_error("discriminant_representation: q not preserved");
    out.generator_images.push_back(img);
    perms.push_back(f2_permutation(img));
  }
  const PermGroup image = PermGroup::from_generators(table.size(), std::move(perms));
  out.image_order = image.order();
  out.group_order = weyl_group_on_classes().order();
  out.kernel_trivial = out.image_order == out.group_order;
  return out;
}

}  // namespace latmono
