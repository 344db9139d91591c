#include "latmono/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace latmono {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw std::invalid_argument("Permutation: not a bijection");
    seen[p] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(id);
  return p;
}

bool Permutation::is_identity() const { return first_moved() == degree(); }

std::size_t Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return images_.size();
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("Permutation: degree mismatch");
  Permutation out;
  out.images_.resize(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x) out.images_[x] = a.images_[b.images_[x]];
  return out;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(degree(), 0);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = images_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Permutation> generators,
                                     const std::vector<std::size_t>& base_prefix) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& p : generators)
    if (p.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
  g.generators_ = std::move(generators);

  std::vector<char> used(degree, 0);
  auto add_level = [&](std::size_t pt) {
    if (pt >= degree) throw std::invalid_argument("PermGroup: base point out of range");
    if (used[pt]) return;
    used[pt] = 1;
    Level lv;
    lv.point = pt;
    g.levels_.push_back(std::move(lv));
  };
  for (std::size_t pt : base_prefix) add_level(pt);
  for (std::size_t pt = 0; pt < degree; ++pt) add_level(pt);

  for (const auto& p : g.generators_) {
    if (p.is_identity()) continue;
    if (std::find(g.strong_.begin(), g.strong_.end(), p) != g.strong_.end()) continue;
    std::size_t lvl = 0;
    while (lvl < g.levels_.size() && p[g.levels_[lvl].point] == g.levels_[lvl].point) ++lvl;
    g.strong_.push_back(p);
    g.strong_level_.push_back(lvl);
  }
  g.schreier_sims();
  return g;
}

void PermGroup::rebuild_level(std::size_t level) {
  Level& lv = levels_[level];
  lv.transversal_index.assign(degree_, -1);
  lv.reps.clear();
  lv.orbit.clear();
  lv.transversal_index[lv.point] = 0;
  lv.reps.push_back(Permutation::identity(degree_));
  lv.orbit.push_back(lv.point);
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    for (std::size_t s = 0; s < strong_.size(); ++s) {
      if (strong_level_[s] < level) continue;
      const std::size_t y = strong_[s][lv.orbit[i]];
      if (lv.transversal_index[y] >= 0) continue;
      lv.transversal_index[y] = static_cast<std::int32_t>(lv.orbit.size());
      lv.reps.push_back(strong_[s] * lv.reps[i]);
      lv.orbit.push_back(y);
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t level) const {
  for (std::size_t l = level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const std::size_t beta = g[lv.point];
    const std::int32_t k = lv.transversal_index[beta];
    if (k < 0) return {g, l};
    if (k > 0) g = lv.reps[static_cast<std::size_t>(k)].inverse() * g;
  }
  return {g, levels_.size()};
}

void PermGroup::schreier_sims() {
  // Holt's deterministic variant: verify levels bottom-up; whenever a
  // Schreier generator fails to sift, add its residue and resume there.
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t level = i - 1;
    rebuild_level(level);
    bool added = false;
    const Level& lv = levels_[level];
    for (std::size_t k = 0; k < lv.orbit.size() && !added; ++k) {
      for (std::size_t s = 0; s < strong_.size() && !added; ++s) {
        if (strong_level_[s] < level) continue;
        const std::size_t img = strong_[s][lv.orbit[k]];
        const auto& u_img = lv.reps[static_cast<std::size_t>(lv.transversal_index[img])];
        Permutation h = u_img.inverse() * (strong_[s] * lv.reps[k]);
        if (h.is_identity()) continue;
        auto [residue, stop] = strip(std::move(h), level + 1);
        if (residue.is_identity()) continue;
        // residue fixes base points of levels ≤ level and moves the one at `stop`
        strong_.push_back(residue);
        strong_level_.push_back(stop);
        for (std::size_t l = level + 1; l <= stop && l < levels_.size(); ++l) rebuild_level(l);
        i = stop + 1;
        added = true;
      }
    }
    if (!added) --i;
  }
}

std::vector<std::size_t> PermGroup::base() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_)
    if (lv.orbit.size() > 1) out.push_back(lv.point);
  return out;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_)
    if (lv.orbit.size() > 1) out.push_back(lv.orbit.size());
  return out;
}

Integer PermGroup::order() const {
  Integer n = 1;
  for (const auto& lv : levels_) n *= static_cast<unsigned long>(lv.orbit.size());
  return n;
}

std::vector<std::size_t> PermGroup::orbit(std::size_t point) const {
  if (point >= degree_) throw std::invalid_argument("PermGroup::orbit: point out of range");
  std::vector<char> seen(degree_, 0);
  std::vector<std::size_t> out{point};
  seen[point] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : generators_) {
      const std::size_t y = g[out[i]];
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_transitive() const { return degree_ == 0 || orbit(0).size() == degree_; }

Integer PermGroup::stabilizer_order(std::size_t point) const {
  const Integer via_orbit = order() / static_cast<unsigned long>(orbit(point).size());
  const PermGroup rebased = from_generators(degree_, generators_, {point});
  Integer via_chain = 1;
  for (std::size_t l = 1; l < rebased.levels_.size(); ++l)
    via_chain *= static_cast<unsigned long>(rebased.levels_[l].orbit.size());
  if (via_chain != via_orbit || rebased.order() != order())
    throw std::logic_error("PermGroup::stabilizer_order: inconsistent stabilizer chain");
  return via_orbit;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return strip(p, 0).first.is_identity();
}

bool PermGroup::is_central(const Permutation& p) const {
  if (!contains(p)) throw std::invalid_argument("PermGroup::is_central: element not in group");
  for (const auto& g : generators_)
    if (g * p != p * g) return false;
  return true;
}

std::vector<Permutation> PermGroup::center_of_transitive() const {
  if (!is_transitive()) throw std::invalid_argument("PermGroup::center_of_transitive: group is not transitive");
  if (degree_ == 0) return {};
  // Level 0 has base point 0 and orbit everything; u_x maps 0 to x.
  const Level& lv = levels_.front();
  std::vector<Permutation> out;
  for (std::size_t p = 0; p < degree_; ++p) {
    // z central with z(0) = p forces z(x) = u_x(p).
    std::vector<Permutation::Point> images(degree_);
    for (std::size_t x = 0; x < degree_; ++x)
      images[x] = lv.reps[static_cast<std::size_t>(lv.transversal_index[x])][p];
    std::vector<char> seen(degree_, 0);
    bool bijective = true;
    for (auto y : images) {
      if (seen[y]) {
        bijective = false;
        break;
      }
      seen[y] = 1;
    }
    if (!bijective) continue;
    Permutation z(std::move(images));
    if (!contains(z)) continue;
    bool commutes = true;
    for (const auto& g : generators_)
      if (g * z != z * g) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(std::move(z));
  }
  return out;
}

}  // namespace latmono
