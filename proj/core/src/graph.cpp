#include "latmono/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace latmono {

Graph::Graph(std::size_t n, std::vector<std::string> labels)
    : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0), adj_(n), labels_(std::move(labels)) {
  if (labels_.empty())
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  if (labels_.size() != n_) throw std::invalid_argument("Graph: label count does not match vertex count");
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("Graph::add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("Graph::add_edge: loops are not allowed");
  if (adjacent(u, v)) return;
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adj_) total += a.size();
  return total / 2;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  const std::size_t d = adj_[0].size();
  for (const auto& a : adj_)
    if (a.size() != d) return std::nullopt;
  return d;
}

bool Graph::is_automorphism(const Permutation& p) const {
  if (p.degree() != n_) return false;
  for (std::size_t u = 0; u < n_; ++u) {
    if (adj_[p[u]].size() != adj_[u].size()) return false;
    for (std::size_t v : adj_[u])
      if (!adjacent(p[u], p[v])) return false;
  }
  return true;
}

Graph Graph::relabeled(const Permutation& p) const {
  if (p.degree() != n_) throw std::invalid_argument("Graph::relabeled: degree mismatch");
  std::vector<std::string> labels(n_);
  for (std::size_t v = 0; v < n_; ++v) labels[p[v]] = labels_[v];
  Graph out(n_, std::move(labels));
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v : adj_[u])
      if (u < v) out.add_edge(p[u], p[v]);
  return out;
}

Graph Graph::complement() const {
  Graph out(n_, labels_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) out.add_edge(u, v);
  return out;
}

std::string Graph::adjacency_list() const {
  std::ostringstream os;
  for (std::size_t v = 0; v < n_; ++v) {
    os << labels_[v] << ":";
    for (std::size_t w : adj_[v]) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

Graph intersection_graph(const std::vector<IntVector>& classes, const IntMatrix& gram, const Integer& edge_value,
                         std::vector<std::string> labels) {
  Graph g(classes.size(), std::move(labels));
  for (std::size_t u = 0; u < classes.size(); ++u)
    for (std::size_t v = u + 1; v < classes.size(); ++v)
      if (bilinear(gram, classes[u], classes[v]) == edge_value) g.add_edge(u, v);
  return g;
}

Graph neighborhood_subgraph(const Graph& g, std::size_t v) {
  if (v >= g.size()) throw std::invalid_argument("neighborhood_subgraph: vertex out of range");
  const auto& nb = g.neighbors(v);
  std::vector<std::string> labels;
  for (std::size_t w : nb) labels.push_back(g.labels()[w]);
  Graph out(nb.size(), std::move(labels));
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (g.adjacent(nb[i], nb[j])) out.add_edge(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// Individualization-refinement

namespace {

using Cells = std::vector<std::vector<std::size_t>>;
using Trace = std::vector<long>;

Cells initial_partition(const Graph& g, Trace& trace) {
  std::map<std::size_t, std::vector<std::size_t>> by_degree;
  for (std::size_t v = 0; v < g.size(); ++v) by_degree[g.degree(v)].push_back(v);
  Cells cells;
  for (auto& [d, vs] : by_degree) {
    trace.push_back(static_cast<long>(d));
    trace.push_back(static_cast<long>(vs.size()));
    cells.push_back(std::move(vs));
  }
  return cells;
}

// Splits cells by neighbour counts into each splitter cell until the
// partition is equitable. Parts are ordered by ascending count.
void refine(const Graph& g, Cells& cells, Trace& trace) {
  std::vector<long> count(g.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      for (std::size_t w : cells[s])
        for (std::size_t v : g.neighbors(w)) ++count[v];
      Cells next;
      next.reserve(cells.size());
      bool split = false;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& cell = cells[c];
        bool uniform = true;
        for (std::size_t v : cell)
          if (count[v] != count[cell.front()]) {
            uniform = false;
            break;
          }
        if (uniform) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<long, std::size_t>> keyed;
        for (std::size_t v : cell) keyed.emplace_back(count[v], v);
        std::sort(keyed.begin(), keyed.end());
        trace.push_back(-1);
        trace.push_back(static_cast<long>(s));
        trace.push_back(static_cast<long>(c));
        std::size_t i = 0;
        while (i < keyed.size()) {
          std::vector<std::size_t> part;
          const long k = keyed[i].first;
          while (i < keyed.size() && keyed[i].first == k) part.push_back(keyed[i++].second);
          trace.push_back(k);
          trace.push_back(static_cast<long>(part.size()));
          next.push_back(std::move(part));
        }
        split = true;
      }
      std::fill(count.begin(), count.end(), 0);
      if (split) {
        cells = std::move(next);
        changed = true;
      }
    }
  }
  trace.push_back(-3);
}

void individualize(Cells& cells, std::size_t c, std::size_t v, Trace& trace) {
  std::vector<std::size_t> rest;
  for (std::size_t w : cells[c])
    if (w != v) rest.push_back(w);
  cells[c] = {v};
  cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c) + 1, std::move(rest));
  trace.push_back(-2);
  trace.push_back(static_cast<long>(c));
}

bool discrete(const Cells& cells) {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 1; });
}

std::size_t target_cell(const Cells& cells) {
  std::size_t best = cells.size();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].size() < 2) continue;
    if (best == cells.size() || cells[c].size() < cells[best].size()) best = c;
  }
  return best;
}

bool same_shape(const Cells& a, const Cells& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].size() != b[i].size()) return false;
  return true;
}

// Individualize-and-refine step shared by both sides.
Cells step(const Graph& g, const Cells& cells, std::size_t c, std::size_t v, Trace& trace) {
  Cells out = cells;
  individualize(out, c, v, trace);
  refine(g, out, trace);
  return out;
}

// Searches for an isomorphism a → b compatible with the ordered partitions
// (which must already have matching traces).
std::optional<Permutation> extend(const Graph& a, const Cells& pa, const Graph& b, const Cells& pb) {
  if (discrete(pa)) {
    std::vector<Permutation::Point> img(a.size());
    for (std::size_t k = 0; k < pa.size(); ++k) img[pa[k][0]] = static_cast<Permutation::Point>(pb[k][0]);
    Permutation p(std::move(img));
    for (std::size_t u = 0; u < a.size(); ++u) {
      if (a.degree(u) != b.degree(p[u])) return std::nullopt;
      for (std::size_t v : a.neighbors(u))
        if (!b.adjacent(p[u], p[v])) return std::nullopt;
    }
    return p;
  }
  const std::size_t c = target_cell(pa);
  const std::size_t v = *std::min_element(pa[c].begin(), pa[c].end());
  Trace ta;
  const Cells qa = step(a, pa, c, v, ta);
  std::vector<std::size_t> candidates = pb[c];
  std::sort(candidates.begin(), candidates.end());
  for (std::size_t w : candidates) {
    Trace tb;
    const Cells qb = step(b, pb, c, w, tb);
    if (tb != ta || !same_shape(qa, qb)) continue;
    if (auto found = extend(a, qa, b, qb)) return found;
  }
  return std::nullopt;
}

}  // namespace

AutomorphismResult automorphism_group(const Graph& g) {
  if (g.size() > 10000) throw std::length_error("automorphism_group: graph exceeds 10000 vertices");
  const std::size_t n = g.size();

  Trace trace;
  Cells root = initial_partition(g, trace);
  refine(g, root, trace);

  // First path: partitions before each individualization.
  std::vector<Cells> partitions;
  std::vector<std::size_t> target;
  std::vector<std::size_t> base;
  Cells cur = root;
  while (!discrete(cur)) {
    const std::size_t c = target_cell(cur);
    const std::size_t v = *std::min_element(cur[c].begin(), cur[c].end());
    partitions.push_back(cur);
    target.push_back(c);
    base.push_back(v);
    Trace t;
    cur = step(g, cur, c, v, t);
  }

  std::vector<Permutation> gens;
  std::vector<std::size_t> gen_level;
  std::vector<std::size_t> orbit_sizes(base.size(), 1);

  for (std::size_t level = base.size(); level-- > 0;) {
    const Cells& pi = partitions[level];
    const std::size_t c = target[level];
    auto orbit_of = [&](std::size_t start) {
      std::vector<char> seen(n, 0);
      std::vector<std::size_t> orbit{start};
      seen[start] = 1;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (std::size_t k = 0; k < gens.size(); ++k) {
          if (gen_level[k] < level) continue;
          const std::size_t y = gens[k][orbit[i]];
          if (!seen[y]) {
            seen[y] = 1;
            orbit.push_back(y);
          }
        }
      return std::make_pair(orbit.size(), seen);
    };
    auto [size, seen] = orbit_of(base[level]);
    Trace ta;
    const Cells left = step(g, pi, c, base[level], ta);
    std::vector<std::size_t> candidates = pi[c];
    std::sort(candidates.begin(), candidates.end());
    for (std::size_t w : candidates) {
      if (seen[w]) continue;
      Trace tb;
      const Cells right = step(g, pi, c, w, tb);
      if (tb != ta || !same_shape(left, right)) continue;
      auto found = extend(g, left, g, right);
      if (!found) continue;
      if (!g.is_automorphism(*found)) throw std::logic_error("automorphism_group: search produced a non-automorphism");
      gens.push_back(std::move(*found));
      gen_level.push_back(level);
      std::tie(size, seen) = orbit_of(base[level]);
    }
    orbit_sizes[level] = size;
  }

  Integer order = 1;
  for (std::size_t s : orbit_sizes) order *= static_cast<unsigned long>(s);
  PermGroup group = PermGroup::from_generators(n, gens);
  if (group.order() != order) throw std::logic_error("automorphism_group: orbit product disagrees with Schreier-Sims");
  return AutomorphismResult{std::move(group), std::move(base), std::move(orbit_sizes), std::move(order)};
}

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  Trace ta;
  Trace tb;
  Cells pa = initial_partition(a, ta);
  Cells pb = initial_partition(b, tb);
  refine(a, pa, ta);
  refine(b, pb, tb);
  if (ta != tb || !same_shape(pa, pb)) return std::nullopt;
  return extend(a, pa, b, pb);
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace latmono
