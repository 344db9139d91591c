#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latmono/matrix.hpp"
#include "latmono/perm_group.hpp"

namespace latmono {

/// Simple undirected graph without loops.
class Graph {
 public:
  explicit Graph(std::size_t n, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Throws std::invalid_argument for loops or out-of-range vertices.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  std::size_t edge_count() const;

  /// Regularity degree, or nullopt if the graph is not regular.
  std::optional<std::size_t> regular_degree() const;

  /// True iff p maps edges to edges and non-edges to non-edges.
  bool is_automorphism(const Permutation& p) const;

  /// Copy with vertex v renamed to p[v].
  Graph relabeled(const Permutation& p) const;
  Graph complement() const;

  /// One line per vertex: `label: neighbor-indices`.
  std::string adjacency_list() const;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::string> labels_;
};

/// Vertices are the classes in the given order; u ~ v iff ⟨c_u, c_v⟩ = edge_value.
Graph intersection_graph(const std::vector<IntVector>& classes, const IntMatrix& gram, const Integer& edge_value,
                         std::vector<std::string> labels = {});

/// Induced subgraph on the neighbours of v (ascending vertex order).
Graph neighborhood_subgraph(const Graph& g, std::size_t v);

/// Generators from individualization-refinement backtracking along a
/// stabilizer chain; the order is the product of the basic orbit lengths.
struct AutomorphismResult {
  PermGroup group;
  std::vector<std::size_t> base;          // individualized vertices
  std::vector<std::size_t> orbit_sizes;   // per base level
  Integer order;
};

/// Throws std::length_error above 10000 vertices.
AutomorphismResult automorphism_group(const Graph& g);

/// Partition backtracking between the two graphs with the refinement used
/// by automorphism_group.
bool are_isomorphic(const Graph& a, const Graph& b);

/// An isomorphism a → b (as a permutation: vertex v of a ↦ p[v] of b).
std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace latmono
