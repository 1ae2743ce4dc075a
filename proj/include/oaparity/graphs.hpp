#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oaparity/parity.hpp"

namespace oaparity {

/// Loop-free graph or digraph on vertices 0..k-1 backed by a k x k 0/1 matrix.
class SimpleGraph {
 public:
  SimpleGraph(int k, bool directed);

  int vertex_count() const noexcept { return k_; }
  bool directed() const noexcept { return directed_; }

  bool has_edge(int u, int v) const { return adj_[idx(u, v)] != 0; }
  /// Undirected graphs store both orientations.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int edge_count() const;
  int out_degree(int v) const;
  int in_degree(int v) const;
  int degree(int v) const { return out_degree(v); }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u * k_ + v); }
  int k_;
  bool directed_;
  std::vector<std::uint8_t> adj_;
};

/// Undirected: neighbourhood of v complemented. Directed: arcs at v reversed.
SimpleGraph graph_switch(const SimpleGraph& g, int v);
/// Undirected: complement. Directed: every arc reversed.
SimpleGraph graph_complement(const SimpleGraph& g);

/// Plain DOT emitter; vertices are labelled 1..k.
std::string to_dot(const SimpleGraph& g, std::string_view name);

/// G_c: edge {i,j} iff tau^c_{ij} = 1, with c isolated.
SimpleGraph tau_graph(const TauVector& t, int c);

/// G_c as an isolated vertex plus the complete bipartite graph between
/// side1 and side2. side1 holds the lowest-indexed non-isolated vertex; an
/// edgeless G_c has side1 empty.
struct TauGraphDecomposition {
  int isolated;
  std::vector<int> side1;
  std::vector<int> side2;
};

/// Throws DomainError if some G_c is not of that shape.
std::vector<TauGraphDecomposition> tau_graphs(const TauVector& t);

/// Edge {i,j} iff it lies in an odd number of tau graphs.
SimpleGraph stack_graph(const TauVector& t);

enum class StackShape { CompleteBipartite, UnionOfCliques };
enum class PlaneStackShape { Empty, Complete };

struct StackClassification {
  StackShape shape;
  /// Partite sets (n = 0,1 mod 4) or cliques (n = 2,3 mod 4); part2 may be empty.
  std::vector<int> part1;
  std::vector<int> part2;
  /// Set when k = n+1 and the tau parity is PP-plausible.
  std::optional<PlaneStackShape> plane_shape;
};

/// Throws DomainError when the stack has neither shape allowed for n mod 4.
StackClassification stack(const TauVector& t);

enum class DegreeParity { AllEven, AllOdd, Mixed };
std::string to_string(DegreeParity p);

struct SigmaGraphReport {
  /// Tournament (n = 2,3 mod 4) rather than an undirected graph.
  bool oriented;
  /// Row sums mu_c of the full sigma matrix.
  std::vector<int> out_degrees;
  std::vector<int> in_degrees;
  DegreeParity out_parity;
  DegreeParity in_parity;
  /// For k = n+1: whether the degree-parity law for projective planes holds.
  std::optional<bool> plane_degree_law;
};

SimpleGraph sigma_graph_of(const SigmaMatrix& s);
SigmaGraphReport sigma_graph(const SigmaMatrix& s);
SigmaGraphReport sigma_graph(const StandardSigma& s);

}  // namespace oaparity
