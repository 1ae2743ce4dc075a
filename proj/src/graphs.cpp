#include "oaparity/graphs.hpp"

#include <sstream>

namespace oaparity {

SimpleGraph::SimpleGraph(int k, bool directed) : k_(k), directed_(directed) {
  if (k < 1) throw DomainError("graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(k * k), 0);
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw DomainError("loops are not allowed");
  adj_.at(idx(u, v)) = 1;
  if (!directed_) adj_.at(idx(v, u)) = 1;
}

void SimpleGraph::remove_edge(int u, int v) {
  adj_.at(idx(u, v)) = 0;
  if (!directed_) adj_.at(idx(v, u)) = 0;
}

int SimpleGraph::edge_count() const {
  int arcs = 0;
  for (auto a : adj_) arcs += a;
  return directed_ ? arcs : arcs / 2;
}

int SimpleGraph::out_degree(int v) const {
  int d = 0;
  for (int u = 0; u < k_; ++u) d += adj_[idx(v, u)];
  return d;
}

int SimpleGraph::in_degree(int v) const {
  int d = 0;
  for (int u = 0; u < k_; ++u) d += adj_[idx(u, v)];
  return d;
}

SimpleGraph graph_switch(const SimpleGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw DomainError("switching vertex out of range");
  SimpleGraph out = g;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (u == v) continue;
    if (g.directed()) {
      const bool fwd = g.has_edge(v, u);
      const bool back = g.has_edge(u, v);
      fwd ? out.add_edge(u, v) : out.remove_edge(u, v);
      back ? out.add_edge(v, u) : out.remove_edge(v, u);
    } else {
      g.has_edge(v, u) ? out.remove_edge(v, u) : out.add_edge(v, u);
    }
  }
  return out;
}

SimpleGraph graph_complement(const SimpleGraph& g) {
  SimpleGraph out(g.vertex_count(), g.directed());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (u == v) continue;
      if (g.directed()) {
        if (g.has_edge(u, v)) out.add_edge(v, u);
      } else if (u < v && !g.has_edge(u, v)) {
        out.add_edge(u, v);
      }
    }
  return out;
}

std::string to_dot(const SimpleGraph& g, std::string_view name) {
  std::ostringstream os;
  const char* edge = g.directed() ? " -> " : " -- ";
  os << (g.directed() ? "digraph " : "graph ") << '"' << name << "\" {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v + 1 << ";\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = g.directed() ? 0 : u + 1; v < g.vertex_count(); ++v)
      if (u != v && g.has_edge(u, v)) os << "  " << u + 1 << edge << v + 1 << ";\n";
  os << "}\n";
  return os.str();
}

SimpleGraph tau_graph(const TauVector& t, int c) {
  SimpleGraph g(t.columns(), false);
  for (int i = 0; i < t.columns(); ++i)
    for (int j = i + 1; j < t.columns(); ++j)
      if (i != c && j != c && t.get(c, i, j)) g.add_edge(i, j);
  return g;
}

namespace {

// Splits the vertices in `vertices` of an undirected graph into the two
// sides of a complete bipartite graph, or returns false.
bool split_complete_bipartite(const SimpleGraph& g, const std::vector<int>& vertices, std::vector<int>& side1,
                              std::vector<int>& side2) {
  side1.clear();
  side2.clear();
  int anchor = -1;
  for (int v : vertices) {
    for (int u : vertices)
      if (g.has_edge(v, u)) {
        anchor = v;
        break;
      }
    if (anchor >= 0) break;
  }
  if (anchor < 0) {
    side2 = vertices;
    return true;
  }
  for (int v : vertices) (v == anchor || !g.has_edge(anchor, v) ? side1 : side2).push_back(v);
  for (int u : side1) {
    for (int v : side1)
      if (u != v && g.has_edge(u, v)) return false;
    for (int v : side2)
      if (!g.has_edge(u, v)) return false;
  }
  for (int u : side2)
    for (int v : side2)
      if (u != v && g.has_edge(u, v)) return false;
  return true;
}

std::vector<int> all_but(int k, int skip) {
  std::vector<int> out;
  for (int v = 0; v < k; ++v)
    if (v != skip) out.push_back(v);
  return out;
}

}  // namespace

std::vector<TauGraphDecomposition> tau_graphs(const TauVector& t) {
  std::vector<TauGraphDecomposition> out;
  for (int c = 0; c < t.columns(); ++c) {
    TauGraphDecomposition d{c, {}, {}};
    if (!split_complete_bipartite(tau_graph(t, c), all_but(t.columns(), c), d.side1, d.side2)) {
      throw DomainError("tau graph G_" + std::to_string(c + 1) + " is not an isolated vertex plus a complete bipartite graph");
    }
    out.push_back(std::move(d));
  }
  return out;
}

SimpleGraph stack_graph(const TauVector& t) {
  const int k = t.columns();
  SimpleGraph g(k, false);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Bit sum = 0;
      for (int c = 0; c < k; ++c)
        if (c != i && c != j) sum ^= t.get(c, i, j);
      if (sum) g.add_edge(i, j);
    }
  return g;
}

StackClassification stack(const TauVector& t) {
  const int k = t.columns();
  const SimpleGraph g = stack_graph(t);
  StackClassification out;
  if (pair_parity(t.order()) == 0) {
    out.shape = StackShape::CompleteBipartite;
    if (!split_complete_bipartite(g, all_but(k, -1), out.part1, out.part2)) {
      throw DomainError("stack is not complete bipartite although n = 0,1 mod 4");
    }
  } else {
    out.shape = StackShape::UnionOfCliques;
    std::vector<int> component(static_cast<std::size_t>(k), -1);
    int components = 0;
    for (int s = 0; s < k; ++s) {
      if (component[static_cast<std::size_t>(s)] >= 0) continue;
      std::vector<int> todo{s};
      component[static_cast<std::size_t>(s)] = components;
      while (!todo.empty()) {
        const int v = todo.back();
        todo.pop_back();
        for (int u = 0; u < k; ++u)
          if (u != v && g.has_edge(v, u) && component[static_cast<std::size_t>(u)] < 0) {
            component[static_cast<std::size_t>(u)] = components;
            todo.push_back(u);
          }
      }
      ++components;
    }
    if (components > 2) throw DomainError("stack has more than two components although n = 2,3 mod 4");
    for (int v = 0; v < k; ++v) (component[static_cast<std::size_t>(v)] == 0 ? out.part1 : out.part2).push_back(v);
    for (const auto* part : {&out.part1, &out.part2})
      for (int u : *part)
        for (int v : *part)
          if (u != v && !g.has_edge(u, v)) throw DomainError("stack component is not a clique although n = 2,3 mod 4");
  }

  if (k == t.order() + 1 && check_plausible(t).pp_plausible == PpVerdict::Yes) {
    if (pair_parity(t.order()) == 0) {
      if (g.edge_count() != 0) throw DomainError("stack of a PP-plausible parity must be empty for n = 0,1 mod 4");
      out.plane_shape = PlaneStackShape::Empty;
    } else {
      if (!out.part2.empty()) throw DomainError("stack of a PP-plausible parity must be complete for n = 2,3 mod 4");
      out.plane_shape = PlaneStackShape::Complete;
    }
  }
  return out;
}

std::string to_string(DegreeParity p) {
  switch (p) {
    case DegreeParity::AllEven: return "even";
    case DegreeParity::AllOdd: return "odd";
    case DegreeParity::Mixed: return "mixed";
  }
  return "mixed";
}

namespace {

DegreeParity summarise(const std::vector<int>& degrees) {
  bool any_even = false, any_odd = false;
  for (int d : degrees) (d % 2 ? any_odd : any_even) = true;
  if (any_even && any_odd) return DegreeParity::Mixed;
  return any_odd ? DegreeParity::AllOdd : DegreeParity::AllEven;
}

}  // namespace

SimpleGraph sigma_graph_of(const SigmaMatrix& s) {
  const bool oriented = pair_parity(s.order()) == 1;
  SimpleGraph g(s.columns(), oriented);
  for (int i = 0; i < s.columns(); ++i)
    for (int j = 0; j < s.columns(); ++j)
      if (i != j && s.at(i, j)) g.add_edge(i, j);
  return g;
}

SigmaGraphReport sigma_graph(const SigmaMatrix& s) {
  if (!s.satisfies_pair_law()) throw DomainError("sigma matrix violates the transpose law for n = " + std::to_string(s.order()));
  const int k = s.columns();
  const int n = s.order();
  SigmaGraphReport r;
  r.oriented = pair_parity(n) == 1;
  for (int c = 0; c < k; ++c) {
    r.out_degrees.push_back(s.row_sum(c));
    r.in_degrees.push_back(s.column_sum(c));
  }
  r.out_parity = summarise(r.out_degrees);
  r.in_parity = summarise(r.in_degrees);
  if (k == n + 1) {
    switch (mod4(n)) {
      case 0: r.plane_degree_law = r.out_parity == DegreeParity::AllEven; break;
      case 1: r.plane_degree_law = r.out_parity != DegreeParity::Mixed; break;
      case 2: r.plane_degree_law = r.out_parity == DegreeParity::AllOdd && r.in_parity == DegreeParity::AllOdd; break;
      default:
        r.plane_degree_law = r.in_parity != DegreeParity::Mixed && r.out_parity != DegreeParity::Mixed &&
                             r.in_parity != r.out_parity;
        break;
    }
  }
  return r;
}

SigmaGraphReport sigma_graph(const StandardSigma& s) { return sigma_graph(s.to_matrix()); }

}  // namespace oaparity
