#include "wordrank/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "wordrank/errors.hpp"

namespace wordrank {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Keeps the smaller representative.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

int LabeledGraph::add_edge(int from, int to, int positive_label) {
  if (positive_label <= 0) throw std::invalid_argument("add_edge: label must be positive");
  origin.push_back(from);
  origin.push_back(to);
  label.push_back(positive_label);
  label.push_back(-positive_label);
  return geometric_count() - 1;
}

std::vector<int> LabeledGraph::degrees() const {
  std::vector<int> deg(num_vertices, 0);
  for (int v : origin) ++deg[v];
  return deg;
}

bool LabeledGraph::is_immersed() const {
  std::vector<std::pair<int, int>> seen;
  seen.reserve(origin.size());
  for (int e = 0; e < oriented_count(); ++e) seen.emplace_back(origin[e], label[e]);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool LabeledGraph::is_core() const {
  for (int d : degrees())
    if (d < 2) return false;
  return true;
}

void GraphMorphism::validate() const {
  if (static_cast<int>(vertex_map.size()) != source.num_vertices ||
      static_cast<int>(edge_map.size()) != source.oriented_count())
    throw std::logic_error("GraphMorphism: map size mismatch");
  for (int e = 0; e < source.oriented_count(); ++e) {
    int img = edge_map[e];
    if (img < 0 || img >= target.oriented_count())
      throw std::logic_error("GraphMorphism: edge image out of range");
    if (edge_map[LabeledGraph::bar(e)] != LabeledGraph::bar(img))
      throw std::logic_error("GraphMorphism: does not commute with bar");
    if (vertex_map[source.origin[e]] != target.origin[img])
      throw std::logic_error("GraphMorphism: does not commute with origin");
    if (source.label[e] != target.label[img])
      throw std::logic_error("GraphMorphism: does not preserve labels");
  }
}

bool GraphMorphism::is_isomorphism() const {
  if (source.num_vertices != target.num_vertices ||
      source.oriented_count() != target.oriented_count())
    return false;
  std::vector<bool> v_hit(target.num_vertices, false), e_hit(target.oriented_count(), false);
  for (int v : vertex_map) {
    if (v_hit[v]) return false;
    v_hit[v] = true;
  }
  for (int e : edge_map) {
    if (e_hit[e]) return false;
    e_hit[e] = true;
  }
  return true;
}

LabeledGraph bouquet(int rank) {
  if (rank < 1) throw std::domain_error("bouquet: rank must be >= 1");
  LabeledGraph g;
  g.num_vertices = 1;
  for (int i = 1; i <= rank; ++i) g.add_edge(0, 0, i);
  return g;
}

int euler_char(const LabeledGraph& g) { return g.num_vertices - g.geometric_count(); }

CycleGraph cycle_graph(const Word& w) {
  if (w.empty() || !is_cyclically_reduced(w))
    throw std::invalid_argument("cycle_graph: word must be cyclically reduced and nonempty");
  int n = w.length();
  CycleGraph out;
  out.graph.num_vertices = n;
  out.forward.resize(n);
  for (int i = 0; i < n; ++i) {
    int letter = w.letters[i];
    int to = (i + 1) % n;
    int k;
    if (letter > 0) {
      k = out.graph.add_edge(i, to, letter);
      out.forward[i] = 2 * k;
    } else {
      k = out.graph.add_edge(to, i, -letter);
      out.forward[i] = 2 * k + 1;
    }
  }
  GraphMorphism eta;
  eta.source = out.graph;
  eta.target = bouquet(w.rank);
  eta.vertex_map.assign(n, 0);
  eta.edge_map.resize(2 * n);
  for (int e = 0; e < 2 * n; ++e) {
    int l = out.graph.label[e];
    eta.edge_map[e] = l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1;
  }
  eta.validate();
  out.to_bouquet = std::move(eta);
  return out;
}

CycleCover multi_cycle(const Word& w, const std::vector<int>& nu) {
  CycleGraph base = cycle_graph(w);
  int L = w.length();
  CycleCover out;
  out.nu = nu;
  out.degree = 0;
  for (int part : nu) {
    if (part < 1) throw std::invalid_argument("multi_cycle: partition parts must be >= 1");
    out.degree += part;
  }
  GraphMorphism rho;
  rho.target = base.graph;
  for (int part : nu) {
    int len = part * L;
    int v0 = out.graph.num_vertices;
    out.graph.num_vertices += len;
    std::vector<int> fwd(len);
    for (int p = 0; p < len; ++p) {
      int letter = w.letters[p % L];
      int from = v0 + p;
      int to = v0 + (p + 1) % len;
      int k;
      if (letter > 0) {
        k = out.graph.add_edge(from, to, letter);
        fwd[p] = 2 * k;
      } else {
        k = out.graph.add_edge(to, from, -letter);
        fwd[p] = 2 * k + 1;
      }
      out.base_vertex.push_back(p % L);
      rho.edge_map.push_back(-1);
      rho.edge_map.push_back(-1);
      rho.edge_map[fwd[p]] = base.forward[p % L];
      rho.edge_map[LabeledGraph::bar(fwd[p])] = LabeledGraph::bar(base.forward[p % L]);
    }
    out.forward.push_back(std::move(fwd));
  }
  rho.source = out.graph;
  rho.vertex_map = out.base_vertex;
  rho.validate();
  out.rho = std::move(rho);
  return out;
}

namespace {

// Folding with optional pre-identification of vertices; shared by fold() and
// quotient_by_partition().
FoldResult fold_impl(const LabeledGraph& g, UnionFind vertices) {
  int m = g.geometric_count();
  UnionFind edges(m);
  bool changed = true;
  while (changed) {
    changed = false;
    // key (origin class, signed label) -> representative oriented edge
    std::map<std::pair<int, int>, int> at;
    for (int e = 0; e < g.oriented_count(); ++e) {
      int key_v = vertices.find(g.origin[e]);
      auto [it, fresh] = at.try_emplace({key_v, g.label[e]}, e);
      if (fresh) continue;
      int other = it->second;
      if (edges.find(e >> 1) == edges.find(other >> 1)) continue;
      edges.unite(e >> 1, other >> 1);
      vertices.unite(g.origin[LabeledGraph::bar(e)], g.origin[LabeledGraph::bar(other)]);
      changed = true;
    }
  }

  // Compress classes, ordered by smallest member.
  std::vector<int> vclass(g.num_vertices, -1), eclass(m, -1);
  int nv = 0, ne = 0;
  for (int v = 0; v < g.num_vertices; ++v)
    if (vertices.find(v) == v) vclass[v] = nv++;
  for (int v = 0; v < g.num_vertices; ++v) vclass[v] = vclass[vertices.find(v)];
  for (int k = 0; k < m; ++k)
    if (edges.find(k) == k) eclass[k] = ne++;
  for (int k = 0; k < m; ++k) eclass[k] = eclass[edges.find(k)];

  FoldResult out;
  out.graph.num_vertices = nv;
  out.graph.origin.assign(2 * ne, -1);
  out.graph.label.assign(2 * ne, 0);
  for (int k = 0; k < m; ++k) {
    int kk = eclass[k];
    out.graph.origin[2 * kk] = vclass[g.origin[2 * k]];
    out.graph.origin[2 * kk + 1] = vclass[g.origin[2 * k + 1]];
    out.graph.label[2 * kk] = g.label[2 * k];
    out.graph.label[2 * kk + 1] = g.label[2 * k + 1];
  }
  out.map.source = g;
  out.map.target = out.graph;
  out.map.vertex_map = vclass;
  out.map.edge_map.resize(2 * m);
  for (int k = 0; k < m; ++k) {
    out.map.edge_map[2 * k] = 2 * eclass[k];
    out.map.edge_map[2 * k + 1] = 2 * eclass[k] + 1;
  }
  out.map.validate();
  return out;
}

}  // namespace

FoldResult fold(const LabeledGraph& g) { return fold_impl(g, UnionFind(g.num_vertices)); }

FoldResult quotient_by_partition(const LabeledGraph& g,
                                 const std::vector<std::vector<int>>& blocks) {
  UnionFind vertices(g.num_vertices);
  std::vector<bool> covered(g.num_vertices, false);
  for (const auto& block : blocks) {
    for (int v : block) {
      if (v < 0 || v >= g.num_vertices)
        throw std::invalid_argument("quotient_by_partition: vertex out of range");
      covered[v] = true;
      vertices.unite(block.front(), v);
    }
  }
  for (bool c : covered)
    if (!c) throw std::invalid_argument("quotient_by_partition: partition must cover V");
  return fold_impl(g, std::move(vertices));
}

std::vector<long> signed_multiplicities(const GraphMorphism& b,
                                        const std::vector<std::vector<int>>& forward) {
  std::vector<long> out(b.target.geometric_count(), 0);
  for (const auto& cycle : forward)
    for (int e : cycle) {
      int img = b.edge_map[e];
      out[img >> 1] += (img & 1) ? -1 : +1;
    }
  return out;
}

bool is_efficient(const GraphMorphism& b, const std::vector<int>& fiber) {
  if (fiber.size() != b.vertex_map.size())
    throw std::invalid_argument("is_efficient: fiber assignment size mismatch");
  std::vector<std::pair<int, int>> seen;
  seen.reserve(fiber.size());
  for (size_t v = 0; v < fiber.size(); ++v) seen.emplace_back(fiber[v], b.vertex_map[v]);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

void enumerate_quotients(const LabeledGraph& g, const QuotientLimits& limits,
                         const std::function<void(const Quotient&)>& visit) {
  int n = g.num_vertices;
  if (n > limits.max_vertices)
    throw resource_error("enumerate_quotients: " + std::to_string(n) +
                         " vertices exceeds cap of " + std::to_string(limits.max_vertices));
  if (n == 0) return;
  // Restricted growth strings enumerate set partitions of V.
  std::vector<int> rgs(n, 0);
  std::unordered_set<std::string> seen;
  while (true) {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(nblocks);
    for (int v = 0; v < n; ++v) blocks[rgs[v]].push_back(v);
    FoldResult q = quotient_by_partition(g, blocks);
    std::string key(q.map.vertex_map.begin(), q.map.vertex_map.end());
    if (seen.insert(std::move(key)).second) visit(Quotient{q.graph, q.map});

    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) break;
  }
}

namespace {

// BFS code of the component containing `start`, with discovery order driven
// by edge labels.
std::string component_code(const LabeledGraph& g, const std::vector<std::vector<int>>& adj,
                           int start) {
  std::vector<int> disc(g.num_vertices, -1);
  std::vector<int> order;
  disc[start] = 0;
  order.push_back(start);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int u = order[qi];
    for (int e : adj[u]) {
      int t = g.terminus(e);
      if (disc[t] == -1) {
        disc[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<std::string> records;
  for (int e = 0; e < g.oriented_count(); e += 2) {
    if (disc[g.origin[e]] == -1) continue;
    records.push_back(std::to_string(disc[g.origin[e]]) + "-" + std::to_string(g.label[e]) +
                      ">" + std::to_string(disc[g.origin[e + 1]]));
  }
  std::sort(records.begin(), records.end());
  std::string code = std::to_string(order.size()) + ";";
  for (const auto& r : records) code += r + ";";
  return code;
}

}  // namespace

std::string canonical_code(const LabeledGraph& g) {
  if (g.num_vertices == 0) return "empty";
  std::vector<std::vector<int>> adj(g.num_vertices);
  for (int e = 0; e < g.oriented_count(); ++e) adj[g.origin[e]].push_back(e);
  for (auto& lst : adj)
    std::sort(lst.begin(), lst.end(), [&](int a, int b) { return g.label[a] < g.label[b]; });

  // Component representatives via a throwaway BFS sweep.
  std::vector<int> comp(g.num_vertices, -1);
  int ncomp = 0;
  for (int v = 0; v < g.num_vertices; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e : adj[u]) {
        int t = g.terminus(e);
        if (comp[t] == -1) {
          comp[t] = ncomp;
          stack.push_back(t);
        }
      }
    }
    ++ncomp;
  }

  std::vector<std::string> comp_codes(ncomp);
  for (int v = 0; v < g.num_vertices; ++v) {
    std::string code = component_code(g, adj, v);
    std::string& best = comp_codes[comp[v]];
    if (best.empty() || code < best) best = code;
  }
  std::sort(comp_codes.begin(), comp_codes.end());
  std::string out;
  for (const auto& c : comp_codes) out += c + "|";
  return out;
}

}  // namespace wordrank
