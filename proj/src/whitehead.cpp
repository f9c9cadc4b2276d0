#include "wordrank/whitehead.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wordrank {

int WhiteheadGraph::wh_index_of(int oriented_edge) const {
  for (size_t i = 0; i < wh_vertices.size(); ++i)
    if (wh_vertices[i] == oriented_edge) return static_cast<int>(i);
  return -1;
}

std::vector<WhiteheadGraph> whitehead_graphs(const GraphMorphism& b,
                                             const std::vector<std::vector<int>>& forward,
                                             const std::vector<int>& decoration) {
  std::vector<WhiteheadGraph> out(b.target.num_vertices);
  for (int v = 0; v < b.target.num_vertices; ++v) {
    out[v].at_vertex = v;
    for (int e = 0; e < b.target.oriented_count(); ++e)
      if (b.target.origin[e] == v) out[v].wh_vertices.push_back(e);
  }
  for (const auto& cycle : forward) {
    int len = static_cast<int>(cycle.size());
    for (int p = 0; p < len; ++p) {
      int out_edge = cycle[p];
      int in_edge = cycle[(p - 1 + len) % len];
      int u = b.source.origin[out_edge];
      int v = b.vertex_map[u];
      WhiteheadEdge we;
      we.tail = out[v].wh_index_of(b.edge_map[LabeledGraph::bar(in_edge)]);
      we.head = out[v].wh_index_of(b.edge_map[out_edge]);
      we.decoration = decoration.empty() ? u : decoration[u];
      if (we.tail < 0 || we.head < 0)
        throw std::logic_error("whitehead_graphs: image edge not at image vertex");
      out[v].edges.push_back(we);
    }
  }
  return out;
}

namespace {

// Connected components of the Whitehead graph, optionally ignoring one
// wh-vertex (and its incident edges). Returns -1 for the ignored vertex.
std::vector<int> wh_components(const WhiteheadGraph& wh, int ignore = -1) {
  int n = static_cast<int>(wh.wh_vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : wh.edges) {
    if (e.tail == ignore || e.head == ignore) continue;
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (s == ignore || comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int t : adj[u])
        if (comp[t] == -1) {
          comp[t] = c;
          stack.push_back(t);
        }
    }
    ++c;
  }
  return comp;
}

int component_count(const std::vector<int>& comp) {
  int c = 0;
  for (int x : comp) c = std::max(c, x + 1);
  return c;
}

}  // namespace

CutAnalysis find_cut_or_disconnect(const WhiteheadGraph& wh) {
  CutAnalysis out;
  int n = static_cast<int>(wh.wh_vertices.size());
  if (n <= 1) return out;
  std::vector<int> comp = wh_components(wh);
  if (component_count(comp) > 1) {
    out.kind = CutAnalysis::kDisconnected;
    for (int i = 0; i < n; ++i)
      if (comp[i] == 0) out.side.push_back(i);
    return out;
  }
  if (n == 2) return out;
  for (int x = 0; x < n; ++x) {
    std::vector<int> sub = wh_components(wh, x);
    if (component_count(sub) > 1) {
      out.kind = CutAnalysis::kCutVertex;
      out.cut = x;
      return out;
    }
  }
  return out;
}

UnfoldResult unfold(const GraphMorphism& b, const std::vector<std::vector<int>>& forward,
                    int vertex, int cut_wh_index) {
  std::vector<WhiteheadGraph> whs = whitehead_graphs(b, forward);
  const WhiteheadGraph& wh = whs[vertex];
  if (cut_wh_index < 0 || cut_wh_index >= static_cast<int>(wh.wh_vertices.size()))
    throw std::invalid_argument("unfold: wh-vertex index out of range");
  std::vector<int> comp = wh_components(wh, cut_wh_index);
  if (component_count(comp) < 2)
    throw std::invalid_argument("unfold: chosen wh-vertex is not a cut vertex");
  int e0 = wh.wh_vertices[cut_wh_index];

  // Side 1 keeps the original vertex; it is the component of the lowest
  // remaining wh-vertex. Everything else moves to the new vertex.
  auto side_of = [&](int wh_idx) { return comp[wh_idx] == 0 ? 1 : 2; };

  LabeledGraph target = b.target;
  int v2 = target.num_vertices++;
  for (size_t i = 0; i < wh.wh_vertices.size(); ++i) {
    int e = wh.wh_vertices[i];
    if (e == e0) continue;
    if (side_of(static_cast<int>(i)) == 2) target.origin[e] = v2;
  }
  // Split the cut edge: e0 keeps side 1; a parallel copy serves side 2. The
  // far endpoint is read after the reattachment above so a loop at `vertex`
  // lands on the side of bar(e0).
  int far = target.origin[LabeledGraph::bar(e0)];
  int s = e0 & 1;
  int k1;
  if (s == 0)
    k1 = target.add_edge(v2, far, target.label[e0]);
  else
    k1 = target.add_edge(far, v2, -target.label[e0]);
  int e2 = 2 * k1 + s;

  GraphMorphism out;
  out.source = b.source;
  out.target = target;
  out.vertex_map = b.vertex_map;
  out.edge_map = b.edge_map;

  // Route the preimage points of `vertex` and the preimages of e0 by the
  // side of their Whitehead edge.
  for (const auto& cycle : forward) {
    int len = static_cast<int>(cycle.size());
    for (int p = 0; p < len; ++p) {
      int out_edge = cycle[p];
      int in_edge_rev = LabeledGraph::bar(cycle[(p - 1 + len) % len]);
      int u = b.source.origin[out_edge];
      if (b.vertex_map[u] != vertex) continue;
      int head_img = b.edge_map[out_edge];
      int tail_img = b.edge_map[in_edge_rev];
      int z = tail_img != e0 ? tail_img : head_img;
      int side = side_of(wh.wh_index_of(z));
      if (side == 2) {
        out.vertex_map[u] = v2;
        if (head_img == e0) {
          out.edge_map[out_edge] = e2;
          out.edge_map[LabeledGraph::bar(out_edge)] = LabeledGraph::bar(e2);
        }
        if (tail_img == e0) {
          out.edge_map[in_edge_rev] = e2;
          out.edge_map[LabeledGraph::bar(in_edge_rev)] = LabeledGraph::bar(e2);
        }
      }
    }
  }
  out.validate();

  GraphMorphism back;
  back.source = target;
  back.target = b.target;
  back.vertex_map.resize(target.num_vertices);
  for (int v = 0; v < b.target.num_vertices; ++v) back.vertex_map[v] = v;
  back.vertex_map[v2] = vertex;
  back.edge_map.resize(target.oriented_count());
  for (int e = 0; e < b.target.oriented_count(); ++e) back.edge_map[e] = e;
  back.edge_map[2 * k1] = 2 * (e0 >> 1);
  back.edge_map[2 * k1 + 1] = 2 * (e0 >> 1) + 1;
  back.validate();

  return UnfoldResult{std::move(out), std::move(back)};
}

bool is_algebraic(const GraphMorphism& b, const std::vector<std::vector<int>>& forward) {
  // Preconditions: source is a union of cycles traversed by `forward`, the
  // target is a core graph, and b is locally injective.
  std::vector<int> deg = b.source.degrees();
  for (int d : deg)
    if (d != 2) throw std::invalid_argument("is_algebraic: source is not a union of cycles");
  if (!b.target.is_core())
    throw std::invalid_argument("is_algebraic: target is not a core graph");
  for (const auto& cycle : forward) {
    int len = static_cast<int>(cycle.size());
    for (int p = 0; p < len; ++p) {
      int out_edge = cycle[p];
      int in_edge_rev = LabeledGraph::bar(cycle[(p - 1 + len) % len]);
      if (out_edge != in_edge_rev && b.edge_map[out_edge] == b.edge_map[in_edge_rev])
        throw std::invalid_argument("is_algebraic: morphism is not an immersion");
    }
  }

  GraphMorphism cur = b;
  int total_edges = b.source.geometric_count();
  int guard = total_edges + b.target.num_vertices + 2;
  while (guard-- > 0) {
    std::vector<WhiteheadGraph> whs = whitehead_graphs(cur, forward);
    int cut_vertex = -1, cut_idx = -1;
    for (const auto& wh : whs) {
      CutAnalysis a = find_cut_or_disconnect(wh);
      if (a.kind == CutAnalysis::kDisconnected) return false;
      if (a.kind == CutAnalysis::kCutVertex && cut_vertex == -1) {
        cut_vertex = wh.at_vertex;
        cut_idx = a.cut;
      }
    }
    if (cut_vertex == -1) return true;
    cur = unfold(cur, forward, cut_vertex, cut_idx).unfolded;
  }
  throw std::logic_error("is_algebraic: unfolding failed to terminate");
}

DecoratedWhitehead decorated_whitehead(const Word& w) {
  if (w.empty() || !is_cyclically_reduced(w))
    throw std::invalid_argument("decorated_whitehead: word must be cyclically reduced, nonempty");
  DecoratedWhitehead out;
  int n = w.length();
  out.length = n;
  out.tail.resize(n);
  out.head.resize(n);
  std::set<int> letters;
  for (int i = 0; i < n; ++i) {
    out.tail[i] = -w.letters[(i - 1 + n) % n];
    out.head[i] = w.letters[i];
    letters.insert(out.tail[i]);
    letters.insert(out.head[i]);
  }
  out.wh_letters.assign(letters.begin(), letters.end());
  return out;
}

}  // namespace wordrank
