#include "wordrank/spm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "wordrank/errors.hpp"

namespace wordrank {

namespace {

int letter_index(const std::vector<int>& letters, int l) {
  auto it = std::lower_bound(letters.begin(), letters.end(), l);
  return static_cast<int>(it - letters.begin());
}

// Distance from diff to the nearest multiple of m (|diff| when m = 0).
int mod_distance(int diff, int m) {
  if (m == 0) return std::abs(diff);
  int r = diff % m;
  if (r < 0) r += m;
  return std::min(r, m - r);
}

struct PieceEnumerator {
  const DecoratedWhitehead& dw;
  int m;
  bool connected_only;
  int nletters;
  std::vector<int> tail_idx, head_idx;       // per position, dense letter index
  std::vector<std::vector<int>> remaining;   // remaining[l][i] = touches at positions >= i
  std::vector<int> diff;                     // running in - out per letter
  uint32_t mask = 0;
  std::vector<Piece> out;

  PieceEnumerator(const DecoratedWhitehead& d, int m_, bool conn)
      : dw(d), m(m_), connected_only(conn) {
    nletters = static_cast<int>(dw.wh_letters.size());
    int n = dw.length;
    tail_idx.resize(n);
    head_idx.resize(n);
    for (int i = 0; i < n; ++i) {
      tail_idx[i] = letter_index(dw.wh_letters, dw.tail[i]);
      head_idx[i] = letter_index(dw.wh_letters, dw.head[i]);
    }
    remaining.assign(nletters, std::vector<int>(n + 1, 0));
    for (int l = 0; l < nletters; ++l)
      for (int i = n - 1; i >= 0; --i)
        remaining[l][i] =
            remaining[l][i + 1] + (tail_idx[i] == l ? 1 : 0) + (head_idx[i] == l ? 1 : 0);
    diff.assign(nletters, 0);
  }

  bool feasible(int next) const {
    for (int l = 0; l < nletters; ++l)
      if (mod_distance(diff[l], m) > remaining[l][next]) return false;
    return true;
  }

  void recurse(int i) {
    if (i == dw.length) {
      if (mask != 0) finish();
      return;
    }
    recurse(i + 1);  // excluded branch first: masks come out in increasing order
    mask |= 1u << i;
    ++diff[head_idx[i]];
    --diff[tail_idx[i]];
    if (feasible(i + 1)) recurse(i + 1);
    --diff[head_idx[i]];
    ++diff[tail_idx[i]];
    mask &= ~(1u << i);
  }

  void finish() {
    for (int l = 0; l < nletters; ++l)
      if (mod_distance(diff[l], m) != 0) return;
    Piece p;
    p.decorations = mask;
    std::map<int, uint32_t> inc;
    for (int i = 0; i < dw.length; ++i) {
      if (!((mask >> i) & 1u)) continue;
      inc[dw.tail[i]] |= 1u << i;
      inc[dw.head[i]] |= 1u << i;
    }
    p.vertex_count = static_cast<int>(inc.size());
    if (p.vertex_count < 2) return;
    if (connected_only && !connected(inc)) return;
    p.incidence.assign(inc.begin(), inc.end());
    out.push_back(std::move(p));
  }

  bool connected(const std::map<int, uint32_t>& inc) const {
    std::vector<int> touched;
    for (const auto& [l, msk] : inc) touched.push_back(l);
    std::vector<int> parent(touched.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i = 0; i < dw.length; ++i) {
      if (!((mask >> i) & 1u)) continue;
      int a = static_cast<int>(std::lower_bound(touched.begin(), touched.end(), dw.tail[i]) -
                               touched.begin());
      int b = static_cast<int>(std::lower_bound(touched.begin(), touched.end(), dw.head[i]) -
                               touched.begin());
      parent[find(a)] = find(b);
    }
    int root = find(0);
    for (size_t i = 1; i < touched.size(); ++i)
      if (find(static_cast<int>(i)) != root) return false;
    return true;
  }
};

// x -> the far end of the outgoing g-edge of the base cycle at x (g > 0).
// Total on decorations incident to the wh-vertex +g.
int step_along(const Word& w, int g, int x) {
  int n = w.length();
  if (w.letters[x] == g) return (x + 1) % n;
  if (w.letters[(x - 1 + n) % n] == -g) return (x - 1 + n) % n;
  throw std::logic_error("step_along: no outgoing edge with that label");
}

// Inverse of step_along: the vertex whose g-step lands on y. Total on
// decorations incident to the wh-vertex -g.
int step_back(const Word& w, int g, int y) {
  int n = w.length();
  if (w.letters[(y - 1 + n) % n] == g) return (y - 1 + n) % n;
  if (w.letters[y] == -g) return (y + 1) % n;
  throw std::logic_error("step_back: no incoming edge with that label");
}

uint32_t step_mask(const Word& w, int g, uint32_t s) {
  uint32_t out = 0;
  for (int x = 0; x < w.length(); ++x)
    if ((s >> x) & 1u) out |= 1u << step_along(w, g, x);
  return out;
}

uint32_t step_back_mask(const Word& w, int g, uint32_t s) {
  uint32_t out = 0;
  for (int y = 0; y < w.length(); ++y)
    if ((s >> y) & 1u) out |= 1u << step_back(w, g, y);
  return out;
}

std::string piece_name(const Piece& p, int length) {
  std::string name = "n_";
  for (int i = 0; i < length; ++i)
    if (p.contains(i)) name += "v" + std::to_string(i);
  return name;
}

}  // namespace

std::vector<Piece> enumerate_pieces(const Word& w, int m, bool connected_only, int subset_cap) {
  if (m == 1 || m < 0) throw std::invalid_argument("enumerate_pieces: modulus must be 0 or >= 2");
  if (w.length() > subset_cap)
    throw resource_error("enumerate_pieces: word length " + std::to_string(w.length()) +
                         " exceeds subset cap " + std::to_string(subset_cap));
  DecoratedWhitehead dw = decorated_whitehead(w);
  PieceEnumerator en(dw, m, connected_only);
  en.recurse(0);
  std::sort(en.out.begin(), en.out.end(),
            [](const Piece& a, const Piece& b) { return a.decorations < b.decorations; });
  return en.out;
}

LinearProgram assemble_lp(const Word& w, [[maybe_unused]] int m,
                          const std::vector<Piece>& pieces, int anchor) {
  if (pieces.empty()) throw std::invalid_argument("assemble_lp: empty piece list");
  if (anchor < 0 || anchor >= w.length())
    throw std::invalid_argument("assemble_lp: anchor out of range");
  LinearProgram lp;
  lp.num_vars = static_cast<int>(pieces.size());
  for (const auto& p : pieces) {
    lp.objective.push_back(BigRational(p.vertex_count - 2, 2));
    lp.var_names.push_back(piece_name(p, w.length()));
  }

  // Balance rows, keyed per generator by the out-side decoration set.
  std::set<int> gens;
  for (int l : decorated_whitehead(w).wh_letters) gens.insert(std::abs(l));
  for (int g : gens) {
    std::map<uint32_t, std::vector<BigRational>> rows;
    auto row_of = [&](uint32_t key) -> std::vector<BigRational>& {
      auto it = rows.find(key);
      if (it == rows.end())
        it = rows.emplace(key, std::vector<BigRational>(lp.num_vars)).first;
      return it->second;
    };
    for (int pi = 0; pi < lp.num_vars; ++pi) {
      for (const auto& [letter, inc_mask] : pieces[pi].incidence) {
        if (letter == g)
          row_of(inc_mask)[pi] += BigRational(1);
        else if (letter == -g)
          row_of(step_back_mask(w, g, inc_mask))[pi] -= BigRational(1);
      }
    }
    for (auto& [key, row] : rows) lp.add_constraint(std::move(row), BigRational(0));
  }

  std::vector<BigRational> degree_row(lp.num_vars);
  for (int pi = 0; pi < lp.num_vars; ++pi)
    if (pieces[pi].contains(anchor)) degree_row[pi] = BigRational(1);
  lp.add_constraint(std::move(degree_row), BigRational(1));
  return lp;
}

WitnessDiagram extract_witness(const Word& w, int m, const std::vector<Piece>& pieces,
                               const LpSolution& solution, int anchor) {
  int L = w.length();
  // Scale the basic solution to integers.
  mpz_t scale;
  mpz_init_set_ui(scale, 1);
  for (const auto& x : solution.x) x.lcm_denominator(scale);
  std::vector<long> count(solution.x.size());
  long degree = 0;
  for (size_t i = 0; i < solution.x.size(); ++i) {
    count[i] = solution.x[i].to_long_times(scale);
    if (pieces[i].contains(anchor)) degree += count[i];
  }
  mpz_clear(scale);

  // One gamma-vertex per piece copy.
  std::vector<int> copy_piece;
  for (size_t i = 0; i < pieces.size(); ++i)
    for (long c = 0; c < count[i]; ++c) copy_piece.push_back(static_cast<int>(i));
  int ncopies = static_cast<int>(copy_piece.size());

  // Glue wh-vertices in pairs: an out slot (+g, S) matches an in slot whose
  // decoration set is S stepped along g.
  WitnessDiagram out;
  out.gamma.num_vertices = ncopies;
  std::vector<std::map<int, int>> oedge(ncopies);  // copy -> signed letter -> oriented edge
  std::set<int> gens;
  for (const auto& p : pieces)
    for (const auto& [letter, msk] : p.incidence) gens.insert(std::abs(letter));
  for (int g : gens) {
    std::map<uint32_t, std::pair<std::vector<int>, std::vector<int>>> slots;
    for (int c = 0; c < ncopies; ++c) {
      for (const auto& [letter, inc_mask] : pieces[copy_piece[c]].incidence) {
        if (letter == g) slots[inc_mask].first.push_back(c);
        if (letter == -g) slots[step_back_mask(w, g, inc_mask)].second.push_back(c);
      }
    }
    for (const auto& [key, pair] : slots) {
      if (pair.first.size() != pair.second.size())
        throw std::logic_error("extract_witness: unbalanced gluing key");
      for (size_t i = 0; i < pair.first.size(); ++i) {
        int k = out.gamma.add_edge(pair.first[i], pair.second[i], g);
        oedge[pair.first[i]][g] = 2 * k;
        oedge[pair.second[i]][-g] = 2 * k + 1;
      }
    }
  }

  // Walk the glued copies to recover the cover: from the path point of
  // decoration x in a copy, read w[x] and continue at decoration x+1 in the
  // partner copy behind that wh-vertex.
  std::vector<std::vector<char>> used(ncopies, std::vector<char>(L, 0));
  GraphMorphism b;
  b.target = out.gamma;
  for (int c0 = 0; c0 < ncopies; ++c0) {
    for (int x0 = 0; x0 < L; ++x0) {
      if (!pieces[copy_piece[c0]].contains(x0) || used[c0][x0]) continue;
      std::vector<std::pair<int, int>> points;
      int c = c0, x = x0;
      do {
        used[c][x] = 1;
        points.emplace_back(c, x);
        int letter = w.letters[x];
        int e = oedge[c].at(letter);
        int partner = out.gamma.origin[LabeledGraph::bar(e)];
        c = partner;
        x = (x + 1) % L;
      } while (!(c == c0 && x == x0));

      int len = static_cast<int>(points.size());
      if (len % L != 0) throw std::logic_error("extract_witness: cycle length not a multiple");
      out.nu.push_back(len / L);
      int v0 = b.source.num_vertices;
      b.source.num_vertices += len;
      std::vector<int> fwd(len);
      for (int p = 0; p < len; ++p) {
        auto [pc, px] = points[p];
        int letter = w.letters[px];
        int from = v0 + p, to = v0 + (p + 1) % len;
        int k;
        if (letter > 0) {
          k = b.source.add_edge(from, to, letter);
          fwd[p] = 2 * k;
        } else {
          k = b.source.add_edge(to, from, -letter);
          fwd[p] = 2 * k + 1;
        }
        out.base_vertex.push_back(px);
        b.vertex_map.push_back(pc);
        b.edge_map.push_back(-1);
        b.edge_map.push_back(-1);
        int img = oedge[pc].at(letter);
        b.edge_map[fwd[p]] = img;
        b.edge_map[LabeledGraph::bar(fwd[p])] = LabeledGraph::bar(img);
      }
      out.forward.push_back(std::move(fwd));
    }
  }
  b.validate();
  std::sort(out.nu.begin(), out.nu.end(), std::greater<int>());
  out.degree = std::accumulate(out.nu.begin(), out.nu.end(), 0);
  if (out.degree != degree) throw std::logic_error("extract_witness: degree mismatch");

  // Re-validate the diagram against the definition: efficiency, divisibility,
  // and the LP optimum.
  if (!out.gamma.is_core() || !out.gamma.is_immersed())
    throw std::logic_error("extract_witness: glued graph is not an immersed core graph");
  if (!is_efficient(b, out.base_vertex))
    throw std::logic_error("extract_witness: diagram is not efficient");
  for (long nmult : signed_multiplicities(b, out.forward)) {
    bool ok = (m == 0) ? (nmult == 0) : (nmult % m == 0);
    if (!ok) throw std::logic_error("extract_witness: multiplicity not divisible");
  }
  out.ratio = BigRational(-euler_char(out.gamma)) / BigRational(out.degree);
  if (out.ratio != solution.value)
    throw std::logic_error("extract_witness: ratio differs from the LP optimum");
  out.b = std::move(b);
  return out;
}

SpmResult stable_mod_m_rank(const Word& w, int m, const SpmOptions& options) {
  if (m == 1)
    throw std::invalid_argument(
        "stable_mod_m_rank: m = 1 is not supported here; use the bounded search oracle");
  if (m < 0) throw std::invalid_argument("stable_mod_m_rank: m must be >= 0");

  SpmResult res;
  if (w.empty()) {
    res.value = BigRational(-1);
    return res;
  }
  Word core = cyclic_reduce(w).core;

  std::vector<long> expo = exponent_vector(core);
  bool commutator = std::all_of(expo.begin(), expo.end(), [](long e) { return e == 0; });
  if (!commutator) {
    if (m == 0) {
      res.infinite = true;
      res.shortcut = "nonzero exponent vector with m = 0";
      return res;
    }
    bool all_small = true;
    for (auto [pos, neg] : letter_counts(core))
      if (pos >= m || neg >= m) all_small = false;
    if (all_small) {
      res.infinite = true;
      res.shortcut = "every signed letter occurs fewer than m times";
      return res;
    }
  }

  std::vector<Piece> pieces =
      enumerate_pieces(core, m, options.connected_only, options.subset_cap);
  res.piece_count = static_cast<int>(pieces.size());
  if (pieces.empty()) {
    res.infinite = true;
    return res;
  }
  LinearProgram lp = assemble_lp(core, m, pieces, options.anchor);
  res.lp_vars = lp.num_vars;
  res.lp_rows = static_cast<int>(lp.rows.size());
  std::optional<LpSolution> sol = solve(lp);
  if (!sol) {
    res.infinite = true;
    res.lp = std::move(lp);
    return res;
  }
  res.value = sol->value;
  if (options.witness)
    res.witness = extract_witness(core, m, pieces, *sol, options.anchor);
  res.lp_solution = std::move(sol);
  res.lp = std::move(lp);
  return res;
}

}  // namespace wordrank
