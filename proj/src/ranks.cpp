#include "wordrank/ranks.hpp"

#include <cstdio>
#include <cstdlib>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "wordrank/errors.hpp"
#include "wordrank/whitehead.hpp"

namespace wordrank {

namespace {

Word reduced_core(const Word& w) { return cyclic_reduce(w).core; }

}  // namespace

RankResult primitivity_rank(const Word& w, const QuotientLimits& limits) {
  RankResult res;
  if (w.empty()) {
    res.value = 0;  // the identity is non-primitive in the trivial subgroup
    return res;
  }
  Word core = reduced_core(w);
  CycleGraph base = cycle_graph(core);
  std::vector<std::vector<int>> forward{base.forward};
  res.infinite = true;
  enumerate_quotients(base.graph, limits, [&](const Quotient& q) {
    if (q.map.is_isomorphism()) return;
    int rank = 1 - euler_char(q.graph);
    if (!res.infinite && rank >= res.value) return;
    if (!is_algebraic(q.map, forward)) return;
    res.infinite = false;
    res.value = rank;
    res.witness = q;
  });
  return res;
}

RankResult mod_m_rank(const Word& w, int m, const QuotientLimits& limits) {
  if (m == 1) return primitivity_rank(w, limits);
  if (m < 0) throw std::invalid_argument("mod_m_rank: m must be >= 0");
  RankResult res;
  if (w.empty()) {
    res.value = 0;
    return res;
  }
  Word core = reduced_core(w);
  CycleGraph base = cycle_graph(core);
  std::vector<std::vector<int>> forward{base.forward};
  res.infinite = true;
  enumerate_quotients(base.graph, limits, [&](const Quotient& q) {
    int rank = 1 - euler_char(q.graph);
    if (!res.infinite && rank >= res.value) return;
    for (long n : signed_multiplicities(q.map, forward)) {
      if (m == 0 ? (n != 0) : (n % m != 0)) return;
    }
    res.infinite = false;
    res.value = rank;
    res.witness = q;
  });
  return res;
}

std::vector<std::vector<int>> partitions_of(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

namespace {

// 5 bits per vertex, up to 24 vertices.
struct PackedState {
  uint64_t a = 0, b = 0;
  bool operator==(const PackedState& o) const { return a == o.a && b == o.b; }
};

// Linear-probe set for packed states; (0,0) is reserved via a side flag (it
// only encodes the one-vertex, one-class state).
class PackedSet {
 public:
  explicit PackedSet(size_t initial = 1 << 16) { rehash(initial); }

  size_t size() const { return size_; }

  // Returns true when newly inserted.
  bool insert(const PackedState& s) {
    if (s.a == 0 && s.b == 0) {
      bool fresh = !has_zero_;
      has_zero_ = true;
      return fresh;
    }
    if ((size_ + 1) * 10 >= capacity_ * 6) rehash(capacity_ * 2);
    size_t i = probe(s);
    if (!(slots_[i].a == 0 && slots_[i].b == 0)) return false;
    slots_[i] = s;
    ++size_;
    return true;
  }

 private:
  size_t probe(const PackedState& s) const {
    uint64_t x = s.a * 0x9e3779b97f4a7c15ull ^ (s.b + 0xbf58476d1ce4e5b9ull);
    x ^= x >> 31;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 29;
    size_t i = static_cast<size_t>(x) & (capacity_ - 1);
    while (!(slots_[i].a == 0 && slots_[i].b == 0) && !(slots_[i] == s))
      i = (i + 1) & (capacity_ - 1);
    return i;
  }

  void rehash(size_t cap) {
    std::vector<PackedState> old = std::move(slots_);
    capacity_ = std::max<size_t>(64, cap);
    slots_.assign(capacity_, PackedState{});
    for (const auto& s : old)
      if (!(s.a == 0 && s.b == 0)) slots_[probe(s)] = s;
  }

  std::vector<PackedState> slots_;
  size_t capacity_ = 0;
  size_t size_ = 0;
  bool has_zero_ = false;
};

// Lattice walk over the fold-closed efficient quotients of one cover. States
// are vertex partitions closed under folding, reached by merging class
// pairs; classes never mix two vertices of the same rho-fiber (coarsenings
// of inefficient partitions stay inefficient, so those subtrees are cut).
// States are kept canonical under the deck symmetries of the cover (cycle
// rotations by full w-lengths and swaps of equal-length cycles); census
// entries are weighted by orbit size to keep diagram counts exact.
class CoverSearch {
 public:
  static constexpr int kMaxVertices = 24;

  CoverSearch(const Word& w, const std::vector<int>& nu, const SearchLimits& limits)
      : limits_(limits), cover_(multi_cycle(w, nu)), L_(w.length()) {
    n_ = cover_.graph.num_vertices;
    if (n_ > std::min(limits.max_cover_vertices, kMaxVertices))
      throw resource_error("cover search: " + std::to_string(n_) + " vertices exceeds cap " +
                           std::to_string(std::min(limits.max_cover_vertices, kMaxVertices)));
    if (L_ > 31) throw resource_error("cover search: base cycle too long for fiber masks");
    build_slots();
    build_deck(nu);
    estamp_.assign(static_cast<size_t>(kMaxVertices) * std::max(nl_, 1), 0);
    eid_.assign(estamp_.size(), 0);
  }

  const CycleCover& cover() const { return cover_; }
  long visited() const { return visited_; }
  // instrumentation
  long n_pairs = 0, n_fiberfail = 0, n_closefail = 0, n_success = 0, n_new = 0;

  struct StateView {
    const std::vector<int>& cls;        // vertex -> compact class id
    int num_classes;
    int num_edges;
    const std::vector<long>& edge_mult;
    const std::vector<int>& edge_tail;
    const std::vector<int>& edge_label;
    const std::vector<int>& edge_head;
    long orbit_weight;  // diagrams represented by this canonical state
  };

  template <typename Visitor>
  void run(Visitor&& visit) {
    std::vector<uint8_t> discrete(n_);
    std::iota(discrete.begin(), discrete.end(), 0);
    PackedState start = pack(discrete.data());
    seen_.insert(start);
    stack_.push_back(start);
    while (!stack_.empty()) {
      PackedState state = stack_.back();
      stack_.pop_back();
      process(state, visit);
    }
  }

 private:
  struct Step {
    uint8_t tail;
    uint8_t head;  // endpoints of the positive orientation
    uint8_t lid;   // positive letter id
    int8_t sign;
  };

  void build_slots() {
    std::vector<int> letters;
    for (int e = 0; e < cover_.graph.oriented_count(); ++e)
      letters.push_back(cover_.graph.label[e]);
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    letters_ = letters;
    nl_ = static_cast<int>(letters.size());
    slot_lid_.assign(n_, {0, 0});
    slot_dst_.assign(n_, {0, 0});
    std::vector<int> filled(n_, 0);
    auto lid_of = [&](int l) {
      return static_cast<int>(std::lower_bound(letters_.begin(), letters_.end(), l) -
                              letters_.begin());
    };
    for (const auto& cyc : cover_.forward)
      for (int e : cyc) {
        int u = cover_.graph.origin[e];
        int t = cover_.graph.terminus(e);
        slot_lid_[u][filled[u]] = lid_of(cover_.graph.label[e]);
        slot_dst_[u][filled[u]++] = t;
        slot_lid_[t][filled[t]] = lid_of(-cover_.graph.label[e]);
        slot_dst_[t][filled[t]++] = u;
        int l = cover_.graph.label[e];
        Step st;
        if (l > 0)
          st = {static_cast<uint8_t>(u), static_cast<uint8_t>(t),
                static_cast<uint8_t>(lid_of(l)), +1};
        else
          st = {static_cast<uint8_t>(t), static_cast<uint8_t>(u),
                static_cast<uint8_t>(lid_of(-l)), -1};
        steps_.push_back(st);
      }
  }

  // Deck transformations: independent rotation of every cycle by multiples
  // of |w| and permutations of equal-length cycles, as vertex maps.
  void build_deck(const std::vector<int>& nu) {
    int c = static_cast<int>(nu.size());
    std::vector<int> offset(c + 1, 0);
    for (int i = 0; i < c; ++i) offset[i + 1] = offset[i] + nu[i] * L_;
    std::vector<std::vector<int>> block_perms;
    std::vector<int> perm(c);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < c; ++i)
        if (nu[perm[i]] != nu[i]) ok = false;
      if (ok) block_perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<int> rot(c, 0);
    for (;;) {
      for (const auto& bp : block_perms) {
        std::vector<uint8_t> g(n_);
        for (int i = 0; i < c; ++i) {
          int len = nu[i] * L_;
          for (int p = 0; p < len; ++p)
            g[offset[i] + p] = static_cast<uint8_t>(
                offset[bp[i]] + (p + rot[i] * L_) % len);
        }
        deck_.push_back(std::move(g));
      }
      int i = 0;
      while (i < c && ++rot[i] == nu[i]) rot[i++] = 0;
      if (i == c) break;
    }
    deck_inv_.resize(deck_.size(), std::vector<uint8_t>(n_));
    for (size_t gi = 0; gi < deck_.size(); ++gi)
      for (int v = 0; v < n_; ++v) deck_inv_[gi][deck_[gi][v]] = static_cast<uint8_t>(v);
  }

  PackedState pack(const uint8_t* rgs) const {
    PackedState s;
    for (int i = 0; i < n_ && i < 12; ++i) s.a |= static_cast<uint64_t>(rgs[i]) << (5 * i);
    for (int i = 12; i < n_; ++i) s.b |= static_cast<uint64_t>(rgs[i]) << (5 * (i - 12));
    return s;
  }

  void unpack(const PackedState& s, std::vector<uint8_t>& rgs) const {
    rgs.resize(n_);
    for (int i = 0; i < n_; ++i)
      rgs[i] = static_cast<uint8_t>(
          (i < 12 ? (s.a >> (5 * i)) : (s.b >> (5 * (i - 12)))) & 31u);
  }

  // --- scratch partition; roots without path compression so that trial
  // merges can be undone from a log ---

  int find(int v) const {
    while (root_[v] != v) v = root_[v];
    return v;
  }

  void load(const uint8_t* rgs) {
    for (int i = 0; i < n_; ++i) first_[rgs[i]] = -1;
    for (int i = 0; i < n_; ++i) {
      if (first_[rgs[i]] == -1) {
        first_[rgs[i]] = i;
        root_[i] = i;
        cmask_[i] = 1u << i;
        fmask_[i] = 1u << cover_.base_vertex[i];
      } else {
        int r = first_[rgs[i]];
        root_[i] = r;
        cmask_[r] |= 1u << i;
        fmask_[r] |= 1u << cover_.base_vertex[i];
      }
    }
  }

  // Both arguments must be roots.
  void log_union(int lo, int hi) {
    undo_.push_back({hi, lo, cmask_[lo], fmask_[lo]});
    root_[hi] = lo;
    cmask_[lo] |= cmask_[hi];
    fmask_[lo] |= fmask_[hi];
  }

  void rollback() {
    while (!undo_.empty()) {
      const UndoEntry& u = undo_.back();
      root_[u.hi] = u.hi;  // hi was a root when merged; its masks were untouched
      cmask_[u.lo] = u.lo_cmask;
      fmask_[u.lo] = u.lo_fmask;
      undo_.pop_back();
    }
  }

  // Unites two classes and folds to closure, logging every change; false on
  // a fiber collision.
  bool unite_and_close(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    if (fmask_[a] & fmask_[b]) return false;
    if (a > b) std::swap(a, b);
    log_union(a, b);
    work_.clear();
    work_.push_back(a);
    while (!work_.empty()) {
      int r = find(work_.back());
      work_.pop_back();
      ++gen_;
      uint32_t members = cmask_[r];
      bool changed = false;
      while (members) {
        int v = __builtin_ctz(members);
        members &= members - 1;
        for (int s = 0; s < 2; ++s) {
          int lid = slot_lid_[v][s];
          int dst = find(slot_dst_[v][s]);
          if (lstamp_[lid] != gen_) {
            lstamp_[lid] = gen_;
            ldest_[lid] = dst;
            continue;
          }
          int other = find(ldest_[lid]);
          if (other == dst) continue;
          if (fmask_[other] & fmask_[dst]) return false;
          int lo = std::min(other, dst), hi = std::max(other, dst);
          log_union(lo, hi);
          ldest_[lid] = lo;
          work_.push_back(lo);
          if (lo == r || hi == r) changed = true;
        }
      }
      if (changed) work_.push_back(r);  // class grew while scanning
    }
    return true;
  }

  // Canonical RGS over the deck orbit; result in canon_.
  void canonicalize() {
    bool first_g = true;
    for (const auto& ginv : deck_inv_) {
      ++gen_;
      int next = 0;
      bool smaller = false;
      bool worse = false;
      for (int i = 0; i < n_; ++i) {
        int r = find(ginv[i]);
        if (rstamp_[r] != gen_) {
          rstamp_[r] = gen_;
          rlabel_[r] = static_cast<uint8_t>(next++);
        }
        uint8_t lab = rlabel_[r];
        trial_[i] = lab;
        if (!first_g && !smaller) {
          if (lab > canon_[i]) {
            worse = true;
            break;
          }
          if (lab < canon_[i]) smaller = true;
        }
      }
      if (!worse && (first_g || smaller)) {
        std::copy(trial_.begin(), trial_.begin() + n_, canon_.begin());
        first_g = false;
      }
    }
  }

  long orbit_weight_of_canonical() {
    if (deck_.size() == 1) return 1;
    long stab = 0;
    for (const auto& ginv : deck_inv_) {
      ++gen_;
      int next = 0;
      bool same = true;
      for (int i = 0; i < n_ && same; ++i) {
        int r = find(ginv[i]);
        if (rstamp_[r] != gen_) {
          rstamp_[r] = gen_;
          rlabel_[r] = static_cast<uint8_t>(next++);
        }
        if (rlabel_[r] != rgs_[i]) same = false;
      }
      if (same) ++stab;
    }
    return static_cast<long>(deck_.size()) / stab;
  }

  template <typename Visitor>
  void process(const PackedState& packed, Visitor&& visit) {
    ++visited_;
    unpack(packed, rgs_);
    load(rgs_.data());
    evaluate(visit);
    int nc = 0;
    for (int i = 0; i < n_; ++i) nc = std::max(nc, static_cast<int>(rgs_[i]) + 1);
    for (int a = 0; a < nc; ++a)
      for (int b = a + 1; b < nc; ++b) {
        ++n_pairs;
        int ra = first_[a], rb = first_[b];
        if (fmask_[ra] & fmask_[rb]) { ++n_fiberfail; continue; }
        undo_.clear();
        if (unite_and_close(ra, rb)) {
          ++n_success;
          canonicalize();
          PackedState next = pack(canon_.data());
          if (static_cast<long>(seen_.size()) >= limits_.max_states)
            throw resource_error("cover search: state cap exceeded");
          if (seen_.insert(next)) { ++n_new; stack_.push_back(next); }
        } else ++n_closefail;
        rollback();
      }
  }

  template <typename Visitor>
  void evaluate(Visitor&& visit) {
    int nc = 0;
    cls_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      cls_[i] = rgs_[i];
      nc = std::max(nc, cls_[i] + 1);
    }
    ++gen_;
    edge_mult_.clear();
    edge_tail_.clear();
    edge_label_.clear();
    edge_head_.clear();
    for (const auto& st : steps_) {
      int c = cls_[st.tail];
      int slot = c * nl_ + st.lid;
      int id;
      if (estamp_[slot] != gen_) {
        estamp_[slot] = gen_;
        id = static_cast<int>(edge_mult_.size());
        eid_[slot] = id;
        edge_mult_.push_back(0);
        edge_tail_.push_back(c);
        edge_label_.push_back(letters_[st.lid]);
        edge_head_.push_back(cls_[st.head]);
      } else {
        id = eid_[slot];
      }
      edge_mult_[id] += st.sign;
    }
    long weight = deck_.size() > 1 ? orbit_weight_of_canonical() : 1;
    StateView view{cls_,
                   nc,
                   static_cast<int>(edge_mult_.size()),
                   edge_mult_,
                   edge_tail_,
                   edge_label_,
                   edge_head_,
                   weight};
    visit(view);
  }

  struct UndoEntry {
    int hi;
    int lo;
    uint32_t lo_cmask;
    uint32_t lo_fmask;
  };

  SearchLimits limits_;
  CycleCover cover_;
  int L_, n_ = 0, nl_ = 0;
  std::vector<int> letters_;
  std::vector<std::array<int, 2>> slot_lid_, slot_dst_;
  std::vector<Step> steps_;
  std::vector<std::vector<uint8_t>> deck_, deck_inv_;

  std::array<int, kMaxVertices> root_{};
  std::array<uint32_t, kMaxVertices> cmask_{}, fmask_{};
  std::array<int, 32> first_{};
  std::array<long, 16> lstamp_{};
  std::array<int, 16> ldest_{};
  std::array<long, kMaxVertices> rstamp_{};
  std::array<uint8_t, kMaxVertices> rlabel_{};
  std::array<uint8_t, kMaxVertices + 1> trial_{};
  std::vector<uint8_t> rgs_;
  std::array<uint8_t, kMaxVertices + 1> canon_{};
  std::vector<UndoEntry> undo_;
  std::vector<int> work_;
  long gen_ = 0;
  std::vector<long> estamp_;
  std::vector<int> eid_;
  std::vector<int> cls_;
  std::vector<long> edge_mult_;
  std::vector<int> edge_tail_, edge_label_, edge_head_;
  PackedSet seen_;
  std::vector<PackedState> stack_;
  long visited_ = 0;
};

Quotient materialize(const CycleCover& cover, const CoverSearch::StateView& s) {
  Quotient q;
  q.graph.num_vertices = s.num_classes;
  for (int e = 0; e < s.num_edges; ++e)
    q.graph.add_edge(s.edge_tail[e], s.edge_head[e], s.edge_label[e]);
  q.map.source = cover.graph;
  q.map.target = q.graph;
  q.map.vertex_map = s.cls;
  q.map.edge_map.assign(cover.graph.oriented_count(), -1);
  std::map<std::pair<int, int>, int> key_to_edge;
  for (int e = 0; e < s.num_edges; ++e) key_to_edge[{s.edge_tail[e], s.edge_label[e]}] = e;
  for (int k = 0; k < cover.graph.geometric_count(); ++k) {
    int c = s.cls[cover.graph.origin[2 * k]];
    int id = key_to_edge.at({c, cover.graph.label[2 * k]});
    q.map.edge_map[2 * k] = 2 * id;
    q.map.edge_map[2 * k + 1] = 2 * id + 1;
  }
  q.map.validate();
  return q;
}

bool iso_on_some_component(const Quotient& q) {
  int nv = q.graph.num_vertices;
  std::vector<int> comp(nv, -1);
  std::vector<std::vector<int>> adj(nv);
  for (int e = 0; e < q.graph.oriented_count(); ++e)
    adj[q.graph.origin[e]].push_back(q.graph.terminus(e));
  int nc = 0;
  for (int v = 0; v < nv; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int t : adj[u])
        if (comp[t] == -1) {
          comp[t] = nc;
          stack.push_back(t);
        }
    }
    ++nc;
  }
  std::vector<int> class_size(nv, 0);
  for (int v : q.map.vertex_map) ++class_size[v];
  std::vector<bool> all_singletons(nc, true);
  for (int v = 0; v < nv; ++v)
    if (class_size[v] != 1) all_singletons[comp[v]] = false;
  for (int c = 0; c < nc; ++c)
    if (all_singletons[c]) return true;
  return false;
}

struct BestState {
  std::vector<int> nu;
  std::vector<uint8_t> cls;
};

// Validity verdicts per requested modulus for one state.
using Validator = std::function<void(const CoverSearch::StateView&, const CycleCover&,
                                     std::vector<char>&)>;

std::map<int, DiagramSearchResult> run_search(const Word& w, const std::vector<int>& keys,
                                              const SearchLimits& limits, bool connected_only,
                                              const Validator& validate) {
  if (limits.max_degree < 1) throw std::invalid_argument("search: max_degree must be >= 1");
  Word core = reduced_core(w);
  if (core.empty()) throw std::invalid_argument("search: empty word");

  std::map<int, DiagramSearchResult> results;
  std::map<int, BestState> best;
  for (int key : keys) results[key].degree_bound = limits.max_degree;

  std::vector<char> verdict(keys.size());
  for (int d = 1; d <= limits.max_degree; ++d) {
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& nu : partitions_of(d)) {
      if (connected_only && nu.size() != 1) continue;
      CoverSearch search(core, nu, limits);
      const CycleCover& cover = search.cover();
      search.run([&](const CoverSearch::StateView& s) {
        std::fill(verdict.begin(), verdict.end(), 0);
        validate(s, cover, verdict);
        for (size_t ki = 0; ki < keys.size(); ++ki) {
          if (!verdict[ki]) continue;
          DiagramSearchResult& res = results[keys[ki]];
          BigRational ratio(s.num_edges - s.num_classes, d);
          res.census[{d, ratio}] += s.orbit_weight;
          if (res.infinite || ratio < res.best_ratio) {
            res.infinite = false;
            res.best_ratio = ratio;
            best[keys[ki]] =
                BestState{nu, std::vector<uint8_t>(s.cls.begin(), s.cls.end())};
          }
        }
      });
      for (int key : keys) results[key].states_visited += search.visited();
      if (const char* dbg = getenv("WORDRANK_SEARCH_DEBUG"); dbg && *dbg == '1') {
        fprintf(stderr, "nu=[");
        for (int x : nu) fprintf(stderr, "%d", x);
        fprintf(stderr, "] states=%ld pairs=%ld fiberfail=%ld closefail=%ld success=%ld new=%ld\n",
                search.visited(), search.n_pairs, search.n_fiberfail, search.n_closefail,
                search.n_success, search.n_new);
      }
    }
    auto t1 = std::chrono::steady_clock::now();
    for (int key : keys)
      results[key].per_degree_seconds[d] = std::chrono::duration<double>(t1 - t0).count();
  }

  for (auto& [key, state] : best) {
    CycleCover cover = multi_cycle(core, state.nu);
    std::vector<std::vector<int>> blocks(
        1 + *std::max_element(state.cls.begin(), state.cls.end()));
    for (size_t i = 0; i < state.cls.size(); ++i)
      blocks[state.cls[i]].push_back(static_cast<int>(i));
    FoldResult f = quotient_by_partition(cover.graph, blocks);
    SearchDiagram diag;
    diag.nu = state.nu;
    diag.degree = std::accumulate(diag.nu.begin(), diag.nu.end(), 0);
    diag.cover = std::move(cover);
    diag.quotient = Quotient{f.graph, f.map};
    diag.ratio = results[key].best_ratio;
    results[key].best_diagram = std::move(diag);
  }
  return results;
}

}  // namespace

std::map<int, DiagramSearchResult> bounded_spm_search_multi(const Word& w,
                                                            const std::vector<int>& ms,
                                                            const SearchLimits& limits) {
  for (int m : ms)
    if (m == 1 || m < 0)
      throw std::invalid_argument("bounded_spm_search: m = 1 is served by bounded_sp_search");
  return run_search(w, ms, limits, false,
                    [&ms](const CoverSearch::StateView& s, const CycleCover&,
                          std::vector<char>& verdict) {
                      for (size_t ki = 0; ki < ms.size(); ++ki) {
                        int m = ms[ki];
                        bool ok = true;
                        for (int e = 0; e < s.num_edges && ok; ++e) {
                          long n = s.edge_mult[e];
                          if (m == 0 ? (n != 0) : (n % m != 0)) ok = false;
                        }
                        verdict[ki] = ok;
                      }
                    });
}

DiagramSearchResult bounded_spm_search(const Word& w, int m, const SearchLimits& limits) {
  return bounded_spm_search_multi(w, {m}, limits).at(m);
}

DiagramSearchResult bounded_sp_search(const Word& w, const SearchLimits& limits,
                                      bool connected_only) {
  return run_search(w, {1}, limits, connected_only,
                    [](const CoverSearch::StateView& s, const CycleCover& cover,
                       std::vector<char>& verdict) {
                      Quotient q = materialize(cover, s);
                      if (iso_on_some_component(q)) return;
                      verdict[0] = is_algebraic(q.map, cover.forward);
                    })
      .at(1);
}

}  // namespace wordrank
