#include "wordrank/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "wordrank/errors.hpp"

namespace wordrank {

int MeasureCaps::limit_for_rank(int rank) const {
  if (rank <= 1) return max_n_rank1;
  if (rank == 2) return max_n_rank2;
  if (rank == 3) return max_n_rank3;
  return 3;
}

namespace {

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> invert(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

// Shared tuple loop: assigns a permutation to every generator and calls the
// sink with the chosen tuples and their inverses.
template <typename Sink>
void for_each_tuple(int rank, const std::vector<std::vector<int>>& perms, Sink&& sink) {
  std::vector<const std::vector<int>*> sigma(rank), sigma_inv(rank);
  std::vector<std::vector<int>> inverses(perms.size());
  for (size_t i = 0; i < perms.size(); ++i) inverses[i] = invert(perms[i]);
  std::vector<size_t> choice(rank, 0);
  for (;;) {
    for (int g = 0; g < rank; ++g) {
      sigma[g] = &perms[choice[g]];
      sigma_inv[g] = &inverses[choice[g]];
    }
    sink(sigma, sigma_inv);
    int g = rank - 1;
    while (g >= 0 && ++choice[g] == perms.size()) choice[g--] = 0;
    if (g < 0) break;
  }
}

// Path monodromy of the word: position after reading w starting at each
// sheet.
std::vector<int> word_monodromy(const Word& w, int N,
                                const std::vector<const std::vector<int>*>& sigma,
                                const std::vector<const std::vector<int>*>& sigma_inv) {
  std::vector<int> cur(N);
  std::iota(cur.begin(), cur.end(), 0);
  for (int letter : w.letters) {
    const std::vector<int>& step = letter > 0 ? *sigma[letter - 1] : *sigma_inv[-letter - 1];
    for (int j = 0; j < N; ++j) cur[j] = step[cur[j]];
  }
  return cur;
}

void check_caps(const Word& w, int N, const MeasureCaps& caps) {
  if (N < 1) throw std::domain_error("measure: N must be >= 1");
  int limit = caps.limit_for_rank(w.rank);
  if (N > limit)
    throw resource_error("measure: N = " + std::to_string(N) + " exceeds cap " +
                         std::to_string(limit) + " at rank " + std::to_string(w.rank));
}

}  // namespace

BigRational expect_sn(const Word& w, int N, const Partition& mu, const MeasureCaps& caps) {
  check_caps(w, N, caps);
  Partition padded = pad_partition(mu, N);  // validates N >= |mu| + mu_1

  // chi^{mu[N]} per cycle type.
  std::map<Partition, long> chi;
  std::vector<std::vector<int>> perms = all_permutations(N);
  long long total = 0;
  for_each_tuple(w.rank, perms,
                 [&](const std::vector<const std::vector<int>*>& sigma,
                     const std::vector<const std::vector<int>*>& sigma_inv) {
                   std::vector<int> sw = word_monodromy(w, N, sigma, sigma_inv);
                   Partition type = cycle_type(sw);
                   auto it = chi.find(type);
                   if (it == chi.end()) it = chi.emplace(type, mn_character(padded, type)).first;
                   total += it->second;
                 });
  long denom = 1;
  for (int g = 0; g < w.rank; ++g) denom *= factorial(N);
  return BigRational(total, denom);
}

BigRational expect_wreath_phi(const Word& w, int N, int m, const Partition& mu,
                              const MeasureCaps& caps) {
  if (m == 1) throw std::invalid_argument("expect_wreath_phi: m = 1 is expect_sn");
  if (m < 0) throw std::invalid_argument("expect_wreath_phi: m must be >= 0");
  check_caps(w, N, caps);
  if (!is_valid_partition(mu)) throw std::invalid_argument("expect_wreath_phi: bad partition");
  int d = partition_sum(mu);
  if (N < d) throw std::domain_error("expect_wreath_phi: N < |mu|");

  std::vector<std::vector<int>> perms = all_permutations(N);
  long long total = 0;
  int rank = w.rank;
  int L = w.length();

  // Scratch reused across tuples: per-(generator, sheet) exponent counts
  // with a touched list for O(d*L) clearing.
  std::vector<long> cnt(static_cast<size_t>(rank) * N, 0);
  std::vector<int> touched;
  touched.reserve(static_cast<size_t>(d) * std::max(L, 1));

  for_each_tuple(rank, perms, [&](const std::vector<const std::vector<int>*>& sigma,
                                  const std::vector<const std::vector<int>*>& sigma_inv) {
    std::vector<int> sw = word_monodromy(w, N, sigma, sigma_inv);
    // Cycles of the word permutation.
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(N, false);
    for (int i = 0; i < N; ++i) {
      if (seen[i]) continue;
      std::vector<int> cyc;
      int j = i;
      while (!seen[j]) {
        seen[j] = true;
        cyc.push_back(j);
        j = sw[j];
      }
      cycles.push_back(std::move(cyc));
    }

    // Enumerate invariant subsets as unions of cycles of total size d.
    std::vector<int> chosen;
    auto contribution = [&]() -> long {
      touched.clear();
      for (int ci : chosen)
        for (int x : cycles[ci]) {
          int cur = x;
          for (int letter : w.letters) {
            int g = std::abs(letter) - 1;
            if (letter > 0) {
              int slot = g * N + cur;
              if (cnt[slot] == 0) touched.push_back(slot);
              ++cnt[slot];
              cur = (*sigma[g])[cur];
            } else {
              cur = (*sigma_inv[g])[cur];
              int slot = g * N + cur;
              if (cnt[slot] == 0) touched.push_back(slot);
              --cnt[slot];
            }
          }
        }
      bool ok = true;
      for (int slot : touched) {
        long c = cnt[slot];
        if (m == 0 ? (c != 0) : (c % m != 0)) ok = false;
      }
      for (int slot : touched) cnt[slot] = 0;
      if (!ok) return 0;
      Partition type;
      for (int ci : chosen) type.push_back(static_cast<int>(cycles[ci].size()));
      std::sort(type.begin(), type.end(), std::greater<int>());
      return mn_character(mu, type);
    };
    auto rec = [&](auto&& self, size_t next, int left) -> void {
      if (left == 0) {
        total += contribution();
        return;
      }
      if (next >= cycles.size()) return;
      self(self, next + 1, left);
      if (static_cast<int>(cycles[next].size()) <= left) {
        chosen.push_back(static_cast<int>(next));
        self(self, next + 1, left - static_cast<int>(cycles[next].size()));
        chosen.pop_back();
      }
    };
    rec(rec, 0, d);
  });

  long denom = 1;
  for (int g = 0; g < rank; ++g) denom *= factorial(N);
  return BigRational(total, denom);
}

BetaFit beta_fit(const std::vector<BigRational>& values, const std::vector<long>& dims) {
  if (values.size() != dims.size())
    throw std::invalid_argument("beta_fit: series length mismatch");
  BetaFit out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero()) continue;
    double v = std::fabs(values[i].to_double());
    out.log_values.push_back(std::log(v));
    out.log_dims.push_back(std::log(static_cast<double>(dims[i])));
  }
  if (out.log_values.empty()) {
    out.all_zero = true;
    return out;
  }
  if (out.log_values.size() < 3)
    throw std::invalid_argument("beta_fit: need at least 3 nonzero points");
  size_t n = out.log_values.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += out.log_dims[i];
    my += out.log_values[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (out.log_dims[i] - mx) * (out.log_dims[i] - mx);
    sxy += (out.log_dims[i] - mx) * (out.log_values[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("beta_fit: dimensions must vary");
  double slope = sxy / sxx;
  out.beta = -slope;
  double intercept = my - slope * mx;
  for (size_t i = 0; i < n; ++i) {
    double fit = intercept + slope * out.log_dims[i];
    out.max_residual = std::max(out.max_residual, std::fabs(out.log_values[i] - fit));
  }
  return out;
}

}  // namespace wordrank
