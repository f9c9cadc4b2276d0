#include "wordrank/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wordrank {

bool is_valid_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int partition_sum(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

namespace {

// Recursion on beta-numbers: removing a k-ribbon moves one bead down by k.
long mn_impl(std::vector<int> beta, const Partition& rho, size_t ri,
             std::map<std::pair<std::vector<int>, size_t>, long>& memo) {
  if (ri == rho.size()) return 1;
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  auto key = std::make_pair(beta, ri);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int k = rho[ri];
  long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - k;
    if (target < 0) continue;
    bool occupied = false;
    int crossings = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++crossings;
    }
    if (occupied) continue;
    std::vector<int> next = beta;
    next[i] = target;
    long sub = mn_impl(std::move(next), rho, ri + 1, memo);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

std::vector<int> beta_numbers(const Partition& mu) {
  int l = static_cast<int>(mu.size());
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = mu[i] + (l - 1 - i);
  return beta;
}

}  // namespace

long mn_character(const Partition& mu, const Partition& cycle_type) {
  if (!is_valid_partition(mu) || !is_valid_partition(cycle_type))
    throw std::invalid_argument("mn_character: invalid partition");
  if (partition_sum(mu) != partition_sum(cycle_type))
    throw std::invalid_argument("mn_character: size mismatch");
  if (mu.empty()) return 1;
  // Memo shared across the recursion of one evaluation; rho varies between
  // top-level calls, so the cache is per call.
  std::map<std::pair<std::vector<int>, size_t>, long> memo;
  return mn_impl(beta_numbers(mu), cycle_type, 0, memo);
}

Partition pad_partition(const Partition& mu, int N) {
  if (!is_valid_partition(mu)) throw std::invalid_argument("pad_partition: invalid partition");
  int d = partition_sum(mu);
  int head = N - d;
  if (head < (mu.empty() ? 0 : mu[0]))
    throw std::domain_error("pad_partition: N < |mu| + mu_1");
  if (head == 0) return mu;  // only when mu is empty and N = 0
  Partition out;
  out.push_back(head);
  out.insert(out.end(), mu.begin(), mu.end());
  return out;
}

long stable_char_dimension(const Partition& mu, int N) {
  Partition padded = pad_partition(mu, N);
  Partition ones(N, 1);
  return mn_character(padded, ones);
}

long stable_char_sn(const Partition& mu, int N, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != N)
    throw std::invalid_argument("stable_char_sn: permutation size mismatch");
  return mn_character(pad_partition(mu, N), cycle_type(sigma));
}

Partition cycle_type(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  std::vector<bool> seen(n, false);
  Partition type;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = sigma[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

}  // namespace wordrank
