#pragma once

#include <vector>

namespace wordrank {

// Weakly decreasing positive parts; empty = partition of 0.
using Partition = std::vector<int>;

bool is_valid_partition(const Partition& p);
int partition_sum(const Partition& p);

// Irreducible symmetric-group character chi^mu at the given cycle type;
// |mu| must equal |cycle_type|. Murnaghan-Nakayama with memoization.
long mn_character(const Partition& mu, const Partition& cycle_type);

// The padded partition mu[N] = (N - |mu|, mu_1, ..., mu_l); requires
// N >= |mu| + mu_1.
Partition pad_partition(const Partition& mu, int N);

long stable_char_dimension(const Partition& mu, int N);

// chi^{mu[N]} evaluated on a permutation of {0..N-1}.
long stable_char_sn(const Partition& mu, int N, const std::vector<int>& sigma);

Partition cycle_type(const std::vector<int>& sigma);

}  // namespace wordrank
