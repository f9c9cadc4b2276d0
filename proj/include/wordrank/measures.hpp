#pragma once

#include <vector>

#include "wordrank/characters.hpp"
#include "wordrank/rational.hpp"
#include "wordrank/word.hpp"

namespace wordrank {

// Exhaustive enumeration caps: the tuple count is (N!)^rank, so the
// affordable N drops quickly with the rank.
struct MeasureCaps {
  int max_n_rank1 = 8;
  int max_n_rank2 = 6;
  int max_n_rank3 = 5;

  int limit_for_rank(int rank) const;
};

// Exact E_w[chi^{mu[N]}] over Haar-random S_N generator tuples.
BigRational expect_sn(const Word& w, int N, const Partition& mu,
                      const MeasureCaps& caps = {});

// Exact E_w[chi] over C_m wr S_N for the stable character supported on the
// defining linear character with partition mu (m = 0 means the full circle
// group; m = 1 is expect_sn's job). The C_m part is integrated analytically:
// a subset contributes iff every accumulated edge exponent of the lifted
// word paths is divisible by m (zero, when m = 0).
BigRational expect_wreath_phi(const Word& w, int N, int m, const Partition& mu,
                              const MeasureCaps& caps = {});

// Least-squares slope diagnostic of log|E| against log(dim). The decay
// exponent of a finite series is not the liminf; this is a consistency
// check, not a computation of beta.
struct BetaFit {
  bool all_zero = false;  // every value exactly 0: consistent with beta = inf
  double beta = 0.0;      // -slope
  double max_residual = 0.0;
  std::vector<double> log_dims, log_values;
};
BetaFit beta_fit(const std::vector<BigRational>& values, const std::vector<long>& dims);

}  // namespace wordrank
