#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordrank/rational.hpp"

namespace wordrank {

// Equality-constrained minimization over nonnegative variables with exact
// rational data: minimize c.x subject to A x = b, x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<std::vector<BigRational>> rows;
  std::vector<BigRational> rhs;
  std::vector<BigRational> objective;
  std::vector<std::string> var_names;

  void add_constraint(std::vector<BigRational> row, BigRational b);
};

struct LpSolution {
  BigRational value;
  std::vector<BigRational> x;  // a basic feasible minimizer
};

// Two-phase simplex with exact pivots and Bland's anti-cycling rule.
// Returns nothing when the program is infeasible. The callers of this
// artifact only build programs bounded below (objective >= 0 on x >= 0);
// an unbounded direction therefore raises std::logic_error.
std::optional<LpSolution> solve(const LinearProgram& lp);

// Plain-text equality form, one constraint per line, rationals as "p/q".
std::string lp_to_text(const LinearProgram& lp);

}  // namespace wordrank
