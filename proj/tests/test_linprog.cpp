#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <random>

#include "wordrank/linprog.hpp"

using namespace wordrank;

namespace {

BigRational q(long n, long d = 1) { return BigRational(n, d); }

LinearProgram gluing_system() {
  // n4 = n2, n2 = n3, n3 = n4, n1 + n4 = n2 + n3 + n4, n1 + n2 = 1;
  // minimize (n1 + n2 + n3)/2 + n4.
  LinearProgram lp;
  lp.num_vars = 4;
  lp.objective = {q(1, 2), q(1, 2), q(1, 2), q(1)};
  lp.add_constraint({q(0), q(-1), q(0), q(1)}, q(0));
  lp.add_constraint({q(0), q(1), q(-1), q(0)}, q(0));
  lp.add_constraint({q(0), q(0), q(1), q(-1)}, q(0));
  lp.add_constraint({q(1), q(-1), q(-1), q(0)}, q(0));
  lp.add_constraint({q(1), q(1), q(0), q(0)}, q(1));
  return lp;
}

}  // namespace

TEST_CASE("simplex basics") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {q(1), q(0)};
  lp.add_constraint({q(1), q(1)}, q(1));
  auto sol = solve(lp);
  REQUIRE(sol.has_value());
  CHECK(sol->value == q(0));
  CHECK(sol->x == std::vector<BigRational>{q(0), q(1)});
}

TEST_CASE("simplex detects infeasibility") {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.objective = {q(0)};
  lp.add_constraint({q(1)}, q(1));
  lp.add_constraint({q(1)}, q(2));
  CHECK_FALSE(solve(lp).has_value());

  LinearProgram neg;
  neg.num_vars = 1;
  neg.objective = {q(1)};
  neg.add_constraint({q(1)}, q(-1));  // x = -1 impossible with x >= 0
  CHECK_FALSE(solve(neg).has_value());
}

TEST_CASE("the four-variable gluing system solves exactly") {
  auto sol = solve(gluing_system());
  REQUIRE(sol.has_value());
  CHECK(sol->value == q(1));
  CHECK(sol->x == std::vector<BigRational>{q(2, 3), q(1, 3), q(1, 3), q(1, 3)});
}

TEST_CASE("optimum invariant under row order and scaling") {
  std::mt19937 rng(13);
  LinearProgram base = gluing_system();
  for (int trial = 0; trial < 25; ++trial) {
    LinearProgram lp = base;
    std::vector<size_t> perm(lp.rows.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    LinearProgram shuffled;
    shuffled.num_vars = lp.num_vars;
    shuffled.objective = lp.objective;
    for (size_t i : perm) {
      long num = 1 + static_cast<long>(rng() % 5);
      if (rng() % 2) num = -num;
      BigRational f(num, 1 + static_cast<long>(rng() % 5));
      std::vector<BigRational> row = lp.rows[i];
      for (auto& c : row) c *= f;
      shuffled.add_constraint(std::move(row), lp.rhs[i] * f);
    }
    auto sol = solve(shuffled);
    REQUIRE(sol.has_value());
    CHECK(sol->value == q(1));
  }
}

TEST_CASE("solver is deterministic") {
  auto a = solve(gluing_system());
  auto b = solve(gluing_system());
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->x == b->x);
  CHECK(a->value == b->value);
}

TEST_CASE("redundant and zero rows are tolerated") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {q(1), q(2)};
  lp.add_constraint({q(0), q(0)}, q(0));  // vacuous
  lp.add_constraint({q(1), q(1)}, q(2));
  lp.add_constraint({q(2), q(2)}, q(4));  // duplicate
  auto sol = solve(lp);
  REQUIRE(sol.has_value());
  CHECK(sol->value == q(2));
}

TEST_CASE("width mismatches are construction errors") {
  LinearProgram lp;
  lp.num_vars = 2;
  CHECK_THROWS_AS(lp.add_constraint({q(1)}, q(0)), std::invalid_argument);
  lp.objective = {q(1)};
  lp.add_constraint({q(1), q(1)}, q(1));
  CHECK_THROWS_AS(solve(lp), std::invalid_argument);
}

TEST_CASE("lp text form lists one constraint per line") {
  std::string text = lp_to_text(gluing_system());
  CHECK(text.find("minimize 1/2 1/2 1/2 1") == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') >= 6);
}
