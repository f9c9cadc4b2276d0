#include "wordrank/linprog.hpp"

#include <sstream>
#include <stdexcept>

namespace wordrank {

void LinearProgram::add_constraint(std::vector<BigRational> row, BigRational b) {
  if (static_cast<int>(row.size()) != num_vars)
    throw std::invalid_argument("LinearProgram: constraint width mismatch");
  rows.push_back(std::move(row));
  rhs.push_back(std::move(b));
}

namespace {

class Tableau {
 public:
  // Columns: num_vars originals, then one artificial per row, then rhs.
  Tableau(const LinearProgram& lp)
      : n_(lp.num_vars), m_(static_cast<int>(lp.rows.size())), basis_(m_) {
    int width = n_ + m_ + 1;
    t_.assign(m_ + 1, std::vector<BigRational>(width));
    for (int i = 0; i < m_; ++i) {
      bool flip = lp.rhs[i].sign() < 0;
      for (int j = 0; j < n_; ++j) t_[i][j] = flip ? -lp.rows[i][j] : lp.rows[i][j];
      t_[i][n_ + i] = BigRational(1);
      t_[i][width - 1] = flip ? -lp.rhs[i] : lp.rhs[i];
      basis_[i] = n_ + i;
    }
    // Phase-1 reduced costs for minimizing the artificial sum.
    for (int j = 0; j < width; ++j) {
      BigRational s;
      for (int i = 0; i < m_; ++i) s += t_[i][j];
      t_[m_][j] = (j >= n_ && j < n_ + m_) ? BigRational(1) - s : -s;
    }
  }

  // Bland's rule: lowest-index entering column with negative reduced cost,
  // lowest basic-variable index among the minimum-ratio rows.
  void iterate(int max_col) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < max_col; ++j)
        if (t_[m_][j].sign() < 0) {
          enter = j;
          break;
        }
      if (enter == -1) return;
      int leave = -1;
      BigRational best;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        BigRational ratio = rhs(i) / t_[i][enter];
        if (leave == -1 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == -1) throw std::logic_error("simplex: unbounded direction");
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    BigRational p = t_[row][col];
    for (auto& cell : t_[row]) cell /= p;
    for (int i = 0; i <= m_; ++i) {
      if (i == row || t_[i][col].is_zero()) continue;
      BigRational f = t_[i][col];
      for (size_t j = 0; j < t_[i].size(); ++j) t_[i][j] -= f * t_[row][j];
    }
    basis_[row] = col;
  }

  BigRational objective_value() const { return -t_[m_].back(); }
  const BigRational& rhs(int i) const { return t_[i].back(); }

  bool drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      int col = -1;
      for (int j = 0; j < n_; ++j)
        if (!t_[i][j].is_zero()) {
          col = j;
          break;
        }
      if (col >= 0) {
        pivot(i, col);
      } else {
        // Redundant row (all zero on the originals): drop it.
        t_.erase(t_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
        --i;
      }
    }
    return true;
  }

  void load_objective(const std::vector<BigRational>& c) {
    int width = static_cast<int>(t_[0].size());
    for (int j = 0; j < width; ++j) t_[m_][j] = BigRational(0);
    for (int j = 0; j < n_; ++j) t_[m_][j] = c[j];
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= n_ || c[basis_[i]].is_zero()) continue;
      BigRational f = c[basis_[i]];
      for (int j = 0; j < width; ++j) t_[m_][j] -= f * t_[i][j];
    }
  }

  std::vector<BigRational> solution() const {
    std::vector<BigRational> x(n_);
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = rhs(i);
    return x;
  }

  int n_, m_;
  std::vector<std::vector<BigRational>> t_;
  std::vector<int> basis_;
};

}  // namespace

std::optional<LpSolution> solve(const LinearProgram& lp) {
  if (static_cast<int>(lp.objective.size()) != lp.num_vars)
    throw std::invalid_argument("solve: objective width mismatch");
  if (lp.num_vars == 0) {
    for (const auto& b : lp.rhs)
      if (!b.is_zero()) return std::nullopt;
    return LpSolution{BigRational(0), {}};
  }

  Tableau tab(lp);
  tab.iterate(tab.n_ + tab.m_);
  if (!tab.objective_value().is_zero()) return std::nullopt;
  tab.drive_out_artificials();
  tab.load_objective(lp.objective);
  tab.iterate(tab.n_);

  LpSolution out;
  out.x = tab.solution();
  for (int j = 0; j < lp.num_vars; ++j) out.value += lp.objective[j] * out.x[j];

  // The basic solution must satisfy the original system exactly.
  for (size_t i = 0; i < lp.rows.size(); ++i) {
    BigRational lhs;
    for (int j = 0; j < lp.num_vars; ++j) lhs += lp.rows[i][j] * out.x[j];
    if (lhs != lp.rhs[i]) throw std::logic_error("simplex: solution violates a constraint");
  }
  for (const auto& xi : out.x)
    if (xi.sign() < 0) throw std::logic_error("simplex: negative basic value");
  return out;
}

std::string lp_to_text(const LinearProgram& lp) {
  std::ostringstream os;
  os << "minimize";
  for (int j = 0; j < lp.num_vars; ++j) os << " " << lp.objective[j].str();
  os << "\n";
  for (size_t i = 0; i < lp.rows.size(); ++i) {
    for (int j = 0; j < lp.num_vars; ++j) os << (j ? " " : "") << lp.rows[i][j].str();
    os << " = " << lp.rhs[i].str() << "\n";
  }
  if (!lp.var_names.empty()) {
    os << "vars";
    for (const auto& name : lp.var_names) os << " " << name;
    os << "\n";
  }
  return os.str();
}

}  // namespace wordrank
