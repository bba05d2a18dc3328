#include "symbiont/balanced.hpp"

#include "symbiont/errors.hpp"

#include <mutex>

namespace symbiont {

namespace {

using Eigen::Index;

// Solves A lambda = 1 for an n x k 0/1 matrix by exact Gauss-Jordan
// elimination. Returns the unique solution when the columns are independent
// and the system is consistent.
std::optional<Vector<Rational>> solve_unique(Matrix<Rational> a) {
  const Index rows = a.rows();
  const Index cols = a.cols() - 1;
  Index pivot_row = 0;
  for (Index c = 0; c < cols; ++c) {
    Index found = -1;
    for (Index r = pivot_row; r < rows; ++r)
      if (a(r, c) != 0) {
        found = r;
        break;
      }
    if (found < 0) return std::nullopt;  // dependent column
    a.row(found).swap(a.row(pivot_row));
    a.row(pivot_row) /= Rational(a(pivot_row, c));
    for (Index r = 0; r < rows; ++r) {
      if (r == pivot_row || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      a.row(r) -= f * a.row(pivot_row);
    }
    ++pivot_row;
  }
  for (Index r = pivot_row; r < rows; ++r)
    if (a(r, cols) != 0) return std::nullopt;  // inconsistent
  return Vector<Rational>(a.col(cols).head(cols));
}

std::vector<BalancedVector> enumerate(std::size_t n) {
  std::vector<Coalition> columns;
  for (Coalition s : canonical_coalitions(n))
    if (!s.empty()) columns.push_back(s);

  std::vector<BalancedVector> out;
  std::vector<std::size_t> pick;
  // Depth-first over column subsets of size 1..n in lexicographic index order.
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (!pick.empty()) {
      Matrix<Rational> a = Matrix<Rational>::Zero(static_cast<Index>(n), static_cast<Index>(pick.size() + 1));
      for (std::size_t c = 0; c < pick.size(); ++c)
        for (AgentId i : columns[pick[c]].members()) a(static_cast<Index>(i), static_cast<Index>(c)) = 1;
      a.col(static_cast<Index>(pick.size())).setOnes();
      if (auto sol = solve_unique(std::move(a))) {
        bool positive = true;
        for (Index c = 0; c < sol->size(); ++c) positive = positive && (*sol)(c) > 0;
        if (positive) {
          BalancedVector v;
          for (std::size_t c = 0; c < pick.size(); ++c) v.weights.emplace(columns[pick[c]], (*sol)(static_cast<Index>(c)));
          out.push_back(std::move(v));
        }
      }
    }
    if (pick.size() == n) return;
    for (std::size_t next = start; next < columns.size(); ++next) {
      pick.push_back(next);
      self(self, next + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  return out;
}

}  // namespace

std::vector<BalancedVector> balanced_vertices(std::size_t n) {
  if (n == 0 || n > kVertexEnumerationCap)
    throw CapExceeded("balanced vertex enumeration supports 1.." + std::to_string(kVertexEnumerationCap) +
                      " agents");
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<BalancedVector>> memo;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, enumerate(n)).first;
  return it->second;
}

bool is_balanced_vector(std::size_t n, const BalancedVector& lambda) {
  std::vector<Rational> per_agent(n);
  for (const auto& [s, w] : lambda.weights) {
    if (s.empty() || !s.subset_of(Coalition::first(n)) || w < 0 || w > 1) return false;
    for (AgentId i : s.members()) per_agent[i] += w;
  }
  for (const auto& total : per_agent)
    if (total != 1) return false;
  return true;
}

Rational balanced_excess(const Game& game, const BalancedVector& lambda) {
  Rational total(0);
  for (const auto& [s, w] : lambda.weights) total += w * game.value(s);
  return total - game.value(game.grand());
}

std::optional<BalancedVector> violating_balanced_vector(const Game& game) {
  std::optional<BalancedVector> best;
  Rational best_excess(0);
  for (auto& lambda : balanced_vertices(game.size())) {
    Rational e = balanced_excess(game, lambda);
    if (e > best_excess) {
      best_excess = std::move(e);
      best = std::move(lambda);
    }
  }
  return best;
}

}  // namespace symbiont
