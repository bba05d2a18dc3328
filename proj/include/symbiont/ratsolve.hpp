#pragma once

#include "symbiont/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace symbiont::ratsolve {

using Eigen::Index;

/// One row `coeffs . x  (= or >=)  rhs`.
template <typename Scalar>
struct Constraint {
  Vector<Scalar> coeffs;
  Scalar rhs;
};

/// Finite system of linear equalities and `>=` inequalities over free
/// variables x in Scalar^n.
template <typename Scalar>
class LinearSystem {
 public:
  explicit LinearSystem(Index variables) : variables_(variables) {
    if (variables < 0) throw std::invalid_argument("negative variable count");
  }

  Index variables() const { return variables_; }

  void add_equality(Vector<Scalar> coeffs, Scalar rhs) {
    check(coeffs);
    equalities_.push_back({std::move(coeffs), std::move(rhs)});
  }
  /// coeffs . x >= rhs
  void add_inequality(Vector<Scalar> coeffs, Scalar rhs) {
    check(coeffs);
    inequalities_.push_back({std::move(coeffs), std::move(rhs)});
  }

  const std::vector<Constraint<Scalar>>& equalities() const { return equalities_; }
  const std::vector<Constraint<Scalar>>& inequalities() const { return inequalities_; }

  bool satisfied_by(const Vector<Scalar>& x) const {
    if (x.size() != variables_) return false;
    for (const auto& c : equalities_)
      if (c.coeffs.dot(x) != c.rhs) return false;
    for (const auto& c : inequalities_)
      if (c.coeffs.dot(x) < c.rhs) return false;
    return true;
  }

 private:
  void check(const Vector<Scalar>& coeffs) const {
    if (coeffs.size() != variables_) throw std::invalid_argument("coefficient vector has the wrong length");
  }

  Index variables_;
  std::vector<Constraint<Scalar>> equalities_;
  std::vector<Constraint<Scalar>> inequalities_;
};

/// Farkas-style proof of infeasibility. Multiplying each equality by
/// `eq_multipliers` (any sign) and each inequality by `ge_multipliers` (>= 0)
/// and summing yields  0 . x >= gap  with gap > 0.
template <typename Scalar>
struct Certificate {
  Vector<Scalar> eq_multipliers;
  Vector<Scalar> ge_multipliers;
  Scalar gap;
};

template <typename Scalar>
struct Feasibility {
  std::optional<Vector<Scalar>> witness;
  std::optional<Certificate<Scalar>> certificate;

  bool feasible() const { return witness.has_value(); }
};

/// Expands a certificate against its system: the combined row must vanish,
/// inequality multipliers must be non-negative and the combined right-hand
/// side must equal the stated positive gap.
template <typename Scalar>
bool verify(const LinearSystem<Scalar>& system, const Certificate<Scalar>& cert) {
  const auto& eqs = system.equalities();
  const auto& ges = system.inequalities();
  if (cert.eq_multipliers.size() != static_cast<Index>(eqs.size()) ||
      cert.ge_multipliers.size() != static_cast<Index>(ges.size()))
    return false;
  Vector<Scalar> row = Vector<Scalar>::Zero(system.variables());
  Scalar rhs(0);
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    const Scalar& mu = cert.eq_multipliers(static_cast<Index>(e));
    if (mu == 0) continue;
    row += mu * eqs[e].coeffs;
    rhs += mu * eqs[e].rhs;
  }
  for (std::size_t r = 0; r < ges.size(); ++r) {
    const Scalar& lambda = cert.ge_multipliers(static_cast<Index>(r));
    if (lambda < 0) return false;
    if (lambda == 0) continue;
    row += lambda * ges[r].coeffs;
    rhs += lambda * ges[r].rhs;
  }
  for (Index i = 0; i < row.size(); ++i)
    if (row(i) != 0) return false;
  return rhs == cert.gap && rhs > 0;
}

namespace detail {

// Solves the normalised alternative system
//
//   max  b.y   s.t.  A^T y = 0,  1.y + s = 1,  y >= 0, s >= 0
//
// where each equality row contributes a (p, q) pair of columns with opposite
// signs. The optimum is 0 iff the original system is feasible, in which case
// the simplex multipliers of the A^T rows give a witness x; a positive optimum
// gives the Farkas multipliers directly. The tableau has n + 1 rows, so cost
// grows with the constraint count only linearly. Bland's rule prevents cycling.
template <typename Scalar>
class AlternativeSimplex {
 public:
  explicit AlternativeSimplex(const LinearSystem<Scalar>& system)
      : system_(system),
        n_(system.variables()),
        m_ge_(static_cast<Index>(system.inequalities().size())),
        m_eq_(static_cast<Index>(system.equalities().size())),
        slack_(m_ge_ + 2 * m_eq_),
        first_artificial_(slack_ + 1),
        rhs_(first_artificial_ + n_),
        objective_(n_ + 1),
        tableau_(Matrix<Scalar>::Zero(n_ + 2, rhs_ + 1)),
        basis_(static_cast<std::size_t>(n_ + 1)) {
    const auto& ges = system.inequalities();
    const auto& eqs = system.equalities();
    for (Index r = 0; r < m_ge_; ++r) set_column(r, ges[static_cast<std::size_t>(r)].coeffs, -ges[static_cast<std::size_t>(r)].rhs);
    for (Index e = 0; e < m_eq_; ++e) {
      const auto& c = eqs[static_cast<std::size_t>(e)];
      set_column(m_ge_ + 2 * e, c.coeffs, -c.rhs);
      set_column(m_ge_ + 2 * e + 1, -c.coeffs, c.rhs);
    }
    tableau_(n_, slack_) = 1;
    for (Index i = 0; i < n_; ++i) {
      tableau_(i, first_artificial_ + i) = 1;
      basis_[static_cast<std::size_t>(i)] = first_artificial_ + i;
    }
    basis_[static_cast<std::size_t>(n_)] = slack_;
    tableau_(n_, rhs_) = 1;
  }

  Feasibility<Scalar> solve() {
    drive_out_artificials();
    optimise();

    Feasibility<Scalar> out;
    const Scalar best = tableau_(objective_, rhs_);  // = max b.y
    if (best > 0) {
      out.certificate = certificate(best);
      return out;
    }
    Vector<Scalar> x(n_);
    for (Index i = 0; i < n_; ++i) x(i) = tableau_(objective_, first_artificial_ + i);
    if (!system_.satisfied_by(x)) throw std::logic_error("ratsolve: witness failed exact verification");
    out.witness = std::move(x);
    return out;
  }

 private:
  // The objective row stores reduced costs of  min -b.y; its rhs entry holds
  // the current value of b.y.
  void set_column(Index col, const Vector<Scalar>& coeffs, const Scalar& cost) {
    for (Index i = 0; i < n_; ++i) tableau_(i, col) = coeffs(i);
    tableau_(n_, col) = 1;
    tableau_(objective_, col) = cost;
  }

  void pivot(Index row, Index col) {
    const Scalar p = tableau_(row, col);
    tableau_.row(row) /= p;
    for (Index k = 0; k < tableau_.rows(); ++k) {
      if (k == row) continue;
      const Scalar f = tableau_(k, col);
      if (f != 0) tableau_.row(k) -= f * tableau_.row(row);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  bool is_artificial(Index col) const { return col >= first_artificial_ && col < rhs_; }

  // Artificials start basic at level 0. Any non-zero entry in a real column can
  // replace them without changing the right-hand side; rows with none are
  // redundant and keep their artificial forever (its column never changes).
  void drive_out_artificials() {
    for (Index i = 0; i < n_; ++i) {
      if (!is_artificial(basis_[static_cast<std::size_t>(i)])) continue;
      for (Index j = 0; j <= slack_; ++j) {
        if (tableau_(i, j) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  void optimise() {
    while (true) {
      Index entering = -1;
      for (Index j = 0; j <= slack_; ++j) {
        if (tableau_(objective_, j) < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return;

      Index leaving = -1;
      Scalar best_ratio;
      for (Index k = 0; k < objective_; ++k) {
        const Scalar& a = tableau_(k, entering);
        if (a <= 0) continue;
        Scalar ratio = tableau_(k, rhs_) / a;
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[static_cast<std::size_t>(k)] < basis_[static_cast<std::size_t>(leaving)])) {
          leaving = k;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving < 0) throw std::logic_error("ratsolve: normalised alternative system reported unbounded");
      pivot(leaving, entering);
    }
  }

  Certificate<Scalar> certificate(const Scalar& gap) const {
    Vector<Scalar> y = Vector<Scalar>::Zero(slack_);
    for (Index k = 0; k < objective_; ++k) {
      const Index col = basis_[static_cast<std::size_t>(k)];
      if (col < slack_) y(col) = tableau_(k, rhs_);
    }
    Certificate<Scalar> cert;
    cert.ge_multipliers = y.head(m_ge_);
    cert.eq_multipliers.resize(m_eq_);
    for (Index e = 0; e < m_eq_; ++e) cert.eq_multipliers(e) = y(m_ge_ + 2 * e) - y(m_ge_ + 2 * e + 1);
    cert.gap = gap;

    // Rescale so the smallest non-zero multiplier has magnitude 1.
    std::optional<Scalar> smallest;
    auto consider = [&](const Scalar& v) {
      if (v == 0) return;
      Scalar a = v < 0 ? Scalar(-v) : v;
      if (!smallest || a < *smallest) smallest = a;
    };
    for (Index i = 0; i < cert.ge_multipliers.size(); ++i) consider(cert.ge_multipliers(i));
    for (Index i = 0; i < cert.eq_multipliers.size(); ++i) consider(cert.eq_multipliers(i));
    if (smallest) {
      cert.ge_multipliers /= *smallest;
      cert.eq_multipliers /= *smallest;
      cert.gap /= *smallest;
    }
    return cert;
  }

  const LinearSystem<Scalar>& system_;
  Index n_, m_ge_, m_eq_, slack_, first_artificial_, rhs_, objective_;
  Matrix<Scalar> tableau_;
  std::vector<Index> basis_;
};

}  // namespace detail

/// Decides feasibility exactly. Returns a point satisfying every constraint or
/// a certificate accepted by verify(). Scalar must be an exact ordered field.
template <typename Scalar>
Feasibility<Scalar> feasible(const LinearSystem<Scalar>& system) {
  return detail::AlternativeSimplex<Scalar>(system).solve();
}

}  // namespace symbiont::ratsolve
