#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "gedsim/error.hpp"
#include "gedsim/ilp_model.hpp"
#include "gedsim/rational.hpp"

namespace gedsim {

enum class LpStatus { Optimal, Infeasible, NumericalFailure };

enum class Arithmetic {
  Float,           // double simplex
  Exact,           // double simplex, certified in rationals; rational simplex if that fails
  RationalSimplex  // rational simplex only
};

struct LpOptions {
  Arithmetic arithmetic = Arithmetic::Float;
  /// Non-improving pivots tolerated before Bland's rule takes over; 0 means 10 * rows.
  std::size_t stall_limit = 0;
  /// Hard cap on simplex iterations per phase; 0 picks a size-based default.
  std::size_t iteration_limit = 0;
};

struct Fixing {
  std::int32_t var;
  Cost value;
};

struct LpSolution {
  LpStatus status = LpStatus::NumericalFailure;
  std::vector<double> primal;
  /// One per row, sign-normalised so that <= rows carry nonnegative duals
  /// (u, v, r, s, t for FORI).
  std::vector<double> duals;
  /// c_j + sum_i dual_i a_ij; nonnegative unless the variable sits at its upper bound.
  std::vector<double> reduced_costs;
  /// Primal objective including the constant K.
  double objective = 0;
  /// K - b.dual + bound terms, evaluated from the reported duals.
  double dual_objective = 0;
  bool exact = false;
  Rational exact_objective;
  /// For Infeasible: a row whose phase-one artificial stayed positive.
  std::optional<std::size_t> infeasible_row;
  std::size_t iterations = 0;
  bool used_bland = false;
};

namespace detail {

template <class T>
struct Tolerance {
  static constexpr double value = 1e-9;
  static T eps() { return value; }
  static bool is_zero(const T& x) { return std::fabs(x) <= 1e-12; }
  static bool negative(const T& x) { return x < -value; }
  static bool positive(const T& x) { return x > value; }
  static T clean(T x) { return std::fabs(x) < 1e-13 ? T(0) : x; }
};

template <>
struct Tolerance<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool negative(const Rational& x) { return x < 0; }
  static bool positive(const Rational& x) { return x > 0; }
  static Rational clean(Rational x) { return x; }
  static Rational eps() { return 0; }
};

/// Bounded-variable primal simplex on a dense tableau. Columns are the
/// structural variables, one slack per row and phase-one artificials.
template <class T>
class BoundedSimplex {
  using Tol = Tolerance<T>;

 public:
  BoundedSimplex(const IlpModel& model, std::span<const Fixing> fixings, const LpOptions& options)
      : model_(model), n_(model.num_vars()), m_(model.num_rows()) {
    stall_limit_ = options.stall_limit ? options.stall_limit : std::max<std::size_t>(10 * m_, 50);

    lo_.assign(n_ + m_, T(0));
    up_.assign(n_ + m_, T(0));
    has_up_.assign(n_ + m_, 1);
    for (std::size_t j = 0; j < n_; ++j) {
      lo_[j] = T(model.vars[j].lower);
      up_[j] = T(model.vars[j].upper);
    }
    for (const auto& f : fixings) {
      const auto j = static_cast<std::size_t>(f.var);
      if (j >= n_) throw Error(ErrorCode::DimensionMismatch, "fixing refers to variable " + std::to_string(f.var));
      if (T(f.value) < lo_[j] || T(f.value) > up_[j]) bounds_conflict_ = true;
      lo_[j] = up_[j] = T(f.value);
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (lo_[j] > up_[j]) bounds_conflict_ = true;
    }
    if (!bounds_conflict_) loosen_implied_bounds();
    for (std::size_t i = 0; i < m_; ++i) has_up_[n_ + i] = model.rows[i].relation == Relation::Equal;

    // Structural columns start at their lower bounds; rows the slack cannot
    // absorb get an artificial.
    std::vector<T> residual(m_);
    std::vector<int> sign(m_, 0);
    std::size_t n_art = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      T act(0);
      for (const auto& t : model.rows[i].terms) act += T(t.coef) * lo_[static_cast<std::size_t>(t.var)];
      residual[i] = T(model.rows[i].rhs) - act;
      const bool eq = model.rows[i].relation == Relation::Equal;
      const bool slack_ok = eq ? residual[i] == T(0) : residual[i] >= T(0);
      if (!slack_ok) {
        sign[i] = residual[i] > T(0) ? 1 : -1;
        ++n_art;
      }
    }
    cols_ = n_ + m_ + n_art;
    iteration_limit_ = options.iteration_limit ? options.iteration_limit : 200 * (m_ + cols_) + 1000;
    lo_.resize(cols_, T(0));
    up_.resize(cols_, T(0));
    has_up_.resize(cols_, 0);
    x_.assign(cols_, T(0));
    at_upper_.assign(cols_, 0);
    pos_.assign(cols_, -1);
    basis_.assign(m_, 0);
    tab_.assign(m_ * cols_, T(0));
    for (std::size_t j = 0; j < n_; ++j) x_[j] = lo_[j];

    std::size_t art = n_ + m_;
    for (std::size_t i = 0; i < m_; ++i) {
      T* row = &tab_[i * cols_];
      const T s = sign[i] < 0 ? T(-1) : T(1);
      for (const auto& t : model.rows[i].terms) row[static_cast<std::size_t>(t.var)] += s * T(t.coef);
      row[n_ + i] = s;
      if (sign[i] == 0) {
        basis_[i] = n_ + i;
        x_[n_ + i] = residual[i];
      } else {
        row[art] = T(1);
        basis_[i] = art;
        x_[art] = sign[i] < 0 ? T(-residual[i]) : residual[i];
        artificials_.push_back(art);
        ++art;
      }
      pos_[basis_[i]] = static_cast<std::int64_t>(i);
    }
  }

  LpSolution solve() {
    LpSolution sol;
    if (bounds_conflict_) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    if (!artificials_.empty()) {
      std::vector<T> phase1(cols_, T(0));
      for (std::size_t a : artificials_) phase1[a] = T(1);
      if (!run(phase1, sol)) return sol;
      T infeas(0);
      std::size_t worst = m_;
      T worst_value(0);
      for (std::size_t a : artificials_) {
        infeas += x_[a];
        if (pos_[a] >= 0 && x_[a] > worst_value) {
          worst_value = x_[a];
          worst = static_cast<std::size_t>(pos_[a]);
        }
      }
      if (Tol::positive(infeas)) {
        sol.status = LpStatus::Infeasible;
        if (worst < m_) sol.infeasible_row = original_row_of(worst);
        return sol;
      }
      for (std::size_t a : artificials_) {
        has_up_[a] = 1;
        up_[a] = T(0);
        lo_[a] = T(0);
        x_[a] = T(0);
        at_upper_[a] = 0;
      }
    }
    std::vector<T> phase2(cols_, T(0));
    for (std::size_t j = 0; j < n_; ++j) phase2[j] = T(model_.objective[j]);
    if (!run(phase2, sol)) return sol;

    sol.status = LpStatus::Optimal;
    primal_.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(n_));
    for (std::size_t j = 0; j < n_; ++j) {
      if (primal_[j] < lo_[j]) primal_[j] = lo_[j];
      if (primal_[j] > up_[j]) primal_[j] = up_[j];
    }
    duals_.assign(d_.begin() + static_cast<std::ptrdiff_t>(n_), d_.begin() + static_cast<std::ptrdiff_t>(n_ + m_));
    reduced_.assign(d_.begin(), d_.begin() + static_cast<std::ptrdiff_t>(n_));
    return sol;
  }

  const std::vector<T>& primal() const { return primal_; }
  const std::vector<T>& duals() const { return duals_; }
  const std::vector<T>& reduced_costs() const { return reduced_; }
  const std::vector<T>& lower() const { return lo_; }
  const std::vector<T>& upper() const { return up_; }

 private:
  // Upper bounds already forced by the rows are loosened by one, so no optimal
  // vertex rests on them and the row duals alone certify the optimum.
  void loosen_implied_bounds() {
    std::vector<std::optional<T>> implied(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (lo_[j] == up_[j]) implied[j] = up_[j];
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& row : model_.rows) {
        // Minimum activity, with the number of unbounded contributions.
        T min_act(0);
        std::size_t open = 0;
        for (const auto& t : row.terms) {
          const auto k = static_cast<std::size_t>(t.var);
          if (t.coef > 0) {
            min_act += T(t.coef) * lo_[k];
          } else if (implied[k]) {
            min_act += T(t.coef) * *implied[k];
          } else {
            ++open;
          }
        }
        if (open > 0) continue;
        for (const auto& t : row.terms) {
          if (t.coef <= 0) continue;
          const auto k = static_cast<std::size_t>(t.var);
          const T bound = (T(row.rhs) - (min_act - T(t.coef) * lo_[k])) / T(t.coef);
          if (!implied[k] || bound < *implied[k] - Tol::eps()) {
            implied[k] = bound;
            changed = true;
          }
        }
      }
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (lo_[j] < up_[j] && implied[j] && *implied[j] <= up_[j] + Tol::eps()) up_[j] = up_[j] + T(1);
    }
  }

  // The row index a tableau row started from never changes: row i of the
  // tableau is always a combination anchored at original row i's slack.
  std::size_t original_row_of(std::size_t tableau_row) const { return tableau_row; }

  T* row(std::size_t i) { return &tab_[i * cols_]; }

  bool run(const std::vector<T>& cost, LpSolution& sol) {
    // d = cost - c_B^T B^-1 A
    d_ = cost;
    for (std::size_t i = 0; i < m_; ++i) {
      const T cb = cost[basis_[i]];
      if (Tol::is_zero(cb)) continue;
      const T* r = row(i);
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!Tol::is_zero(r[j])) d_[j] -= cb * r[j];
      }
    }
    for (std::size_t i = 0; i < m_; ++i) d_[basis_[i]] = T(0);

    bool bland = false;
    std::size_t stall = 0;
    std::vector<std::size_t> nz;
    for (std::size_t iter = 0;; ++iter) {
      if (iter % 64 == 63) refresh_basics();
      if (iter >= iteration_limit_) {
        sol.status = LpStatus::NumericalFailure;
        return false;
      }
      // Pricing.
      std::size_t q = cols_;
      T best_score(0);
      for (std::size_t j = 0; j < cols_; ++j) {
        if (pos_[j] >= 0) continue;
        if (has_up_[j] && up_[j] == lo_[j]) continue;
        T score;
        if (!at_upper_[j] && Tol::negative(d_[j])) {
          score = -d_[j];
        } else if (at_upper_[j] && Tol::positive(d_[j])) {
          score = d_[j];
        } else {
          continue;
        }
        if (bland) {
          q = j;
          break;
        }
        if (q == cols_ || score > best_score) {
          q = j;
          best_score = score;
        }
      }
      if (q == cols_) {
        refresh_basics();
        return true;
      }
      ++sol.iterations;

      const int dir = at_upper_[q] ? -1 : 1;
      // Ratio test.
      std::size_t r = m_;
      T best_theta(0);
      T best_pivot(0);
      for (std::size_t i = 0; i < m_; ++i) {
        const T alpha = row(i)[q];
        if (pivot_zero(alpha)) continue;
        const std::size_t b = basis_[i];
        const T delta = dir > 0 ? T(-alpha) : alpha;  // change of basic var per unit step
        T limit;
        if (delta < T(0)) {
          limit = (x_[b] - lo_[b]) / T(-delta);
        } else if (has_up_[b]) {
          limit = (up_[b] - x_[b]) / delta;
        } else {
          continue;
        }
        if (limit < T(0)) limit = T(0);
        const T mag = alpha < T(0) ? T(-alpha) : alpha;
        bool take;
        if (r == m_) {
          take = true;
        } else if (step_zero(T(limit - best_theta))) {
          take = better_tie(bland, i, r, mag, best_pivot);
        } else {
          take = limit < best_theta;
        }
        if (take) {
          r = i;
          best_theta = limit;
          best_pivot = mag;
        }
      }
      const bool can_flip = has_up_[q] != 0;
      const T flip = can_flip ? T(up_[q] - lo_[q]) : T(0);
      if (r == m_ && !can_flip) {
        sol.status = LpStatus::NumericalFailure;  // unbounded: impossible for 0/1 models
        return false;
      }

      const bool do_flip = can_flip && (r == m_ || flip <= best_theta);
      const T theta = do_flip ? flip : best_theta;
      if (!Tol::is_zero(theta)) {
        for (std::size_t i = 0; i < m_; ++i) {
          const T alpha = row(i)[q];
          if (Tol::is_zero(alpha)) continue;
          x_[basis_[i]] -= T(dir) * alpha * theta;
        }
      }
      if (do_flip) {
        at_upper_[q] = !at_upper_[q];
        x_[q] = at_upper_[q] ? up_[q] : lo_[q];
      } else {
        const std::size_t leaving = basis_[r];
        const T alpha = row(r)[q];
        const T delta = dir > 0 ? T(-alpha) : alpha;
        x_[q] += T(dir) * theta;
        if (delta < T(0)) {
          x_[leaving] = lo_[leaving];
          at_upper_[leaving] = 0;
        } else {
          x_[leaving] = up_[leaving];
          at_upper_[leaving] = 1;
        }
        at_upper_[q] = 0;
        pivot(r, q, nz);
        basis_[r] = q;
        pos_[q] = static_cast<std::int64_t>(r);
        pos_[leaving] = -1;
      }

      // Once engaged, Bland's rule stays on for the phase so it cannot cycle.
      if (!bland && step_zero(theta)) {
        if (++stall > stall_limit_) {
          bland = true;
          sol.used_bland = true;
        }
      } else {
        stall = 0;
      }
    }
  }

  // Recomputes basic values from the tableau, discarding float drift from
  // incremental updates. Tableau row i is sum_k tab[i][slack k] * (row k).
  void refresh_basics() {
    if constexpr (std::is_floating_point_v<T>) {
      for (std::size_t i = 0; i < m_; ++i) {
        const T* pr = &tab_[i * cols_];
        T value(0);
        for (std::size_t k = 0; k < m_; ++k) {
          if (pr[n_ + k] != T(0)) value += pr[n_ + k] * T(model_.rows[k].rhs);
        }
        for (std::size_t j = 0; j < cols_; ++j) {
          if (pos_[j] < 0 && pr[j] != T(0) && x_[j] != T(0)) value -= pr[j] * x_[j];
        }
        x_[basis_[i]] = Tol::clean(value);
      }
    }
  }

  static bool step_zero(const T& theta) {
    if constexpr (std::is_floating_point_v<T>) {
      return std::fabs(theta) <= 1e-9;
    } else {
      return theta == 0;
    }
  }

  static bool pivot_zero(const T& alpha) {
    if constexpr (std::is_floating_point_v<T>) {
      return std::fabs(alpha) <= 1e-9;
    } else {
      return alpha == 0;
    }
  }

  // Tie-break among equal step lengths: Bland picks the smallest leaving
  // column, otherwise the largest pivot magnitude wins.
  bool better_tie(bool bland, std::size_t i, std::size_t r, const T& mag, const T& best_mag) const {
    if (bland) return basis_[i] < basis_[r];
    return mag > best_mag;
  }

  void pivot(std::size_t r, std::size_t q, std::vector<std::size_t>& nz) {
    T* pr = row(r);
    const T inv = T(1) / pr[q];
    nz.clear();
    for (std::size_t j = 0; j < cols_; ++j) {
      if (Tol::is_zero(pr[j])) {
        pr[j] = T(0);
        continue;
      }
      pr[j] *= inv;
      nz.push_back(j);
    }
    pr[q] = T(1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      T* pi = row(i);
      const T f = pi[q];
      if (Tol::is_zero(f)) {
        pi[q] = T(0);
        continue;
      }
      for (std::size_t j : nz) pi[j] = Tol::clean(pi[j] - f * pr[j]);
      pi[q] = T(0);
    }
    const T f = d_[q];
    if (!Tol::is_zero(f)) {
      for (std::size_t j : nz) d_[j] = Tol::clean(d_[j] - f * pr[j]);
    }
    d_[q] = T(0);
  }

  const IlpModel& model_;
  std::size_t n_;
  std::size_t m_;
  std::size_t cols_ = 0;
  std::size_t stall_limit_ = 0;
  std::size_t iteration_limit_ = 0;
  bool bounds_conflict_ = false;

  std::vector<T> tab_;
  std::vector<T> x_;
  std::vector<T> lo_;
  std::vector<T> up_;
  std::vector<char> has_up_;
  std::vector<char> at_upper_;
  std::vector<std::int64_t> pos_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> artificials_;
  std::vector<T> d_;

  std::vector<T> primal_;
  std::vector<T> duals_;
  std::vector<T> reduced_;
};

template <class T>
double as_double(const T& v) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<double>(v);
  } else {
    return to_double(v);
  }
}

/// Lagrangian bound K - b.mu + sum_j min(l_j d_j, u_j d_j) with d = c + A^T mu.
/// Valid for any mu that is nonnegative on <= rows.
template <class T>
T dual_bound(const IlpModel& m, std::span<const T> mu, std::span<const T> lower, std::span<const T> upper,
             std::vector<T>* reduced = nullptr) {
  std::vector<T> d(m.num_vars());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = T(m.objective[j]);
  T value = T(m.constant);
  for (std::size_t i = 0; i < m.num_rows(); ++i) {
    if (mu[i] == T(0)) continue;
    value -= T(m.rows[i].rhs) * mu[i];
    for (const auto& t : m.rows[i].terms) d[static_cast<std::size_t>(t.var)] += T(t.coef) * mu[i];
  }
  for (std::size_t j = 0; j < d.size(); ++j) value += d[j] < T(0) ? T(upper[j] * d[j]) : T(lower[j] * d[j]);
  if (reduced) *reduced = std::move(d);
  return value;
}

template <class T>
bool primal_feasible(const IlpModel& m, std::span<const T> x, std::span<const T> lower, std::span<const T> upper) {
  for (std::size_t j = 0; j < m.num_vars(); ++j) {
    if (x[j] < lower[j] || x[j] > upper[j]) return false;
  }
  for (const auto& row : m.rows) {
    T act(0);
    for (const auto& t : row.terms) act += T(t.coef) * x[static_cast<std::size_t>(t.var)];
    if (row.relation == Relation::Equal ? act != T(row.rhs) : act > T(row.rhs)) return false;
  }
  return true;
}

template <class T>
LpSolution solve_with(const IlpModel& model, std::span<const Fixing> fixings, const LpOptions& options,
                      BoundedSimplex<T>** keep = nullptr) {
  BoundedSimplex<T> simplex(model, fixings, options);
  LpSolution sol = simplex.solve();
  if (sol.status != LpStatus::Optimal) return sol;
  const auto& x = simplex.primal();
  const auto& mu = simplex.duals();
  for (const auto& v : x) sol.primal.push_back(as_double(v));
  for (const auto& v : mu) sol.duals.push_back(as_double(v));
  std::vector<T> reduced;
  const T dual = dual_bound<T>(model, mu, simplex.lower(), simplex.upper(), &reduced);
  for (const auto& v : reduced) sol.reduced_costs.push_back(as_double(v));
  const T primal_obj = model.objective_value(x);
  sol.objective = as_double(primal_obj);
  sol.dual_objective = as_double(dual);
  if constexpr (!std::is_floating_point_v<T>) {
    sol.exact = primal_obj == dual;
    sol.exact_objective = primal_obj;
    if (!sol.exact) sol.status = LpStatus::NumericalFailure;
  }
  (void)keep;
  return sol;
}

inline std::vector<Rational> bounds_as_rational(const IlpModel& model, std::span<const Fixing> fixings, bool upper) {
  std::vector<Rational> out(model.num_vars());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = upper ? model.vars[j].upper : model.vars[j].lower;
  for (const auto& f : fixings) out[static_cast<std::size_t>(f.var)] = f.value;
  return out;
}

// Rounds a float optimum to nearby rationals and checks primal feasibility and
// zero duality gap exactly. Success proves the rounded value optimal.
inline bool certify(const IlpModel& model, std::span<const Fixing> fixings, LpSolution& sol) {
  const auto lower = bounds_as_rational(model, fixings, false);
  const auto upper = bounds_as_rational(model, fixings, true);
  std::vector<Rational> x(model.num_vars()), mu(model.num_rows());
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = rationalize(sol.primal[j]);
    if (x[j] < lower[j]) x[j] = lower[j];
    if (x[j] > upper[j]) x[j] = upper[j];
  }
  for (std::size_t i = 0; i < mu.size(); ++i) {
    mu[i] = rationalize(sol.duals[i]);
    if (model.rows[i].relation == Relation::LessEqual && mu[i] < 0) mu[i] = 0;
  }
  if (!primal_feasible<Rational>(model, x, lower, upper)) return false;
  const Rational primal_obj = model.objective_value(x);
  const Rational dual = dual_bound<Rational>(model, mu, lower, upper);
  if (primal_obj != dual) return false;
  sol.exact = true;
  sol.exact_objective = primal_obj;
  sol.objective = to_double(primal_obj);
  sol.dual_objective = to_double(dual);
  return true;
}

}  // namespace detail

/// LP relaxation of a 0/1 model (x in [lower, upper], fixings pin variables).
inline LpSolution lp_solve(const IlpModel& model, std::span<const Fixing> fixings = {}, const LpOptions& options = {}) {
  switch (options.arithmetic) {
    case Arithmetic::Float:
      return detail::solve_with<double>(model, fixings, options);
    case Arithmetic::RationalSimplex:
      return detail::solve_with<Rational>(model, fixings, options);
    case Arithmetic::Exact: {
      LpSolution sol = detail::solve_with<double>(model, fixings, options);
      if (sol.status == LpStatus::Optimal && detail::certify(model, fixings, sol)) return sol;
      return detail::solve_with<Rational>(model, fixings, options);
    }
  }
  return {};
}

/// Checks a dual vector against the dual of the LP relaxation: duals on <=
/// rows nonnegative, every dual row -A^T mu <= c satisfied (no bound duals),
/// the primal point feasible, and both objectives equal.
inline bool check_dual_certificate(const IlpModel& model, std::span<const Rational> primal, std::span<const Rational> dual,
                                   std::span<const Fixing> fixings = {}) {
  if (dual.size() != model.num_rows()) {
    throw Error(ErrorCode::DimensionMismatch, "dual has " + std::to_string(dual.size()) + " entries for " +
                                                  std::to_string(model.num_rows()) + " rows");
  }
  if (primal.size() != model.num_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "primal has " + std::to_string(primal.size()) + " entries for " +
                                                  std::to_string(model.num_vars()) + " variables");
  }
  for (std::size_t i = 0; i < dual.size(); ++i) {
    if (model.rows[i].relation == Relation::LessEqual && dual[i] < 0) return false;
  }
  const auto lower = detail::bounds_as_rational(model, fixings, false);
  const auto upper = detail::bounds_as_rational(model, fixings, true);
  std::vector<Rational> reduced;
  const Rational dual_obj = detail::dual_bound<Rational>(model, dual, lower, upper, &reduced);
  for (std::size_t j = 0; j < reduced.size(); ++j) {
    // Without bound duals only variables pinned from below may have a negative reduced cost.
    if (reduced[j] < 0 && lower[j] != upper[j]) return false;
  }
  if (!detail::primal_feasible<Rational>(model, primal, lower, upper)) return false;
  return model.objective_value(primal) == dual_obj;
}

inline bool check_dual_certificate(const IlpModel& model, std::span<const double> primal, std::span<const double> dual,
                                   std::span<const Fixing> fixings = {}) {
  std::vector<Rational> x, mu;
  for (double v : primal) x.push_back(rationalize(v));
  for (double v : dual) mu.push_back(rationalize(v));
  return check_dual_certificate(model, std::span<const Rational>(x), std::span<const Rational>(mu), fixings);
}

}  // namespace gedsim
