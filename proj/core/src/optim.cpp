#include "opinfo/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "internal.hpp"

namespace opinfo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotEps = 1e-11;

// Canonical-form tableau: rows 0..m-1 are constraints, the last column is the
// right-hand side, `obj` holds reduced costs (maximization).
struct Tableau {
  Mat t;
  Vec obj;
  double obj_rhs = 0.0;
  std::vector<int> basis;
  int iterations = 0;

  int rows() const { return static_cast<int>(t.rows()); }
  int rhs() const { return static_cast<int>(t.cols()) - 1; }

  void set_cost(const Vec& c) {
    obj = Vec::Zero(rhs());
    obj.head(c.size()) = c;
    obj_rhs = 0.0;
    for (int i = 0; i < rows(); ++i) {
      const double cb = obj(basis[static_cast<size_t>(i)]);
      if (cb != 0.0) {
        obj -= cb * t.row(i).head(rhs()).transpose();
        obj_rhs -= cb * t(i, rhs());
      }
    }
  }

  void pivot(int r, int e) {
    t.row(r) /= t(r, e);
    for (int i = 0; i < rows(); ++i) {
      if (i != r && t(i, e) != 0.0) t.row(i) -= t(i, e) * t.row(r);
    }
    const double oe = obj(e);
    if (oe != 0.0) {
      obj -= oe * t.row(r).head(rhs()).transpose();
      obj_rhs -= oe * t(r, rhs());
    }
    basis[static_cast<size_t>(r)] = e;
    ++iterations;
  }

  // Bland's rule; columns >= allowed never enter. Returns false if unbounded.
  bool run(int allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed; ++j) {
        if (obj(j) > kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = kInf;
      for (int i = 0; i < rows(); ++i) {
        if (t(i, enter) > kPivotEps) {
          const double ratio = t(i, rhs()) / t(i, enter);
          if (ratio < best - 1e-14 ||
              (ratio <= best + 1e-14 && leave >= 0 && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
            best = std::min(best, ratio);
            leave = i;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

// How each original variable maps onto nonnegative ones.
struct VarMap {
  enum Kind { shifted, flipped, split } kind = shifted;
  int col = 0;
  double offset = 0.0;
};

}  // namespace

void SearchConfig::validate() const {
  if (restarts < 1 || max_evals < 1 || tolerance <= 0.0) {
    throw ValidationError("search config: restarts, max_evals and tolerance must be positive");
  }
}

LpResult lp_solve(const LinearProgram& p, int max_vars) {
  const int n = static_cast<int>(p.objective.size());
  const int m = static_cast<int>(p.a_ub.rows());
  if (n > max_vars) throw DimensionError("lp_solve: too many variables");
  if (m > 0 && p.a_ub.cols() != n) throw DimensionError("lp_solve: constraint matrix width");
  if (p.b_ub.size() != m) throw DimensionError("lp_solve: constraint bound length");
  if ((p.lower.size() != 0 && p.lower.size() != n) || (p.upper.size() != 0 && p.upper.size() != n)) {
    throw DimensionError("lp_solve: box bound length");
  }
  const Vec lower = p.lower.size() ? p.lower : Vec::Zero(n);
  const Vec upper = p.upper.size() ? p.upper : Vec::Constant(n, kInf);

  LpResult result;
  for (int j = 0; j < n; ++j) {
    if (lower(j) > upper(j)) return result;
  }

  // Substitute x_j = offset + col or offset - col, or x_j = col+ - col-.
  std::vector<VarMap> maps(static_cast<size_t>(n));
  int cols = 0;
  for (int j = 0; j < n; ++j) {
    auto& vm = maps[static_cast<size_t>(j)];
    vm.col = cols;
    if (std::isfinite(lower(j))) {
      vm.kind = VarMap::shifted;
      vm.offset = lower(j);
      cols += 1;
    } else if (std::isfinite(upper(j))) {
      vm.kind = VarMap::flipped;
      vm.offset = upper(j);
      cols += 1;
    } else {
      vm.kind = VarMap::split;
      cols += 2;
    }
  }
  std::vector<int> capped;
  for (int j = 0; j < n; ++j) {
    if (maps[static_cast<size_t>(j)].kind == VarMap::shifted && std::isfinite(upper(j))) capped.push_back(j);
  }
  const int rows = m + static_cast<int>(capped.size());
  Mat a = Mat::Zero(rows, cols);
  Vec b(rows);
  Vec c = Vec::Zero(cols);
  auto place = [&](int row, int j, double coef) {
    const auto& vm = maps[static_cast<size_t>(j)];
    switch (vm.kind) {
      case VarMap::shifted: a(row, vm.col) += coef; return coef * vm.offset;
      case VarMap::flipped: a(row, vm.col) -= coef; return coef * vm.offset;
      case VarMap::split:
        a(row, vm.col) += coef;
        a(row, vm.col + 1) -= coef;
        return 0.0;
    }
    return 0.0;
  };
  for (int i = 0; i < m; ++i) {
    double shift = 0.0;
    for (int j = 0; j < n; ++j) {
      if (p.a_ub(i, j) != 0.0) shift += place(i, j, p.a_ub(i, j));
    }
    b(i) = p.b_ub(i) - shift;
  }
  for (size_t k = 0; k < capped.size(); ++k) {
    const int j = capped[k];
    a(m + static_cast<int>(k), maps[static_cast<size_t>(j)].col) = 1.0;
    b(m + static_cast<int>(k)) = upper(j) - lower(j);
  }
  for (int j = 0; j < n; ++j) {
    const auto& vm = maps[static_cast<size_t>(j)];
    const double cj = p.objective(j);
    switch (vm.kind) {
      case VarMap::shifted: c(vm.col) += cj; break;
      case VarMap::flipped: c(vm.col) -= cj; break;
      case VarMap::split: c(vm.col) += cj; c(vm.col + 1) -= cj; break;
    }
  }

  // Columns: structural | slacks | artificials.
  std::vector<int> needs_art;
  for (int i = 0; i < rows; ++i) {
    if (b(i) < 0) needs_art.push_back(i);
  }
  const int arts = static_cast<int>(needs_art.size());
  const int total = cols + rows + arts;
  Tableau tab;
  tab.t = Mat::Zero(rows, total + 1);
  tab.basis.assign(static_cast<size_t>(rows), 0);
  int art = 0;
  for (int i = 0; i < rows; ++i) {
    const double sign = b(i) < 0 ? -1.0 : 1.0;
    tab.t.row(i).head(cols) = sign * a.row(i);
    tab.t(i, cols + i) = sign;
    tab.t(i, total) = sign * b(i);
    if (sign < 0) {
      tab.t(i, cols + rows + art) = 1.0;
      tab.basis[static_cast<size_t>(i)] = cols + rows + art;
      ++art;
    } else {
      tab.basis[static_cast<size_t>(i)] = cols + i;
    }
  }

  if (arts > 0) {
    Vec phase1 = Vec::Zero(total);
    phase1.tail(arts).setConstant(-1.0);
    tab.set_cost(phase1);
    tab.run(total);
    if (-tab.obj_rhs < -1e-9) {
      result.iterations = tab.iterations;
      return result;
    }
    // Drive remaining zero-level artificials out of the basis.
    for (int i = 0; i < rows; ++i) {
      if (tab.basis[static_cast<size_t>(i)] < cols + rows) continue;
      for (int j = 0; j < cols + rows; ++j) {
        if (std::abs(tab.t(i, j)) > kPivotEps) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  Vec phase2 = Vec::Zero(total);
  phase2.head(cols) = c;
  tab.set_cost(phase2);
  result.iterations = tab.iterations;
  if (!tab.run(cols + rows)) {
    result.status = LpStatus::unbounded;
    result.iterations = tab.iterations;
    return result;
  }
  Vec y = Vec::Zero(total);
  for (int i = 0; i < rows; ++i) y(tab.basis[static_cast<size_t>(i)]) = tab.t(i, total);
  result.x.resize(n);
  for (int j = 0; j < n; ++j) {
    const auto& vm = maps[static_cast<size_t>(j)];
    switch (vm.kind) {
      case VarMap::shifted: result.x(j) = vm.offset + y(vm.col); break;
      case VarMap::flipped: result.x(j) = vm.offset - y(vm.col); break;
      case VarMap::split: result.x(j) = y(vm.col) - y(vm.col + 1); break;
    }
  }
  result.status = LpStatus::optimal;
  result.value = p.objective.dot(result.x);
  result.iterations = tab.iterations;
  return result;
}

LocalResult nelder_mead(const ParamObjective& f, std::vector<double> x0, int max_evals, double tolerance,
                        double step) {
  const size_t n = x0.size();
  LocalResult out;
  auto eval = [&](const std::vector<double>& x) {
    ++out.evaluations;
    const double v = f(x);
    return std::isnan(v) ? kInf : v;
  };
  if (n == 0) {
    out.value = eval(x0);
    out.x = x0;
    return out;
  }
  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
  for (size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<size_t> order(n + 1);
  auto combine = [n](const std::vector<double>& a, const std::vector<double>& b, double t) {
    std::vector<double> r(n);
    for (size_t k = 0; k < n; ++k) r[k] = a[k] + t * (b[k] - a[k]);
    return r;
  };
  while (out.evaluations < max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) { return vals[i] < vals[j]; });
    const size_t best = order.front(), worst = order.back(), second = order[n - 1];
    if (std::abs(vals[worst] - vals[best]) <= tolerance * (1.0 + std::abs(vals[best]))) {
      double spread = 0.0;
      for (size_t i = 0; i <= n; ++i) {
        for (size_t k = 0; k < n; ++k) spread = std::max(spread, std::abs(pts[i][k] - pts[best][k]));
      }
      if (spread < 1e-8 || vals[worst] == vals[best]) break;
    }
    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / static_cast<double>(n);
    }
    const auto refl = combine(centroid, pts[worst], -1.0);
    const double fr = eval(refl);
    if (fr < vals[best]) {
      const auto expd = combine(centroid, pts[worst], -2.0);
      const double fe = eval(expd);
      if (fe < fr) {
        pts[worst] = expd;
        vals[worst] = fe;
      } else {
        pts[worst] = refl;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = refl;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const auto contr = outside ? combine(centroid, refl, 0.5) : combine(centroid, pts[worst], 0.5);
    const double fc = eval(contr);
    if (fc < std::min(fr, vals[worst])) {
      pts[worst] = contr;
      vals[worst] = fc;
      continue;
    }
    for (size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      pts[i] = combine(pts[best], pts[i], 0.5);
      vals[i] = eval(pts[i]);
    }
  }
  const auto it = std::min_element(vals.begin(), vals.end());
  out.value = *it;
  out.x = pts[static_cast<size_t>(it - vals.begin())];
  return out;
}

namespace {

std::vector<double> normal_start(size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.5);
  std::vector<double> x(n);
  for (auto& v : x) v = normal(rng);
  return x;
}

ObservationTest fit(ObservationTest t, int outcomes) {
  while (static_cast<int>(t.effects.size()) < outcomes) t.effects.push_back({t.system, Vec::Zero(t.system.dim())});
  while (static_cast<int>(t.effects.size()) > outcomes) {
    const EffectVec last = t.effects.back();
    t.effects.pop_back();
    t.effects.back() = t.effects.back() + last;
  }
  return t;
}

std::vector<double> softmax(std::span<const double> z) {
  std::vector<double> out(z.begin(), z.end());
  if (out.empty()) return out;
  const double m = *std::max_element(out.begin(), out.end());
  double s = 0.0;
  for (auto& v : out) s += (v = std::exp(v - m));
  for (auto& v : out) v /= s;
  return out;
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

TestSearchResult minimize_over_tests(const TestObjective& objective, const TheoryModel& model, int outcomes,
                                     const SearchConfig& cfg, TestFamily family,
                                     std::span<const ObservationTest> extra_seeds) {
  if (outcomes < 1) throw ValidationError("minimize_over_tests: outcomes must be >= 1");
  cfg.validate();
  TestSearchResult best;
  best.value = kInf;
  auto consider = [&](const ObservationTest& t, double v) {
    if (v < best.value) {
      best.value = v;
      best.test = t;
    }
  };
  for (const auto& seed : model.canonical_tests(outcomes)) {
    consider(seed, objective(seed));
    ++best.evaluations;
  }
  for (const auto& seed : extra_seeds) {
    const auto t = fit(seed, outcomes);
    consider(t, objective(t));
    ++best.evaluations;
  }
  if (outcomes == 1) return best;
  const bool atomic = family == TestFamily::atomic;
  const int k = atomic ? model.atomic_test_param_count(outcomes) : model.test_param_count(outcomes);
  auto build = [&](std::span<const double> x) {
    return atomic ? model.atomic_test_from_params(x, outcomes) : model.test_from_params(x, outcomes);
  };
  const ParamObjective f = [&](std::span<const double> x) { return objective(build(x)); };
  for (int r = 0; r < cfg.restarts; ++r) {
    auto rng = detail::make_engine(cfg.seed, static_cast<std::uint64_t>(r) + 1);
    const auto local = nelder_mead(f, normal_start(static_cast<size_t>(k), rng), cfg.max_evals, cfg.tolerance);
    best.evaluations += local.evaluations;
    consider(build(local.x), local.value);
  }
  return best;
}

PairSearchResult maximize_over_ensembles_and_tests(const PairObjective& objective, const TheoryModel& model,
                                                   SearchSizes sizes, const SearchConfig& cfg) {
  if (sizes.ensemble < 1 || sizes.outcomes < 1) throw ValidationError("ensemble and test sizes must be >= 1");
  cfg.validate();
  PairSearchResult best;
  best.value = -kInf;
  auto consider = [&](const Ensemble& e, const ObservationTest& t, double v) {
    if (v > best.value) {
      best.value = v;
      best.ensemble = e;
      best.test = t;
    }
  };
  for (const auto& [ens, test] : model.seed_pairs(sizes.ensemble, sizes.outcomes)) {
    consider(ens, test, objective(ens, test));
    ++best.evaluations;
  }
  const int n = sizes.ensemble;
  const int sp = model.state_param_count();
  const int tp = model.test_param_count(sizes.outcomes);
  auto build = [&](std::span<const double> x) {
    const auto w = softmax(x.first(static_cast<size_t>(n)));
    Ensemble e{model.system(), {}};
    for (int i = 0; i < n; ++i) {
      e.members.push_back(w[static_cast<size_t>(i)] *
                          model.state_from_params(x.subspan(static_cast<size_t>(n + i * sp), static_cast<size_t>(sp))));
    }
    return std::make_pair(e, model.test_from_params(x.subspan(static_cast<size_t>(n + n * sp)), sizes.outcomes));
  };
  const ParamObjective f = [&](std::span<const double> x) {
    const auto [e, t] = build(x);
    return -objective(e, t);
  };
  for (int r = 0; r < cfg.restarts; ++r) {
    auto rng = detail::make_engine(cfg.seed, static_cast<std::uint64_t>(r) + 1);
    const auto local = nelder_mead(f, normal_start(static_cast<size_t>(n + n * sp + tp), rng), cfg.max_evals,
                                   cfg.tolerance);
    best.evaluations += local.evaluations;
    const auto [e, t] = build(local.x);
    consider(e, t, -local.value);
  }
  return best;
}

Ensemble refinement_from_test(const StateVec& rho, const ObservationTest& grouping, double t) {
  const auto& label = rho.system;
  Ensemble ens{label, {}};
  if (label.all_quantum()) {
    const CMat root = psd_sqrt(density_matrix(rho));
    for (const auto& a : grouping.effects) {
      ens.members.push_back({label, detail::to_coords(label, root * detail::to_operator(label, a.coords) * root)});
    }
    return ens;
  }
  if (label.all_classical()) {
    for (const auto& a : grouping.effects) ens.members.push_back({label, rho.coords.cwiseProduct(a.coords)});
    return ens;
  }
  if (label.is_atomic() && label.theory() == TheoryId::boxworld) {
    if (grouping.system.dim() != 4 || !grouping.system.all_classical()) {
      throw DimensionError("squit refinements are grouped by a test on classical:4");
    }
    const auto w = squit_corner_weights(rho, t);
    const std::array<std::array<double, 2>, 4> corners{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    for (const auto& a : grouping.effects) {
      StateVec m = zero_state(label);
      for (int c = 0; c < 4; ++c) {
        const auto cc = static_cast<size_t>(c);
        m = m + (a.coords(c) * w[cc]) * squit_state(corners[cc][0], corners[cc][1]);
      }
      ens.members.push_back(m);
    }
    return ens;
  }
  throw UnsupportedFeature("refinements of " + label.to_string() + " are not parameterized");
}

PairSearchResult maximize_over_refinements_and_tests(const PairObjective& objective, const StateVec& rho,
                                                     SearchSizes sizes, const SearchConfig& cfg) {
  if (sizes.ensemble < 1 || sizes.outcomes < 1) throw ValidationError("ensemble and test sizes must be >= 1");
  cfg.validate();
  const auto& label = rho.system;
  const bool squit = label.is_atomic() && label.theory() == TheoryId::boxworld;
  const TheoryPtr sys_model = model_for(label);
  const TheoryPtr group_model = squit ? classical_theory(4) : sys_model;

  PairSearchResult best;
  best.value = -kInf;
  auto consider = [&](const Ensemble& e, const ObservationTest& t, double v) {
    if (v > best.value) {
      best.value = v;
      best.ensemble = e;
      best.test = t;
    }
  };

  // Seeds: the spectral (or corner) decomposition read out by its own basis.
  std::vector<std::pair<Ensemble, ObservationTest>> seeds;
  if (label.all_quantum()) {
    const auto eig = hermitian_eigen(density_matrix(rho));
    ObservationTest basis{label, {}};
    for (int k = static_cast<int>(eig.values.size()) - 1; k >= 0; --k) {
      const CVec v = eig.vectors.col(k);
      basis.effects.push_back({label, detail::to_coords(label, v * v.adjoint())});
    }
    seeds.emplace_back(refinement_from_test(rho, fit(basis, sizes.ensemble)), fit(basis, sizes.outcomes));
  } else if (label.all_classical()) {
    const auto reading = sys_model->canonical_tests(label.dim()).front();
    seeds.emplace_back(refinement_from_test(rho, fit(reading, sizes.ensemble)), fit(reading, sizes.outcomes));
  } else if (squit) {
    const auto reading = group_model->canonical_tests(4).front();
    for (double t : {0.0, 1.0}) {
      const auto ens = refinement_from_test(rho, fit(reading, sizes.ensemble), t);
      for (const auto& test : sys_model->canonical_tests(sizes.outcomes)) seeds.emplace_back(ens, test);
    }
  }
  for (const auto& [e, t] : seeds) {
    consider(e, t, objective(e, t));
    ++best.evaluations;
  }

  const int gp = group_model->test_param_count(sizes.ensemble);
  const int tp = sys_model->test_param_count(sizes.outcomes);
  auto build = [&](std::span<const double> x) {
    const auto grouping = group_model->test_from_params(x.first(static_cast<size_t>(gp)), sizes.ensemble);
    const double t = sigmoid(x[static_cast<size_t>(gp)]);
    return std::make_pair(refinement_from_test(rho, grouping, t),
                          sys_model->test_from_params(x.subspan(static_cast<size_t>(gp + 1)), sizes.outcomes));
  };
  const ParamObjective f = [&](std::span<const double> x) {
    const auto [e, t] = build(x);
    return -objective(e, t);
  };
  for (int r = 0; r < cfg.restarts; ++r) {
    auto rng = detail::make_engine(cfg.seed, static_cast<std::uint64_t>(r) + 1);
    const auto local =
        nelder_mead(f, normal_start(static_cast<size_t>(gp + 1 + tp), rng), cfg.max_evals, cfg.tolerance);
    best.evaluations += local.evaluations;
    const auto [e, t] = build(local.x);
    consider(e, t, -local.value);
  }
  return best;
}

}  // namespace opinfo
