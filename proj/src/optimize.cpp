// Copyright 2026 The vqebench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqebench/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "vqebench/errors.hpp"

namespace vqebench {
namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

bool relative_change_small(double before, double after, double tol) {
  return std::abs(before - after) <= tol * std::abs(after);
}

}  // namespace

std::string to_string(OptimizerKind k) {
  return k == OptimizerKind::NelderMead ? "nelder_mead" : "lbfgs";
}

OptimizerKind parse_optimizer(const std::string& name) {
  if (name == "nelder_mead" || name == "nm" || name == "nelder-mead") return OptimizerKind::NelderMead;
  if (name == "lbfgs" || name == "l-bfgs" || name == "l_bfgs") return OptimizerKind::Lbfgs;
  throw InputError("unknown optimizer '" + name + "' (expected nelder_mead or lbfgs)");
}

Objective::Objective(std::size_t dimension, Function fn)
    : dimension_(dimension), fn_(std::move(fn)) {}

double Objective::operator()(std::span<const double> theta) {
  if (theta.size() != dimension_) throw DimensionError("objective called with wrong dimension");
  ++evaluations_;
  return fn_(theta);
}

std::vector<double> central_difference_gradient(Objective& obj, std::span<const double> theta,
                                                double h) {
  if (!(h > 0.0)) throw ContractError("finite-difference step must be positive");
  std::vector<double> probe(theta.begin(), theta.end());
  std::vector<double> grad(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    probe[k] = theta[k] + h;
    const double up = obj(probe);
    probe[k] = theta[k] - h;
    const double down = obj(probe);
    probe[k] = theta[k];
    grad[k] = (up - down) / (2.0 * h);
  }
  return grad;
}

OptimizationResult minimize_nelder_mead(Objective& obj, std::vector<double> theta0,
                                        const NelderMeadOptions& opts) {
  const std::size_t n = theta0.size();
  if (n == 0) throw ContractError("minimize_nelder_mead: dimension must be >= 1");
  if (n != obj.dimension()) throw DimensionError("theta0 does not match objective dimension");
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

  const std::size_t start_evals = obj.evaluations();
  auto budget_left = [&] { return obj.evaluations() - start_evals < opts.max_evaluations; };

  std::vector<std::vector<double>> x(n + 1, theta0);
  std::vector<double> f(n + 1);
  for (std::size_t i = 1; i <= n; ++i) x[i][i - 1] += opts.initial_step;
  for (std::size_t i = 0; i <= n; ++i) f[i] = obj(x[i]);

  OptimizationResult res;
  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return f[a] < f[b]; });
    std::vector<std::vector<double>> xs(n + 1);
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      xs[i] = std::move(x[order[i]]);
      fs[i] = f[order[i]];
    }
    x = std::move(xs);
    f = std::move(fs);
  };

  auto diameter = [&] {
    double diam = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = 0; k < n; ++k) diam = std::max(diam, std::abs(x[i][k] - x[0][k]));
    return diam;
  };
  auto collapsed = [&](double diam) {
    double scale = 1.0;
    for (double v : x[0]) scale = std::max(scale, std::abs(v));
    return diam <= 1e-14 * scale;
  };

  sort_simplex();
  std::vector<double> centroid(n), trial(n), second(n);
  while (true) {
    const double spread = f[n] - f[0];
    const double diam = diameter();
    const bool flat = spread <= opts.tol_rel_energy * std::abs(f[0]) && diam <= opts.x_tolerance;
    if (flat || spread == 0.0 || collapsed(diam)) {
      res.converged = true;
      break;
    }
    if (!budget_left()) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += x[i][k] / static_cast<double>(n);

    for (std::size_t k = 0; k < n; ++k) trial[k] = centroid[k] + kReflect * (centroid[k] - x[n][k]);
    const double fr = obj(trial);

    bool shrink = false;
    if (fr < f[0]) {
      for (std::size_t k = 0; k < n; ++k) second[k] = centroid[k] + kExpand * (trial[k] - centroid[k]);
      const double fe = obj(second);
      if (fe < fr) {
        x[n] = second;
        f[n] = fe;
      } else {
        x[n] = trial;
        f[n] = fr;
      }
    } else if (fr < f[n - 1]) {
      x[n] = trial;
      f[n] = fr;
    } else if (fr < f[n]) {
      for (std::size_t k = 0; k < n; ++k) second[k] = centroid[k] + kContract * (trial[k] - centroid[k]);
      const double fc = obj(second);
      if (fc <= fr) {
        x[n] = second;
        f[n] = fc;
      } else {
        shrink = true;
      }
    } else {
      for (std::size_t k = 0; k < n; ++k) second[k] = centroid[k] + kContract * (x[n][k] - centroid[k]);
      const double fc = obj(second);
      if (fc < f[n]) {
        x[n] = second;
        f[n] = fc;
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t k = 0; k < n; ++k) x[i][k] = x[0][k] + kShrink * (x[i][k] - x[0][k]);
        f[i] = obj(x[i]);
      }
    }
    sort_simplex();
    res.trace.push_back(f[0]);
  }
  res.theta_opt = x[0];
  res.energy = f[0];
  res.n_energy_evals = obj.evaluations() - start_evals;
  return res;
}

OptimizationResult minimize_lbfgs(Objective& obj, std::vector<double> theta0,
                                  const LbfgsOptions& opts) {
  const std::size_t n = theta0.size();
  if (n == 0) throw ContractError("minimize_lbfgs: dimension must be >= 1");
  if (n != obj.dimension()) throw DimensionError("theta0 does not match objective dimension");

  const std::size_t start_evals = obj.evaluations();
  auto budget_left = [&] { return obj.evaluations() - start_evals < opts.max_evaluations; };

  OptimizationResult res;
  std::vector<double> x = std::move(theta0);
  double f = obj(x);
  std::vector<double> g = central_difference_gradient(obj, x, opts.fd_step);
  res.n_gradient_evals = 1;
  res.trace.push_back(f);

  struct Pair {
    std::vector<double> s, y;
    double rho;
  };
  std::deque<Pair> memory;
  std::vector<double> d(n), x_new(n);

  auto finish = [&](bool converged) {
    res.theta_opt = x;
    res.energy = f;
    res.converged = converged;
    res.n_energy_evals = obj.evaluations() - start_evals;
    return res;
  };

  if (inf_norm(g) <= opts.gradient_tol) return finish(true);

  while (budget_left()) {
    // Two-loop recursion: d = -H g.
    std::vector<double> q = g;
    std::vector<double> alpha(memory.size());
    for (std::size_t m = memory.size(); m-- > 0;) {
      alpha[m] = memory[m].rho * dot(memory[m].s, q);
      for (std::size_t k = 0; k < n; ++k) q[k] -= alpha[m] * memory[m].y[k];
    }
    double gamma = 1.0;
    if (!memory.empty()) {
      const auto& last = memory.back();
      gamma = dot(last.s, last.y) / dot(last.y, last.y);
    }
    for (auto& v : q) v *= gamma;
    for (std::size_t m = 0; m < memory.size(); ++m) {
      const double beta = memory[m].rho * dot(memory[m].y, q);
      for (std::size_t k = 0; k < n; ++k) q[k] += memory[m].s[k] * (alpha[m] - beta);
    }
    for (std::size_t k = 0; k < n; ++k) d[k] = -q[k];
    double slope = dot(g, d);
    if (!(slope < 0.0)) {
      memory.clear();
      for (std::size_t k = 0; k < n; ++k) d[k] = -g[k];
      slope = dot(g, d);
    }

    double step = 1.0;
    double f_new = 0.0;
    bool accepted = false;
    for (std::size_t bt = 0; bt <= opts.max_backtracks && budget_left(); ++bt) {
      for (std::size_t k = 0; k < n; ++k) x_new[k] = x[k] + step * d[k];
      f_new = obj(x_new);
      if (f_new <= f + opts.armijo_c1 * step * slope) {
        accepted = true;
        break;
      }
      step *= opts.backtrack_shrink;
    }
    if (!accepted) return finish(false);

    // Minimizer of the quadratic through f, slope and the accepted point.
    const double curvature = (f_new - f - slope * step) / (step * step);
    if (opts.interpolate_step && curvature > 0.0 && budget_left()) {
      const double t = -slope / (2.0 * curvature);
      if (std::abs(t - step) > 1e-3 * step) {
        std::vector<double> x_try(n);
        for (std::size_t k = 0; k < n; ++k) x_try[k] = x[k] + t * d[k];
        const double f_try = obj(x_try);
        if (f_try < f_new && f_try <= f + opts.armijo_c1 * t * slope) {
          x_new = std::move(x_try);
          f_new = f_try;
        }
      }
    }

    std::vector<double> g_new = central_difference_gradient(obj, x_new, opts.fd_step);
    ++res.n_gradient_evals;
    Pair p{std::vector<double>(n), std::vector<double>(n), 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      p.s[k] = x_new[k] - x[k];
      p.y[k] = g_new[k] - g[k];
    }
    const double sy = dot(p.s, p.y);
    if (sy > 1e-16 * std::sqrt(dot(p.s, p.s) * dot(p.y, p.y)) && sy > 0.0) {
      p.rho = 1.0 / sy;
      memory.push_back(std::move(p));
      if (memory.size() > opts.memory) memory.pop_front();
    }

    const double f_old = f;
    x = x_new;
    f = f_new;
    g = std::move(g_new);
    res.trace.push_back(f);
    if (relative_change_small(f_old, f, opts.tol_rel_energy)) return finish(true);
    if (inf_norm(g) <= opts.gradient_tol) return finish(true);
  }
  return finish(false);
}

}  // namespace vqebench
