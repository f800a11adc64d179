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

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace vqebench {

/// Default central-difference step (radians).
inline constexpr double kDefaultFdStep = 1e-5;
/// Default relative-energy convergence tolerance.
inline constexpr double kDefaultTolRelEnergy = 1e-6;

enum class OptimizerKind { NelderMead, Lbfgs };

std::string to_string(OptimizerKind k);
/// Accepts "nelder_mead", "nm", "lbfgs", "l-bfgs".
OptimizerKind parse_optimizer(const std::string& name);

/// Energy as a function of the parameter vector, with an evaluation counter.
/// The wrapped function must be deterministic.
class Objective {
 public:
  using Function = std::function<double(std::span<const double>)>;

  Objective(std::size_t dimension, Function fn);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t evaluations() const noexcept { return evaluations_; }

  double operator()(std::span<const double> theta);

 private:
  std::size_t dimension_;
  Function fn_;
  std::size_t evaluations_ = 0;
};

struct OptimizationResult {
  std::vector<double> theta_opt;
  double energy = 0.0;
  std::size_t n_energy_evals = 0;
  std::size_t n_gradient_evals = 0;
  bool converged = false;
  /// Best energy after each iteration (accepted iterate for L-BFGS).
  std::vector<double> trace;
};

/// (f(theta + h e_k) - f(theta - h e_k)) / 2h for every k: 2*dimension
/// objective evaluations.
std::vector<double> central_difference_gradient(Objective& obj, std::span<const double> theta,
                                                double h);

struct NelderMeadOptions {
  double tol_rel_energy = kDefaultTolRelEnergy;
  double initial_step = 0.1;
  /// Largest vertex offset from the best vertex allowed at convergence, in
  /// radians. The energy-spread test alone accepts simplices straddling the
  /// minimum.
  double x_tolerance = 1e-4;
  std::size_t max_evaluations = 100000;
};

/// Nelder-Mead with reflection 1, expansion 2, contraction 0.5, shrink 0.5.
/// Stops when the simplex energy spread is within tol_rel_energy of the best
/// energy's magnitude.
OptimizationResult minimize_nelder_mead(Objective& obj, std::vector<double> theta0,
                                        const NelderMeadOptions& opts = {});

struct LbfgsOptions {
  double tol_rel_energy = kDefaultTolRelEnergy;
  double fd_step = kDefaultFdStep;
  std::size_t memory = 10;
  double armijo_c1 = 1e-4;
  double backtrack_shrink = 0.5;
  std::size_t max_backtracks = 40;
  double gradient_tol = 1e-8;
  /// After an accepted step, also try the minimizer of the quadratic fitted
  /// through the line samples; keeps it when lower.
  bool interpolate_step = true;
  std::size_t max_evaluations = 100000;
};

/// Limited-memory BFGS with Armijo backtracking and central-difference
/// gradients.
OptimizationResult minimize_lbfgs(Objective& obj, std::vector<double> theta0,
                                  const LbfgsOptions& opts = {});

}  // namespace vqebench
