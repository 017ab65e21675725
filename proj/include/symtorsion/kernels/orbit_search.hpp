#pragma once

#include <span>
#include <vector>

#include "symtorsion/torus.hpp"

namespace symt::torus {

struct NewtonOptions {
  double tol = 1e-10;
  int steps = kDefaultSteps;
  int max_iterations = 60;
};

struct SeedResult {
  bool converged = false;
  Vec2 point;             // lifted; reduce mod 1 before comparing
  double residual = 0;    // max norm of (X(1) - x, Y(1) - y - 1)
  int iterations = 0;
};

// Newton iteration on F(x, y) = Phi_1(x, y) - (x, y + 1) from one seed. The
// step is capped at 0.1 in max norm. Iterates with steps/8 RK4 steps until the
// residual is below 1e-6, then with the full count until below tol.
SeedResult newton_from_seed(const TorusSystem& sys, Vec2 seed, const NewtonOptions& options);

// Reference: seeds one after another.
std::vector<SeedResult> newton_from_seeds_serial(const TorusSystem& sys, std::span<const Vec2> seeds,
                                                 const NewtonOptions& options);
// Same results, seeds distributed over OpenMP threads.
std::vector<SeedResult> newton_from_seeds_parallel(const TorusSystem& sys, std::span<const Vec2> seeds,
                                                   const NewtonOptions& options);

// det of the time-1 linearized flow at each point; symplectic flows give 1.
std::vector<double> time1_jacobian_dets_serial(const TorusSystem& sys, std::span<const Vec2> points, int steps);
std::vector<double> time1_jacobian_dets_parallel(const TorusSystem& sys, std::span<const Vec2> points, int steps);

// n x n cell-centred grid on [0, 1)^2.
std::vector<Vec2> seed_grid(int n);

}  // namespace symt::torus
