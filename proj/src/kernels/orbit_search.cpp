#include "symtorsion/kernels/orbit_search.hpp"

#include <algorithm>
#include <cmath>

namespace symt::torus {

namespace {

// Newton iterations at a fixed step count until the residual drops below
// `stop` or the iteration budget runs out.
SeedResult newton_phase(const TorusSystem& sys, Vec2 seed, Vec2 p, int steps, double stop, int iterations) {
  SeedResult out;
  for (int it = 0; it <= iterations; ++it) {
    const FlowResult f = flow(sys, p, steps);
    const double fx = f.end.x - p.x;
    const double fy = f.end.y - p.y - 1.0;
    out.point = p;
    out.residual = std::max(std::abs(fx), std::abs(fy));
    out.iterations = it;
    if (!std::isfinite(out.residual)) return out;
    if (out.residual < stop) {
      out.converged = true;
      return out;
    }
    if (it == iterations) return out;
    // (M - I) delta = -F
    const double a = f.jacobian.a11 - 1, b = f.jacobian.a12;
    const double c = f.jacobian.a21, d = f.jacobian.a22 - 1;
    const double det = a * d - b * c;
    if (std::abs(det) < 1e-14) return out;
    double dx = (-fx * d + fy * b) / det;
    double dy = (-fy * a + fx * c) / det;
    const double size = std::max(std::abs(dx), std::abs(dy));
    if (size > 0.1) {
      dx *= 0.1 / size;
      dy *= 0.1 / size;
    }
    p.x += dx;
    p.y += dy;
    if (std::abs(p.x - seed.x) > 4 || std::abs(p.y - seed.y) > 4) return out;
  }
  return out;
}

}  // namespace

SeedResult newton_from_seed(const TorusSystem& sys, Vec2 seed, const NewtonOptions& options) {
  // Cheap coarse iterations locate the basin; the final ones use the full step count.
  const int coarse_steps = std::max(64, options.steps / 8);
  SeedResult coarse = newton_phase(sys, seed, seed, coarse_steps, 1e-6, options.max_iterations);
  if (!coarse.converged) return coarse;
  SeedResult fine = newton_phase(sys, seed, coarse.point, options.steps, options.tol, 10);
  fine.iterations += coarse.iterations;
  return fine;
}

std::vector<SeedResult> newton_from_seeds_serial(const TorusSystem& sys, std::span<const Vec2> seeds,
                                                 const NewtonOptions& options) {
  std::vector<SeedResult> out(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) out[i] = newton_from_seed(sys, seeds[i], options);
  return out;
}

std::vector<SeedResult> newton_from_seeds_parallel(const TorusSystem& sys, std::span<const Vec2> seeds,
                                                   const NewtonOptions& options) {
  std::vector<SeedResult> out(seeds.size());
  const long n = static_cast<long>(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = newton_from_seed(sys, seeds[i], options);
  return out;
}

std::vector<double> time1_jacobian_dets_serial(const TorusSystem& sys, std::span<const Vec2> points, int steps) {
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = flow(sys, points[i], steps).jacobian.det();
  return out;
}

std::vector<double> time1_jacobian_dets_parallel(const TorusSystem& sys, std::span<const Vec2> points, int steps) {
  std::vector<double> out(points.size());
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = flow(sys, points[i], steps).jacobian.det();
  return out;
}

std::vector<Vec2> seed_grid(int n) {
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back({(i + 0.5) / n, (j + 0.5) / n});
  }
  return out;
}

}  // namespace symt::torus
