#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symtorsion/complex.hpp"
#include "symtorsion/rational.hpp"
#include "symtorsion/torsion.hpp"

// The time-dependent Hamiltonian h_t(x, y) = lambda(x) nu(y - t) on the torus
// R^2/Z^2 with omega = dx ^ dy, its 1-periodic orbits in the winding class
// (0, 1), their Conley-Zehnder indices, the connecting trajectories of the
// reduced gradient ODE, and the resulting Floer complex over Laurent series.
namespace symt::torus {

struct Vec2 {
  double x = 0;
  double y = 0;
};

struct Mat2 {
  double a11 = 1, a12 = 0, a21 = 0, a22 = 1;

  static Mat2 identity() { return {}; }
  double det() const { return a11 * a22 - a12 * a21; }
  double trace() const { return a11 + a22; }
  Mat2 operator*(const Mat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22, a21 * o.a11 + a22 * o.a21,
            a21 * o.a12 + a22 * o.a22};
  }
  Vec2 operator*(const Vec2& v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
};

double max_abs_difference(const Mat2& a, const Mat2& b);

// lambda(x) = 1 + b cos(2 pi x);
// nu(y) = c0 + cos(2 pi y)/2 + c2 cos(4 pi y) with c2 = (1/(4 pi^2) - 1/2)/4 and
// c0 = 1/2 - c2, so that nu(0) = 1, nu'(0) = 0, nu''(0) = -1 and nu(1/2) = 0.
class TorusSystem {
 public:
  explicit TorusSystem(Rational b);

  const Rational& amplitude() const noexcept { return b_; }
  double b() const noexcept { return bd_; }

  double lambda(double x) const;
  double dlambda(double x) const;
  double d2lambda(double x) const;
  double d3lambda(double x) const;
  double nu(double y) const;
  double dnu(double y) const;
  double d2nu(double y) const;

  double hamiltonian(double x, double y, double t) const { return lambda(x) * nu(y - t); }
  // Z_t = lambda(x) nu'(y - t) d/dx - lambda'(x) nu(y - t) d/dy
  Vec2 vector_field(double x, double y, double t) const;
  // Derivative of Z_t with respect to (x, y).
  Mat2 jacobian(double x, double y, double t) const;

 private:
  Rational b_;
  double bd_;
};

// Lower bound 1/(2 pi) and upper bound 1/(pi sqrt 2) on the amplitude.
double min_amplitude();
double max_amplitude();

struct SystemCheck {
  bool ok = true;
  std::vector<std::string> violations;
  std::array<double, 2> equilibria{};  // solutions of lambda'(x) = -1 in [0, 1)
};

// Jet conditions on nu and, at both solutions x_i of lambda'(x) = -1,
// 0 < |lambda''(x_i)| < 2 pi and 0 < |lambda(x_i)| < 2 pi.
SystemCheck check_system(const TorusSystem& sys);
// Throws InvalidSystem listing the violations.
void require_valid_system(const TorusSystem& sys);

// Solutions of lambda'(x) = -1 in [0, 1), ascending, located by sign scan and
// bisection. Empty when b < 1/(2 pi).
std::vector<double> reduced_equilibria(const TorusSystem& sys);

struct FlowResult {
  Vec2 end;                   // lifted position at t = 1
  Mat2 jacobian;              // derivative of the time-1 map
  std::vector<Vec2> samples;  // positions at each step (when recorded)
  std::vector<Mat2> path;     // linearized flow at each step (when recorded)
};

// Fixed-step RK4 integration of Z_t together with its variational equation
// over t in [0, 1].
FlowResult flow(const TorusSystem& sys, Vec2 start, int steps, bool record = false);

inline constexpr int kDefaultSteps = 2048;

struct PeriodicOrbit {
  Vec2 base;                     // at t = 0, reduced to [0, 1)^2
  std::vector<Vec2> trajectory;  // lifted samples over one period
  std::vector<Mat2> path;        // linearized flow along the orbit
  Mat2 monodromy;
  double det_one_minus_m = 0;    // det(I - M)
  double richardson_error = 0;   // |M(h) - M(h/2)| entrywise max
  int index = 0;                 // Conley-Zehnder grading index
};

struct OrbitSearchOptions {
  double tol = 1e-10;           // Newton residual
  int grid = 16;                // seeds per axis
  int steps = kDefaultSteps;
  int max_iterations = 60;
  double nondegeneracy = 1e-6;  // threshold on |det(I - M)|
  double richardson_tol = 1e-8;
  bool parallel = true;
};

struct OrbitSearch {
  std::vector<PeriodicOrbit> orbits;  // sorted by base x
  int grid = 0;
  std::size_t seeds = 0;
  std::size_t converged = 0;
};

// Fixed points of the time-1 map in the winding class (0, 1): Newton from a
// grid of seeds, deduplicated with the wrap-around metric. Throws
// NumericalError when no seed converges or an orbit is degenerate.
OrbitSearch find_orbits(const TorusSystem& sys, const OrbitSearchOptions& options = {});

// Linearized return map at a base point, with a step-halving error check.
// Throws NumericalError when the check fails.
Mat2 monodromy(const TorusSystem& sys, Vec2 base, int steps = kDefaultSteps, double richardson_tol = 1e-8,
               double* richardson_error = nullptr);

// Conley-Zehnder index of a sampled path in Sp(2) starting near the identity,
// by the rotation-number method, shifted so that the grading index of
// exp(t J0 S) with S small is the number of positive eigenvalues of S (the
// Morse index of -S). Consecutive samples must rotate any vector by less than
// pi. Throws NumericalError for a degenerate endpoint (|det(I - M)| < threshold).
int conley_zehnder(std::span<const Mat2> path, double nondegeneracy = 1e-6);

struct ConnectingTrajectory {
  std::size_t from_orbit = 0;  // indices into the orbit list
  std::size_t to_orbit = 0;
  double start = 0;            // lifted x of the source equilibrium
  double end = 0;              // lifted x of the target equilibrium
  std::int64_t label = 0;      // group element in Gamma = Z (area swept, shifted)
};

struct ConnectingCount {
  std::vector<ConnectingTrajectory> trajectories;
  std::size_t total() const noexcept { return trajectories.size(); }
};

// Non-constant solutions of x'(s) = 1 + lambda'(x(s)) between the orbits:
// one per arc of the circle minus the equilibria, running from the lower
// index orbit to the higher. Labels count crossings of x = 0. Throws
// NumericalError when there are no equilibria, when 1 + lambda' vanishes
// inside an arc, or when an equilibrium has no matching orbit.
ConnectingCount count_connecting(const TorusSystem& sys, std::span<const PeriodicOrbit> orbits);

enum class SignConvention { Unsigned, Alternating };
std::string to_string(SignConvention c);

// Z-graded complex over Laurent series (rank 1, phi = 1, c1 = 0): one
// generator "x<i>" per orbit in degree equal to its index, and
// d(from) = sum sign * z^label * to over connecting trajectories.
BasedComplex assemble_floer(std::span<const PeriodicOrbit> orbits, const ConnectingCount& connecting,
                            SignConvention convention);

struct TorusResult {
  SystemCheck system;
  OrbitSearch search;
  ConnectingCount connecting;
  SignConvention convention = SignConvention::Unsigned;
  BasedComplex complex;
  WhiteheadClass torsion;
};

// Whole pipeline: system check, orbits, indices, connecting trajectories,
// assembly, torsion.
TorusResult torus_torsion(const TorusSystem& sys, const OrbitSearchOptions& options = {},
                          SignConvention convention = SignConvention::Unsigned);

}  // namespace symt::torus
