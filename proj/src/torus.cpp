#include "symtorsion/torus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "symtorsion/errors.hpp"
#include "symtorsion/kernels/orbit_search.hpp"

namespace symt::torus {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

// nu coefficients: c1 cos(2 pi y) + c2 cos(4 pi y) + c0
constexpr double kNu1 = 0.5;
const double kNu2 = (1.0 / (4 * kPi * kPi) - 0.5) / 4;
const double kNu0 = 0.5 - kNu2;

double wrap_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 1.0);
  return std::min(d, 1.0 - d);
}

double reduce(double a) { return a - std::floor(a); }

struct State {
  double x, y;
  Mat2 m;
};

State derivative(const TorusSystem& sys, const State& s, double t) {
  const Vec2 v = sys.vector_field(s.x, s.y, t);
  return {v.x, v.y, sys.jacobian(s.x, s.y, t) * s.m};
}

State axpy(const State& s, double h, const State& k) {
  return {s.x + h * k.x,
          s.y + h * k.y,
          {s.m.a11 + h * k.m.a11, s.m.a12 + h * k.m.a12, s.m.a21 + h * k.m.a21, s.m.a22 + h * k.m.a22}};
}

// Range of sin(2 pi x) over [lo, hi].
std::pair<double, double> sin_range(double lo, double hi) {
  const double a = kTwoPi * lo;
  const double b = kTwoPi * hi;
  double mn = std::min(std::sin(a), std::sin(b));
  double mx = std::max(std::sin(a), std::sin(b));
  auto contains = [&](double phase) {
    // some phase + 2 pi k in [a, b]
    const double k = std::ceil((a - phase) / kTwoPi);
    return phase + k * kTwoPi <= b;
  };
  if (contains(kPi / 2)) mx = 1;
  if (contains(3 * kPi / 2)) mn = -1;
  return {mn, mx};
}

// Sign of 1 + lambda' on the open arc (a, c) between consecutive equilibria,
// certified by interval bounds away from the ends and a Taylor bound next to
// them. Returns 0 when no certificate is found.
int certify_arc_sign(const TorusSystem& sys, double a, double c) {
  const double bd = sys.b();
  const double third = 8 * kPi * kPi * kPi * bd;  // bound on |lambda'''|
  const int pieces = 4096;
  const double h = (c - a) / pieces;
  auto end_sign = [&](double x_eq, double dir) -> int {
    const double slope = sys.d2lambda(x_eq);
    if (h >= 2 * std::abs(slope) / third) return 0;
    return (slope * dir > 0) ? 1 : -1;
  };
  const int left = end_sign(a, 1.0);
  const int right = end_sign(c, -1.0);
  if (left == 0 || left != right) return 0;
  for (int i = 1; i + 1 < pieces; ++i) {
    const auto [mn, mx] = sin_range(a + i * h, a + (i + 1) * h);
    const double lo = 1 - kTwoPi * bd * mx;
    const double hi = 1 - kTwoPi * bd * mn;
    const int s = lo > 1e-12 ? 1 : (hi < -1e-12 ? -1 : 0);
    if (s != left) return 0;
  }
  return left;
}

}  // namespace

double max_abs_difference(const Mat2& a, const Mat2& b) {
  return std::max({std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12), std::abs(a.a21 - b.a21),
                   std::abs(a.a22 - b.a22)});
}

// ---------------------------------------------------------------------------
// TorusSystem

TorusSystem::TorusSystem(Rational b) : b_(std::move(b)), bd_(b_.convert_to<double>()) {}

double TorusSystem::lambda(double x) const { return 1 + bd_ * std::cos(kTwoPi * x); }
double TorusSystem::dlambda(double x) const { return -kTwoPi * bd_ * std::sin(kTwoPi * x); }
double TorusSystem::d2lambda(double x) const { return -kTwoPi * kTwoPi * bd_ * std::cos(kTwoPi * x); }
double TorusSystem::d3lambda(double x) const {
  return kTwoPi * kTwoPi * kTwoPi * bd_ * std::sin(kTwoPi * x);
}

double TorusSystem::nu(double y) const {
  return kNu0 + kNu1 * std::cos(kTwoPi * y) + kNu2 * std::cos(2 * kTwoPi * y);
}
double TorusSystem::dnu(double y) const {
  return -kTwoPi * kNu1 * std::sin(kTwoPi * y) - 2 * kTwoPi * kNu2 * std::sin(2 * kTwoPi * y);
}
double TorusSystem::d2nu(double y) const {
  return -kTwoPi * kTwoPi * kNu1 * std::cos(kTwoPi * y) - 4 * kTwoPi * kTwoPi * kNu2 * std::cos(2 * kTwoPi * y);
}

Vec2 TorusSystem::vector_field(double x, double y, double t) const {
  return {lambda(x) * dnu(y - t), -dlambda(x) * nu(y - t)};
}

Mat2 TorusSystem::jacobian(double x, double y, double t) const {
  const double l = lambda(x), dl = dlambda(x), ddl = d2lambda(x);
  const double n = nu(y - t), dn = dnu(y - t), ddn = d2nu(y - t);
  return {dl * dn, l * ddn, -ddl * n, -dl * dn};
}

double min_amplitude() { return 1 / kTwoPi; }
double max_amplitude() { return 1 / (kPi * std::numbers::sqrt2); }

// ---------------------------------------------------------------------------
// Standing assumptions

std::vector<double> reduced_equilibria(const TorusSystem& sys) {
  auto f = [&](double x) { return 1 + sys.dlambda(x); };
  std::vector<double> out;
  const int n = 4096;
  for (int i = 0; i < n; ++i) {
    double lo = static_cast<double>(i) / n;
    double hi = static_cast<double>(i + 1) / n;
    double flo = f(lo), fhi = f(hi);
    if (flo == 0) {
      out.push_back(lo);
      continue;
    }
    if ((flo < 0) == (fhi < 0) || fhi == 0) continue;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

SystemCheck check_system(const TorusSystem& sys) {
  SystemCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.violations.push_back(std::move(msg));
  };
  const double b = sys.b();
  if (!(b > min_amplitude() && b < max_amplitude())) {
    fail("amplitude b = " + std::to_string(b) + " outside (1/(2 pi), 1/(pi sqrt 2))");
  }
  if (std::abs(sys.nu(0) - 1) > 1e-12) fail("nu(0) != 1");
  if (std::abs(sys.dnu(0)) > 1e-12) fail("nu'(0) != 0");
  if (std::abs(sys.d2nu(0) + 1) > 1e-12) fail("nu''(0) != -1");
  const auto eq = reduced_equilibria(sys);
  if (eq.size() != 2) {
    fail("lambda'(x) = -1 has " + std::to_string(eq.size()) + " solutions, expected 2");
    return out;
  }
  for (std::size_t i = 0; i < 2; ++i) {
    out.equilibria[i] = eq[i];
    const double l2 = std::abs(sys.d2lambda(eq[i]));
    const double l0 = std::abs(sys.lambda(eq[i]));
    if (!(l2 > 0 && l2 < kTwoPi)) fail("|lambda''| = " + std::to_string(l2) + " outside (0, 2 pi) at equilibrium");
    if (!(l0 > 0 && l0 < kTwoPi)) fail("|lambda| = " + std::to_string(l0) + " outside (0, 2 pi) at equilibrium");
  }
  return out;
}

void require_valid_system(const TorusSystem& sys) {
  const SystemCheck c = check_system(sys);
  if (c.ok) return;
  std::string msg = "system violates its assumptions:";
  for (const auto& v : c.violations) msg += "\n  " + v;
  throw InvalidSystem(msg);
}

// ---------------------------------------------------------------------------
// Flow

FlowResult flow(const TorusSystem& sys, Vec2 start, int steps, bool record) {
  if (steps <= 0) throw NumericalError("flow needs a positive step count");
  const double h = 1.0 / steps;
  State s{start.x, start.y, Mat2::identity()};
  FlowResult out;
  if (record) {
    out.samples.reserve(steps + 1);
    out.path.reserve(steps + 1);
    out.samples.push_back(start);
    out.path.push_back(s.m);
  }
  for (int i = 0; i < steps; ++i) {
    const double t = i * h;
    const State k1 = derivative(sys, s, t);
    const State k2 = derivative(sys, axpy(s, h / 2, k1), t + h / 2);
    const State k3 = derivative(sys, axpy(s, h / 2, k2), t + h / 2);
    const State k4 = derivative(sys, axpy(s, h, k3), t + h);
    State next = axpy(s, h / 6, k1);
    next = axpy(next, h / 3, k2);
    next = axpy(next, h / 3, k3);
    s = axpy(next, h / 6, k4);
    if (record) {
      out.samples.push_back({s.x, s.y});
      out.path.push_back(s.m);
    }
  }
  out.end = {s.x, s.y};
  out.jacobian = s.m;
  return out;
}

Mat2 monodromy(const TorusSystem& sys, Vec2 base, int steps, double richardson_tol, double* richardson_error) {
  const Mat2 coarse = flow(sys, base, steps).jacobian;
  const Mat2 fine = flow(sys, base, 2 * steps).jacobian;
  const double err = max_abs_difference(coarse, fine);
  if (richardson_error) *richardson_error = err;
  if (!(err <= richardson_tol)) {
    throw NumericalError("monodromy changed by " + std::to_string(err) + " when halving the step");
  }
  return fine;
}

// ---------------------------------------------------------------------------
// Conley-Zehnder index

int conley_zehnder(std::span<const Mat2> path, double nondegeneracy) {
  if (path.empty()) throw NumericalError("empty symplectic path");
  const Mat2& m = path.back();
  const double tr = m.trace();
  const double det_one_minus = 1 - tr + m.det();
  if (!(std::abs(det_one_minus) > nondegeneracy)) {
    throw NumericalError("degenerate endpoint: |det(I - M)| = " + std::to_string(std::abs(det_one_minus)));
  }
  const bool hyperbolic = std::abs(tr) > 2;
  Vec2 v{1, 0};
  if (hyperbolic) {
    const double disc = std::sqrt(tr * tr - 4 * m.det());
    const double mu = tr > 0 ? (tr + disc) / 2 : (tr - disc) / 2;
    if (std::abs(m.a12) >= std::abs(m.a21) && std::abs(m.a12) > 1e-300) {
      v = {m.a12, mu - m.a11};
    } else if (std::abs(m.a21) > 1e-300) {
      v = {mu - m.a22, m.a21};
    } else {
      v = std::abs(m.a11 - mu) < std::abs(m.a22 - mu) ? Vec2{1, 0} : Vec2{0, 1};
    }
  }
  double prev = std::atan2(v.y, v.x);
  double total = 0;
  for (const Mat2& p : path) {
    const Vec2 w = p * v;
    const double ang = std::atan2(w.y, w.x);
    double d = ang - prev;
    while (d > kPi) d -= kTwoPi;
    while (d <= -kPi) d += kTwoPi;
    total += d;
    prev = ang;
  }
  const double r = total / kTwoPi;
  int cz = 0;
  if (hyperbolic && tr > 0) {
    cz = 2 * static_cast<int>(std::lround(r));
  } else {
    cz = 2 * static_cast<int>(std::floor(r)) + 1;
  }
  return cz + 1;
}

// ---------------------------------------------------------------------------
// Orbits

OrbitSearch find_orbits(const TorusSystem& sys, const OrbitSearchOptions& options) {
  if (options.grid <= 0) throw NumericalError("seed grid must be positive");
  const auto seeds = seed_grid(options.grid);
  const NewtonOptions newton{options.tol, options.steps, options.max_iterations};
  const auto results = options.parallel ? newton_from_seeds_parallel(sys, seeds, newton)
                                        : newton_from_seeds_serial(sys, seeds, newton);
  OrbitSearch out;
  out.grid = options.grid;
  out.seeds = seeds.size();

  std::vector<SeedResult> unique;
  for (const auto& r : results) {
    if (!r.converged) continue;
    ++out.converged;
    const Vec2 p{reduce(r.point.x), reduce(r.point.y)};
    auto same = [&](const SeedResult& u) {
      return wrap_distance(u.point.x, p.x) < 1e-6 && wrap_distance(u.point.y, p.y) < 1e-6;
    };
    auto it = std::find_if(unique.begin(), unique.end(), same);
    if (it == unique.end()) {
      unique.push_back({true, p, r.residual, r.iterations});
    } else if (r.residual < it->residual) {
      *it = {true, p, r.residual, r.iterations};
    }
  }
  if (unique.empty()) throw NumericalError("no seed converged to a periodic orbit");

  for (const auto& u : unique) {
    PeriodicOrbit orbit;
    orbit.base = u.point;
    FlowResult f = flow(sys, u.point, options.steps, true);
    orbit.trajectory = std::move(f.samples);
    orbit.path = std::move(f.path);
    orbit.monodromy = monodromy(sys, u.point, options.steps, options.richardson_tol, &orbit.richardson_error);
    orbit.det_one_minus_m = 1 - orbit.monodromy.trace() + orbit.monodromy.det();
    if (!(std::abs(orbit.det_one_minus_m) > options.nondegeneracy)) {
      throw NumericalError("degenerate orbit at (" + std::to_string(u.point.x) + ", " + std::to_string(u.point.y) +
                           "): |det(I - M)| = " + std::to_string(std::abs(orbit.det_one_minus_m)));
    }
    orbit.index = conley_zehnder(orbit.path, options.nondegeneracy);
    out.orbits.push_back(std::move(orbit));
  }
  std::sort(out.orbits.begin(), out.orbits.end(), [](const PeriodicOrbit& a, const PeriodicOrbit& b) {
    return a.base.x != b.base.x ? a.base.x < b.base.x : a.base.y < b.base.y;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Connecting trajectories

ConnectingCount count_connecting(const TorusSystem& sys, std::span<const PeriodicOrbit> orbits) {
  const auto eq = reduced_equilibria(sys);
  if (eq.empty()) {
    throw NumericalError("1 + lambda' has no zeros (b <= 1/(2 pi)); connecting trajectories are undefined");
  }
  std::vector<std::size_t> owner;
  for (double x : eq) {
    auto it = std::find_if(orbits.begin(), orbits.end(), [&](const PeriodicOrbit& o) {
      return wrap_distance(o.base.x, x) < 1e-6 && wrap_distance(o.base.y, 0) < 1e-6;
    });
    if (it == orbits.end()) throw NumericalError("equilibrium x = " + std::to_string(x) + " has no periodic orbit");
    owner.push_back(static_cast<std::size_t>(it - orbits.begin()));
  }

  ConnectingCount out;
  const std::size_t m = eq.size();
  for (std::size_t j = 0; j < m; ++j) {
    const double a = eq[j];
    const double c = j + 1 < m ? eq[j + 1] : eq[0] + 1;
    const std::size_t ia = owner[j];
    const std::size_t ic = owner[(j + 1) % m];
    const int s = certify_arc_sign(sys, a, c);
    if (s == 0) {
      throw NumericalError("could not certify the sign of 1 + lambda' on (" + std::to_string(a) + ", " +
                           std::to_string(c) + ")");
    }
    ConnectingTrajectory t;
    if (s > 0) {
      t = {ia, ic, a, c, 0};
    } else {
      t = {ic, ia, c, a, 0};
    }
    t.label = static_cast<std::int64_t>(std::floor(t.end) - std::floor(t.start));
    if (orbits[t.to_orbit].index != orbits[t.from_orbit].index + 1) {
      throw NumericalError("connecting trajectory joins orbits of indices " +
                           std::to_string(orbits[t.from_orbit].index) + " and " +
                           std::to_string(orbits[t.to_orbit].index));
    }
    out.trajectories.push_back(t);
  }
  std::sort(out.trajectories.begin(), out.trajectories.end(),
            [](const ConnectingTrajectory& x, const ConnectingTrajectory& y) { return x.label < y.label; });
  return out;
}

std::string to_string(SignConvention c) { return c == SignConvention::Unsigned ? "unsigned" : "alternating"; }

BasedComplex assemble_floer(std::span<const PeriodicOrbit> orbits, const ConnectingCount& connecting,
                            SignConvention convention) {
  const LatticePtr lattice = Lattice::laurent();
  BasedComplex c(lattice, Grading::from_chern(lattice->minimal_chern_number()));
  for (std::size_t i = 0; i < orbits.size(); ++i) c.add_generator("x" + std::to_string(i), orbits[i].index);

  std::map<std::pair<std::size_t, std::size_t>, NovikovElement::TermMap> sums;
  for (const auto& t : connecting.trajectories) {
    const Rational sign = convention == SignConvention::Alternating && (t.label % 2 != 0) ? Rational(-1) : Rational(1);
    NovikovElement::TermMap& terms = sums[{t.from_orbit, t.to_orbit}];
    auto [it, inserted] = terms.try_emplace(GroupElement({t.label}), sign);
    if (!inserted) it->second += sign;
    if (it->second == 0) terms.erase(it);
  }
  for (auto& [key, terms] : sums) c.set_entry(key.first, key.second, NovikovElement(lattice, std::move(terms)));
  return c;
}

TorusResult torus_torsion(const TorusSystem& sys, const OrbitSearchOptions& options, SignConvention convention) {
  SystemCheck check = check_system(sys);
  require_valid_system(sys);
  OrbitSearch search = find_orbits(sys, options);
  ConnectingCount connecting = count_connecting(sys, search.orbits);
  BasedComplex complex = assemble_floer(search.orbits, connecting, convention);
  WhiteheadClass torsion = milnor_torsion(complex);
  return {std::move(check), std::move(search), std::move(connecting), convention, std::move(complex),
          std::move(torsion)};
}

}  // namespace symt::torus
