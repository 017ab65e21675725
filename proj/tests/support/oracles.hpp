#pragma once

// Independent reference computations. None of these call into the code paths
// they are used to check.

#include <array>
#include <utility>

#include "symtorsion/matrix.hpp"
#include "symtorsion/novikov.hpp"

namespace symt::testing {

// Product of two exact elements by the schoolbook double loop over terms.
NovikovElement naive_product(const NovikovElement& a, const NovikovElement& b);

// Determinant of a square matrix of exact elements by cofactor expansion
// along the first row.
NovikovElement cofactor_determinant(const Matrix& m);

using Mat = std::array<double, 4>;  // row-major 2 x 2

// exp([[0, -l], [-l2, 0]]) from A^2 = l l2 I: cos/sin for l l2 < 0,
// cosh/sinh for l l2 > 0.
Mat closed_form_exponential(double l, double l2);

// exp(A) by its Taylor series, summed until the terms vanish.
Mat taylor_exponential(const Mat& a);

// Solutions of sin(2 pi x) = 1 / (2 pi b) in [0, 1/2] by bisection.
std::pair<double, double> equilibria_by_bisection(double b);

// lambda(x) = 1 + b cos 2 pi x and its second derivative, written out here
// rather than taken from the library.
double lambda_oracle(double b, double x);
double lambda2_oracle(double b, double x);

// Integrates x'(s) = 1 - 2 pi b sin(2 pi x) from x(0) = seed backwards and
// forwards for |s| <= 80 and returns the two limits (lifted reals).
std::pair<double, double> reduced_flow_limits(double b, double seed);

}  // namespace symt::testing
