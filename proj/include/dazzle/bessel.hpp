#pragma once

#include <span>

namespace dazzle {

/// J_0(x), ..., J_{out.size()-1}(x) for x >= 0, all orders in one pass
/// (downward Miller recurrence, normalized by J0 + 2*sum J_{2k} = 1).
/// Absolute error <= 1e-12 on the ranges exercised by the pupil grids;
/// validated against 50-digit reference values in the test suite.
void bessel_jn_sequence(double x, std::span<double> out);

double bessel_j0(double x);
double bessel_j1(double x);
double bessel_jn(int order, double x);

} // namespace dazzle
