#pragma once

#include <functional>

namespace cir {

// Adaptive Simpson quadrature on [lo, hi]. `tol` is the absolute error
// target; the interval is split until the local Richardson estimate is
// below the per-interval share of the budget.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-10);

}  // namespace cir
