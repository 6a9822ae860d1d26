#include "cir/quadrature.hpp"

#include <cmath>

namespace cir {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double lo, double hi,
             double flo, double fmid, double fhi, double whole, double tol,
             int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid);
    const double rm = 0.5 * (mid + hi);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(flo, flm, fmid, mid - lo);
    const double right = simpson(fmid, frm, fhi, hi - mid);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adapt(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) +
           adapt(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
    if (!(hi > lo)) {
        return 0.0;
    }
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo);
    const double fmid = f(mid);
    const double fhi = f(hi);
    const double whole = simpson(flo, fmid, fhi, hi - lo);
    return adapt(f, lo, hi, flo, fmid, fhi, whole, tol, 48);
}

}  // namespace cir
