#include "coalsim/qfunc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace coalsim {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

// Rational approximation for the inverse standard-normal CDF,
// accurate to ~1.1e-9; used only as the Newton starting point.
double norm_inv_approx(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double q_func(double x) { return 0.5 * std::erfc(x / kSqrt2); }

double q_inv(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("q_inv: argument must lie in (0, 1)");
    }
    // Q(x) = p  <=>  Phi(x) = 1 - p.
    double x = norm_inv_approx(1.0 - p);
    double lo = -40.0, hi = 40.0;  // Q is strictly decreasing on this bracket
    for (int it = 0; it < 60; ++it) {
        const double err = q_func(x) - p;
        if (err > 0.0) {
            lo = x;  // Q(x) too large -> x too small
        } else {
            hi = x;
        }
        const double pdf = normal_pdf(x);
        double next = (pdf > 0.0) ? x + err / pdf : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) < 1e-15 * std::max(1.0, std::abs(x))) {
            x = next;
            break;
        }
        x = next;
    }
    return x;
}

}  // namespace coalsim
