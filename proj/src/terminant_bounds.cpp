#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "certzeta/errors.hpp"
#include "certzeta/terminant.hpp"

namespace certzeta::terminant {
namespace {

constexpr double kQuarterPi = 0.25 * kPi;
constexpr double kHalfPi = 0.5 * kPi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_order(Complex p) {
    if (!(p.real() > 0.0)) throw DomainError("terminant bounds require Re(p) > 0");
}

double exp_max1(double x) { return x > 0.0 ? std::exp(x) : 1.0; }

// sign used for the +- choices: the sign of arg w, + at arg w = 0.
double side(double arg_w) { return arg_w < 0.0 ? -1.0 : 1.0; }

}  // namespace

Sector classify(double arg_w) {
    const double t = std::abs(arg_w);
    if (!(t < kPi)) throw DomainError("terminant requires |arg w| < pi");
    if (t <= kQuarterPi) return Sector::core;
    if (t < kHalfPi) return Sector::mid;
    if (t == kHalfPi) return Sector::boundary;
    return Sector::upper;
}

double bound_sector(Complex p, double arg_w) {
    require_order(p);
    const double t = std::abs(arg_w);
    if (!(t < kHalfPi)) throw DomainError("sector bound requires |arg w| < pi/2");
    const double ratio = gamma_ratio_bound(p);
    if (t <= kQuarterPi) return ratio;
    return ratio / std::abs(std::sin(2.0 * arg_w));
}

double bound_secant(Complex p, double arg_w, SecondTerm second) {
    require_order(p);
    if (!(std::abs(arg_w) < kHalfPi)) throw DomainError("secant bound requires |arg w| < pi/2");
    auto one_side = [&](double sg) {
        const double first = 0.5 * std::pow(1.0 / std::cos(arg_w), p.real()) *
                             exp_max1(p.imag() * (-sg * kHalfPi - arg_w));
        const double rest = second == SecondTerm::exponential
                                ? 0.5 * exp_max1(p.imag() * (sg * kHalfPi - arg_w))
                                : 0.5 * gamma_ratio_bound(p);
        return first + rest;
    };
    // On arg w = 0 both sign choices are admissible.
    if (arg_w == 0.0) return std::min(one_side(1.0), one_side(-1.0));
    return one_side(side(arg_w));
}

PhiBound bound_phi(double p, double arg_w) {
    if (!(p > 0.0)) throw DomainError("phi bound requires real p > 0");
    const double t = std::abs(arg_w);
    if (!(t > kQuarterPi && t < kPi)) throw DomainError("phi bound requires pi/4 < |arg w| < pi");

    double lo, hi;
    if (t < kHalfPi) {
        lo = 0.0;
        hi = t - kQuarterPi;
    } else if (t < 0.75 * kPi) {
        lo = t - kHalfPi;
        hi = t - kQuarterPi;
    } else {
        lo = t - kHalfPi;
        hi = kHalfPi;
    }
    auto f = [&](double phi) {
        return (p + 2.0) * std::cos(2.0 * t - 3.0 * phi) - (p - 2.0) * std::cos(2.0 * t - phi);
    };
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0 || fhi == 0.0 || (flo < 0.0) == (fhi < 0.0)) {
        std::ostringstream msg;
        msg << "phi bound: no sign change on bracket (" << lo << ", " << hi << ") for p = " << p
            << ", arg w = " << arg_w;
        throw NumericError(msg.str());
    }
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0.0) {
            a = b = mid;
            break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            a = mid;
            flo = fm;
        } else {
            b = mid;
        }
    }
    const double phi = 0.5 * (a + b);
    const double value = 1.0 / std::abs(std::sin(2.0 * (t - phi))) / std::pow(std::cos(phi), p);
    const double sg = side(arg_w);
    if (sg > 0) return {value, phi, lo, hi};
    return {value, -phi, -hi, -lo};
}

double hyp2f1_upper(double b, double x) {
    if (!(b > 0.0)) throw DomainError("hyp2f1_upper requires b > 0");
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("hyp2f1_upper requires 0 <= x <= 1");
    const double at_one = chi(2.0 * b);
    if (x == 1.0) return at_one;
    // c_n = (1/2)_n / n! * b / (b + n) * x^n, ratio < x.
    double term = 1.0;
    double sum = 1.0;
    constexpr int kCap = 20000;
    for (int n = 0; n < kCap; ++n) {
        const double tail = term * x / (1.0 - x);
        if (tail <= 1e-17 * sum) return std::min(sum + tail, at_one);
        const double nd = n;
        term *= (nd + 0.5) / (nd + 1.0) * (b + nd) / (b + nd + 1.0) * x;
        sum += term;
    }
    return std::min(sum + term * x / (1.0 - x), at_one);
}

double bound_boundary(Complex p, double arg_w, SecondTerm second, BoundaryFactor factor) {
    require_order(p);
    const double t = std::abs(arg_w);
    if (!(t > kQuarterPi && t <= kHalfPi))
        throw DomainError("boundary bound requires pi/4 < |arg w| <= pi/2");
    const double r = p.real();
    const double s2 = std::sin(arg_w) * std::sin(arg_w);
    const double big_f =
        factor == BoundaryFactor::chi || t == kHalfPi ? chi(r) : hyp2f1_upper(0.5 * r, std::min(1.0, s2));
    const double middle = std::abs(p) / (2.0 * r) * big_f * exp_max1(-p.imag() * arg_w);
    const double last = second == SecondTerm::exponential
                            ? 0.5 * exp_max1(p.imag() * (side(arg_w) * kHalfPi - arg_w))
                            : 0.5 * gamma_ratio_bound(p);
    return 0.5 + middle + last;
}

double bound_upper(Complex p, double arg_w, double inner_bound, UpperForm form) {
    require_order(p);
    const double t = std::abs(arg_w);
    if (!(t > kHalfPi && t < kPi)) throw DomainError("upper-sector bound requires pi/2 < |arg w| < pi");
    const double r = p.real();
    const double factor = form == UpperForm::chi_form ? chi(r) : 0.5 * std::sqrt(kTwoPi * r);
    return std::exp(p.imag() * (side(arg_w) * kHalfPi - arg_w)) * gamma_ratio_bound(p) * factor /
               std::pow(std::abs(std::sin(arg_w)), r) +
           inner_bound;
}

double bound_real_boundary_sharp(double p, double arg_w) {
    if (!(p > 0.0)) throw DomainError("sharp boundary bound requires real p > 0");
    const double t = std::abs(arg_w);
    if (!(t > kQuarterPi && t <= kHalfPi))
        throw DomainError("sharp boundary bound requires pi/4 < |arg w| <= pi/2");
    return std::sqrt(std::exp(1.0) * (p + 1.5) / 4.0);
}

double sup_bound(Complex p, double arg_w) {
    require_order(p);
    const Sector sector = classify(arg_w);
    const bool real_order = p.imag() == 0.0;
    double best = kInf;
    auto consider = [&](double v) {
        if (std::isfinite(v)) best = std::min(best, v);
    };
    auto consider_phi = [&] {
        if (!real_order) return;
        try {
            consider(bound_phi(p.real(), arg_w).value);
        } catch (const NumericError&) {
        }
    };

    switch (sector) {
        case Sector::core:
            consider(bound_sector(p, arg_w));
            consider(bound_secant(p, arg_w, SecondTerm::exponential));
            consider(bound_secant(p, arg_w, SecondTerm::gamma_ratio));
            break;
        case Sector::mid:
            consider(bound_sector(p, arg_w));
            consider(bound_secant(p, arg_w, SecondTerm::exponential));
            consider(bound_secant(p, arg_w, SecondTerm::gamma_ratio));
            consider(bound_boundary(p, arg_w, SecondTerm::exponential, BoundaryFactor::hypergeometric));
            consider(bound_boundary(p, arg_w, SecondTerm::gamma_ratio, BoundaryFactor::hypergeometric));
            consider_phi();
            break;
        case Sector::boundary:
            consider(bound_boundary(p, arg_w, SecondTerm::exponential, BoundaryFactor::chi));
            consider(bound_boundary(p, arg_w, SecondTerm::gamma_ratio, BoundaryFactor::chi));
            consider_phi();
            break;
        case Sector::upper: {
            const double reflected = arg_w - side(arg_w) * kPi;
            consider(bound_upper(p, arg_w, sup_bound(p, reflected), UpperForm::sqrt_form));
            consider_phi();
            break;
        }
    }
    return best;
}

}  // namespace certzeta::terminant
