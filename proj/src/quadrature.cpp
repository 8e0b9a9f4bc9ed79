#include "certzeta/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace certzeta::quad {
namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights live on the odd Kronrod nodes kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    Complex value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

}  // namespace

Result gauss_kronrod(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const Complex fc = f(center);
    Complex kronrod = kWgk[7] * fc;
    Complex gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const Complex pair = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * pair;
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    double err = std::abs(kronrod - gauss);
    if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
    return {kronrod, err, 15, true};
}

Result integrate(const Integrand& f, double a, double b, const Options& opt) {
    if (a == b) return {0.0, 0.0, 0, true};
    std::priority_queue<Segment> heap;
    Result first = gauss_kronrod(f, a, b);
    heap.push({a, b, first.value, first.error});
    Complex total = first.value;
    double total_err = first.error;
    long evals = first.evaluations;
    int intervals = 1;

    auto done = [&] {
        const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        return total_err <= tol;
    };

    while (!done()) {
        if (intervals >= opt.max_intervals) break;
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval cannot be split further in double precision.
            heap.push({worst.a, worst.b, worst.value, 0.0});
            total_err -= worst.error;
            continue;
        }
        const Result left = gauss_kronrod(f, worst.a, mid);
        const Result right = gauss_kronrod(f, mid, worst.b);
        evals += 30;
        ++intervals;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push({worst.a, mid, left.value, left.error});
        heap.push({mid, worst.b, right.value, right.error});
    }

    // Recompute sums from the segments to shed accumulated cancellation.
    Complex sum = 0.0;
    double err = 0.0;
    std::vector<Segment> segs;
    segs.reserve(heap.size());
    while (!heap.empty()) {
        segs.push_back(heap.top());
        heap.pop();
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    for (const Segment& s : segs) {
        sum += s.value;
        err += s.error;
    }
    const bool ok = err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(sum)) || err == 0.0;
    return {sum, err, evals, ok};
}

}  // namespace certzeta::quad
