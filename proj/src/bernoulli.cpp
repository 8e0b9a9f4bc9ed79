#include "certzeta/bernoulli.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "certzeta/errors.hpp"

namespace certzeta::bernoulli {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr int kMaxIndex = 2 * kMaxHalfIndex;

double to_double(const cpp_rational& q) {
    return boost::multiprecision::numerator(q).convert_to<double>() /
           boost::multiprecision::denominator(q).convert_to<double>();
}

struct Tables {
    std::array<double, kMaxIndex + 1> numbers{};
    // gap[n/2][j-1] = C(n, n-j) B_{n-j}, so that B_n - B_n(x) = -sum_j gap x^j.
    std::vector<std::vector<double>> gap;

    Tables() {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1, in exact rationals.
        std::vector<cpp_rational> b(kMaxIndex + 1);
        b[0] = 1;
        for (int m = 1; m <= kMaxIndex; ++m) {
            cpp_rational acc = 0;
            cpp_int binom = 1;  // C(m+1, k)
            for (int k = 0; k < m; ++k) {
                acc += cpp_rational(binom) * b[k];
                binom = binom * (m + 1 - k) / (k + 1);
            }
            b[m] = -acc / (m + 1);
        }
        for (int n = 0; n <= kMaxIndex; ++n) numbers[n] = to_double(b[n]);

        gap.resize(kMaxHalfIndex + 1);
        for (int h = 1; h <= kMaxHalfIndex; ++h) {
            const int n = 2 * h;
            std::vector<double>& row = gap[h];
            row.resize(n);
            cpp_int binom = 1;  // C(n, k)
            for (int k = 0; k < n; ++k) {
                row[n - k - 1] = to_double(cpp_rational(binom) * b[k]);
                binom = binom * (n - k) / (k + 1);
            }
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

}  // namespace

double number_any(int n) {
    if (n < 0 || n > kMaxIndex)
        throw DomainError("Bernoulli index " + std::to_string(n) + " out of range [0, 128]");
    return tables().numbers[n];
}

double number(int n2) {
    if (n2 % 2 != 0) throw DomainError("Bernoulli index must be even, got " + std::to_string(n2));
    return number_any(n2);
}

double poly_gap(int n2, double x) {
    if (n2 < 2 || n2 % 2 != 0 || n2 > kMaxIndex)
        throw DomainError("Bernoulli polynomial order must be even in [2, 128]");
    // B_n(x) = B_n(1 - x) for even n.
    if (x > 0.5) x = 1.0 - x;
    const std::vector<double>& c = tables().gap[n2 / 2];
    double acc = 0.0;
    for (int j = n2; j >= 1; --j) acc = acc * x + c[j - 1];
    return -acc * x;
}

double poly_periodic(int n2, double t) {
    const double x = t - std::floor(t);
    return number(n2) - poly_gap(n2, x);
}

double kernel_difference(double u, int N) {
    if (N < 1) throw DomainError("kernel_difference requires N >= 1");
    if (!(u > 0.0)) throw DomainError("kernel_difference requires u > 0");
    const double pi = 3.14159265358979323846;
    if (u < pi) {
        // Tail of the Taylor series of 1/(e^u-1) - 1/u + 1/2, which converges
        // with ratio (u / 2pi)^2 <= 1/4 here.
        double sum = 0.0;
        double fact = 1.0;  // (2n)!
        for (int k = 1; k <= 2 * N; ++k) fact *= k;
        double upow = std::pow(u, 2 * N - 1);
        for (int n = N; n <= kMaxHalfIndex; ++n) {
            const double term = number(2 * n) / fact * upow;
            sum += term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
            fact *= static_cast<double>(2 * n + 1) * static_cast<double>(2 * n + 2);
            upow *= u * u;
        }
        return sum;
    }
    double value = 1.0 / std::expm1(u) - 1.0 / u + 0.5;
    double fact = 2.0;
    double upow = u;
    for (int n = 1; n < N; ++n) {
        value -= number(2 * n) / fact * upow;
        fact *= static_cast<double>(2 * n + 1) * static_cast<double>(2 * n + 2);
        upow *= u * u;
    }
    return value;
}

}  // namespace certzeta::bernoulli
