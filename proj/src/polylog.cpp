#include "certzeta/polylog.hpp"

#include <cmath>
#include <sstream>

#include "certzeta/errors.hpp"

namespace certzeta {

PolylogResult polylog_exp(Complex order, Complex log_argument) {
    const double decay = -log_argument.real();
    if (decay < 0.0) {
        std::ostringstream msg;
        msg << "polylog series diverges: |e^x| > 1 for x = " << log_argument;
        throw DomainError(msg.str());
    }
    if (log_argument == Complex(0.0, 0.0) && order.real() <= 1.0)
        throw DomainError("polylog diverges at argument 1 for Re(order) <= 1");
    if (decay < kPolylogMinDecay)
        throw DomainError("polylog argument too close to unit circle for direct summation");

    const double sigma = order.real();
    const double r = std::exp(-decay);
    const std::int64_t cap = max_terms();

    // Terms |w|^n n^{-sigma}; once the ratio ((n+1)/n)^{-sigma} r drops below
    // one the tail is bounded by a geometric series.
    Complex sum = 0.0;
    for (std::int64_t n = 1; n <= cap; ++n) {
        const double nd = static_cast<double>(n);
        const Complex term = std::exp(nd * log_argument - order * std::log(nd));
        sum += term;
        const double growth = sigma < 0.0 ? std::pow((nd + 2.0) / (nd + 1.0), -sigma) : 1.0;
        const double q = growth * r;
        if (q < 1.0) {
            const double next = std::abs(term) * r * (sigma < 0.0 ? std::pow((nd + 1.0) / nd, -sigma) : 1.0);
            const double tail = next / (1.0 - q);
            if (tail <= 1e-17 * std::abs(sum) || tail == 0.0) return {sum, tail, n};
        }
    }
    throw NumericError("polylog series did not converge within CERTZETA_MAX_TERMS terms");
}

}  // namespace certzeta
