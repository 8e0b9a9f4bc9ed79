#pragma once

#include <stdexcept>
#include <string>

namespace certzeta {

// A hypothesis of the requested evaluation is violated (pole, branch cut,
// sector, index range). Maps to CZ_ERR_DOMAIN in the C API.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// The numerical machinery failed to reach its stated accuracy: quadrature
// non-convergence, a bracketing failure, an exhausted term budget.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace certzeta
