#ifndef POINTINT_ERRORS_HPP
#define POINTINT_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace pointint {

// Thrown when a Y-operator (or the two-body linear system behind it) is
// evaluated at a spectral parameter on a pole of its closed form.
class PoleError : public std::runtime_error {
public:
    PoleError(const std::string& what, std::complex<double> denominator)
        : std::runtime_error(what), denominator_(denominator) {}

    std::complex<double> denominator() const { return denominator_; }

private:
    std::complex<double> denominator_;
};

// Thrown when boundary-condition parameters violate their defining
// constraint (ad - bc = 1, or h_+ = -h_-).
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

} // namespace pointint

#endif
