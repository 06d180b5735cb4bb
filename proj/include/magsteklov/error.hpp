#pragma once

#include <stdexcept>
#include <string>

namespace magsteklov {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A series failed to reach its tolerance within the term cap.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double tail_estimate)
        : Error(what), tail_estimate_(tail_estimate) {}
    double tail_estimate() const noexcept { return tail_estimate_; }

private:
    double tail_estimate_;
};

/// A Gamma pole or a vanishing Laguerre denominator. `t` is the excluded
/// parameter value when the pole came from an eigenvalue formula.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what, double t = 0.0) : Error(what), t_(t) {}
    double t() const noexcept { return t_; }

private:
    double t_;
};

/// The minimizing branch sits at the enumeration cutoff, so a smaller
/// eigenvalue may exist beyond it.
class CutoffInsufficient : public Error {
public:
    CutoffInsufficient(const std::string& what, int k_max) : Error(what), k_max_(k_max) {}
    int k_max() const noexcept { return k_max_; }

private:
    int k_max_;
};

class TruncationError : public Error {
public:
    using Error::Error;
};

class DegeneracyError : public Error {
public:
    using Error::Error;
};

class NormalizationError : public Error {
public:
    using Error::Error;
};

class ConfigurationError : public Error {
public:
    using Error::Error;
};

}  // namespace magsteklov
