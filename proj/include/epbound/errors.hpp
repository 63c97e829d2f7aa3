#pragma once

#include <stdexcept>
#include <string>

namespace epb {

// Computational failures carry enough state to diagnose the run that
// produced them; they are distinct from precondition violations, which
// use std::domain_error / std::invalid_argument.

class pole_proximity_error : public std::runtime_error {
public:
    pole_proximity_error(double energy, double pole)
        : std::runtime_error("propagator evaluated within guard band of pole at E=" +
                             std::to_string(pole)),
          energy_(energy), pole_(pole) {}
    double energy() const noexcept { return energy_; }
    double pole() const noexcept { return pole_; }

private:
    double energy_;
    double pole_;
};

class convergence_error : public std::runtime_error {
public:
    convergence_error(std::string what, double last_residual)
        : std::runtime_error(std::move(what)), last_residual_(last_residual) {}
    double last_residual() const noexcept { return last_residual_; }

private:
    double last_residual_;
};

class accuracy_error : public std::runtime_error {
public:
    accuracy_error(std::string what, double estimate, double error_estimate)
        : std::runtime_error(std::move(what)),
          estimate_(estimate), error_estimate_(error_estimate) {}
    double estimate() const noexcept { return estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double estimate_;
    double error_estimate_;
};

class branch_crossing_error : public std::runtime_error {
public:
    branch_crossing_error(double beta_lo, double beta_hi)
        : std::runtime_error("root branches approach within gap tolerance on beta interval [" +
                             std::to_string(beta_lo) + ", " + std::to_string(beta_hi) + "]"),
          beta_lo_(beta_lo), beta_hi_(beta_hi) {}
    double beta_lo() const noexcept { return beta_lo_; }
    double beta_hi() const noexcept { return beta_hi_; }

private:
    double beta_lo_;
    double beta_hi_;
};

class no_interior_minimum_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class singular_denominator_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace epb
