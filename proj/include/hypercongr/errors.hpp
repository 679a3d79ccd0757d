#pragma once

#include <stdexcept>
#include <string>

namespace hypercongr {

// A rational whose denominator is divisible by p has no image in Z/p^k.
struct NotPAdicallyIntegral : std::domain_error {
    using std::domain_error::domain_error;
};

// Binary power-series operations require both operands to share one order.
struct SeriesOrderMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Series inversion requires a nonzero constant coefficient.
struct NonUnitConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

// A denominator Pochhammer factor vanished while summing term `term_index`.
struct PoleInLowerParameter : std::domain_error {
    int term_index;
    int parameter_index;
    PoleInLowerParameter(int term, int param)
        : std::domain_error("lower parameter " + std::to_string(param) +
                            " hits a pole at term " + std::to_string(term)),
          term_index(term),
          parameter_index(param) {}
};

// The Pochhammer prefactor of the terminating Whipple identity contains a zero factor.
struct PrefactorPole : std::domain_error {
    using std::domain_error::domain_error;
};

// A suite was asked to verify a prime outside its residue-class hypothesis.
struct WrongResidueClass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PoleAtNonpositiveInteger : std::domain_error {
    using std::domain_error::domain_error;
};

// The convergent-mode tail bound could not be met within the iteration cap.
struct NonConvergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hypercongr
