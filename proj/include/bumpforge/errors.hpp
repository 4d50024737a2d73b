#ifndef BUMPFORGE_ERRORS_HPP
#define BUMPFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bumpforge {

// Numerical failures (non-convergence, singular or badly conditioned
// systems). The CLI maps these to exit code 3.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

struct RemezError : NumericalError {
  explicit RemezError(const std::string& what) : NumericalError(what) {}
};

struct SingularSystemError : NumericalError {
  explicit SingularSystemError(const std::string& what) : NumericalError(what) {}
};

struct ConditioningError : NumericalError {
  explicit ConditioningError(const std::string& what) : NumericalError(what) {}
};

}  // namespace bumpforge

#endif
