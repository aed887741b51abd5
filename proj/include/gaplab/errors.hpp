#pragma once
// errors.hpp - failure taxonomy shared by the library and the CLI.
//
// The CLI maps these onto process exit codes:
//   std::invalid_argument -> 2, verification_error -> 3, budget_error -> 4.

#include <stdexcept>

namespace gaplab {

// An internal consistency check failed on data that should have satisfied it.
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured work limit was exhausted before the computation finished.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gaplab
