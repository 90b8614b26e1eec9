#pragma once

#include <stdexcept>
#include <string>

namespace sdgbench {

// Base class for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Data that is structurally valid but unusable for the requested operation
// (e.g. a synthetic training set whose target has a single observed class).
// Orchestration treats this as a soft failure: the cell is recorded as
// degenerate instead of aborting the sweep.
class DegenerateData : public Error {
 public:
  using Error::Error;
};

}  // namespace sdgbench
