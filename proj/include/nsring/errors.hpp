#pragma once

#include <stdexcept>

namespace nsring {

// Raised when a cross-checked identity that must hold for every valid input
// fails. It always indicates a bug in this library, never bad user input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace nsring
