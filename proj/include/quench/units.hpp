#pragma once

#include <stdexcept>

namespace quench {

// Natural units per scenario; the defaults match hbar = m = a = 1.
struct UnitsConvention {
  double hbar = 1.0;
  double mass = 1.0;
  double length_scale = 1.0;

  void validate() const {
    if (!(hbar > 0.0 && mass > 0.0 && length_scale > 0.0))
      throw std::invalid_argument("UnitsConvention: all scales must be > 0");
  }
};

}  // namespace quench
