#include "torsionlab/config.hpp"

#include <cstdlib>
#include <string>

namespace torsionlab {

  double default_ceiling() {
    if (char const* env = std::getenv("TORSIONLAB_CEILING")) {
      try {
        double v = std::stod(env);
        if (v > 0) {
          return v;
        }
      } catch (...) {
        // fall through to the default
      }
    }
    return 1e6;
  }

}  // namespace torsionlab
