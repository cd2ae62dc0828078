#include "posat/parallel.hpp"

#include <cstdlib>
#include <string>

namespace posat {

int default_threads() {
  if (const char* env = std::getenv("POSAT_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // Fall through to the hardware default.
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int resolve_threads(int requested) { return requested > 0 ? requested : default_threads(); }

}  // namespace posat
