#include "eisen/parallel.hpp"

#include <cstdlib>
#include <string>

namespace eisen {

int worker_count() {
  if (const char* env = std::getenv("EISEN_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace eisen
