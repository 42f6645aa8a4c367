#include "torus_zeta/parallel.hpp"

#include <cstdlib>
#include <string>

namespace tzeta {

unsigned max_workers() {
  static const unsigned cached = [] {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("TORUS_ZETA_THREADS")) {
      try {
        const long requested = std::stol(env);
        if (requested < 1) return 1u;
        return static_cast<unsigned>(
            std::min<long>(requested, static_cast<long>(hw)));
      } catch (...) {
        return hw;
      }
    }
    return hw;
  }();
  return cached;
}

}  // namespace tzeta
