#include "dirac/parallel.hpp"

#include <cstdlib>
#include <string>

namespace dirac {

int max_threads() {
    static const int cached = [] {
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw < 1) hw = 1;
        if (const char* env = std::getenv("DIRAC_WALK_THREADS")) {
            try {
                const int cap = std::stoi(env);
                if (cap >= 1) return std::min(hw, cap);
            } catch (const std::exception&) {
            }
        }
        return hw;
    }();
    return cached;
}

}  // namespace dirac
