#include "mvlab/budget.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace mvlab {

unsigned worker_count() {
    if (const char* env = std::getenv("MVLAB_THREADS")) {
        try {
            auto v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    auto hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace mvlab
