#include "qec/parallel.hpp"

#include <cstdlib>

namespace qec {

int worker_limit() {
    if (const char* env = std::getenv("QEC_THREADS")) {
        const int cap = std::atoi(env);
        return cap >= 1 ? cap : 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace qec
