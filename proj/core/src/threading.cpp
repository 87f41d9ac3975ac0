#include "qccs/threading.hpp"

#include <cstdlib>
#include <string>

namespace qccs {

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("QCCS_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
            // Unparseable override falls through to the hardware default.
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace qccs
