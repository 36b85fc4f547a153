#include "verlie/guards.hpp"

#include <cstdlib>

namespace verlie {

long long guard_scale() {
    static long long scale = [] {
        const char* env = std::getenv("VERLIE_GUARD_SCALE");
        if (!env) return 1LL;
        long long s = std::atoll(env);
        return s >= 1 ? s : 1LL;
    }();
    return scale;
}

long long guard_limit(long long base) {
    return base * guard_scale();
}

void guard_check(long long work, long long base, const std::string& what) {
    if (work > guard_limit(base))
        throw GuardError("resource guard exceeded: " + what + " (" + std::to_string(work) +
                         " > " + std::to_string(guard_limit(base)) +
                         "; raise VERLIE_GUARD_SCALE to override)");
}

}  // namespace verlie
