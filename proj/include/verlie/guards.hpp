#ifndef VERLIE_GUARDS_HPP
#define VERLIE_GUARDS_HPP

#include <stdexcept>
#include <string>

namespace verlie {

/// Thrown when a sweep would exceed its resource guard. Guards are hard
/// errors, not silent truncation: an exhaustive "none found" must really be
/// exhaustive.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Guard limits scale with the VERLIE_GUARD_SCALE environment variable.
long long guard_scale();
long long guard_limit(long long base);
void guard_check(long long work, long long base, const std::string& what);

}  // namespace verlie

#endif
