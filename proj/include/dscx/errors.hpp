#ifndef DSCX_ERRORS_HPP
#define DSCX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dscx {

/// Invalid argument or out-of-range request.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operation incompatible with the growth model already fixed on a complex.
class constraint_violation : public std::runtime_error {
public:
    explicit constraint_violation(const std::string& msg) : std::runtime_error(msg) {}
};

/// Request refused by a desk-scale guard. `guard` names the limit that fired,
/// `override_hint` names the flag that lifts it.
class resource_error : public std::runtime_error {
public:
    resource_error(const std::string& msg, std::string guard, std::string override_hint)
        : std::runtime_error(msg), guard(std::move(guard)), override_hint(std::move(override_hint)) {}
    std::string guard;
    std::string override_hint;
};

/// A computation had fewer data points than the requested estimator needs.
class insufficient_data : public std::runtime_error {
public:
    explicit insufficient_data(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dscx

#endif
