#ifndef BILAV_ERRORS_HPP
#define BILAV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bilav {

/* Validation failures carry the name of the violated precondition. */

struct CompositeModulus : std::invalid_argument {
    explicit CompositeModulus(const std::string& msg) : std::invalid_argument(msg) {}
};

struct TooSmall : std::invalid_argument {
    explicit TooSmall(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ZeroY : std::invalid_argument {
    explicit ZeroY(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ZeroShift : std::invalid_argument {
    explicit ZeroShift(const std::string& msg) : std::invalid_argument(msg) {}
};

struct MissingMeta : std::invalid_argument {
    explicit MissingMeta(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ScanTooLarge : std::invalid_argument {
    explicit ScanTooLarge(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InvalidCurve : std::invalid_argument {
    explicit InvalidCurve(const std::string& msg) : std::invalid_argument(msg) {}
};

struct IoFailure : std::runtime_error {
    explicit IoFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bilav

#endif
