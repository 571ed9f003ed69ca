#pragma once

#include <stdexcept>
#include <string>

namespace sarkisov {

// Engine errors carry a stable machine-readable code alongside the message.
class EngineError : public std::runtime_error {
public:
    EngineError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline EngineError order_bound_exceeded(const std::string& what) {
    return EngineError("OrderBoundExceeded", what);
}
inline EngineError invalid_parameter(const std::string& what) {
    return EngineError("InvalidParameter", what);
}
inline EngineError degenerate_input(const std::string& what) {
    return EngineError("DegenerateInput", what);
}
inline EngineError not_isometry(const std::string& what) {
    return EngineError("NotIsometry", what);
}
inline EngineError no_swap_extension(const std::string& what) {
    return EngineError("NoSwapExtension", what);
}
inline EngineError not_minimal(const std::string& what) {
    return EngineError("NotMinimal", what);
}
inline EngineError infinite_group(const std::string& what) {
    return EngineError("InfiniteGroup", what);
}
inline EngineError witness_mismatch(const std::string& what) {
    return EngineError("WitnessMismatch", what);
}

}  // namespace sarkisov
