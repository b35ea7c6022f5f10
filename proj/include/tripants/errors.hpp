#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tripants {

// Domain error carrying a stable machine-readable code (e.g. "NotATriangle",
// "ArcNotInTriple"). The CLI maps codes to exit statuses; tests match on them.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

} // namespace tripants
