#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace catdeco {

// Every contract violation raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Non-fatal findings (boundary leakage and the like) collected by operations
// that accept an optional sink.
struct Diagnostics {
    std::vector<std::string> warnings;

    void warn(std::string msg) { warnings.push_back(std::move(msg)); }
    bool empty() const { return warnings.empty(); }
};

}  // namespace catdeco
