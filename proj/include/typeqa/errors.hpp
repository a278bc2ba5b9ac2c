#pragma once

#include <stdexcept>
#include <string>

namespace typeqa {

// Bad user-supplied data or configuration. The CLI maps this to exit code 1;
// any other exception reaching main is an internal error and exits with 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace typeqa
