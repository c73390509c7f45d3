#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brauercat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Source and target arities of two morphisms do not line up.
struct ArityError : Error {
    using Error::Error;
};

// An expansion or memory guard was hit (antisymmetrizer size, rewrite term
// bound, tensor entry count, oracle dimension).
struct CapExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t at)
        : Error(msg + " (at byte offset " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset;
};

struct SchemaError : Error {
    SchemaError(const std::string& msg, const std::string& where)
        : Error(msg + " (at " + where + ")"), pointer(where) {}
    std::string pointer;
};

}  // namespace brauercat
