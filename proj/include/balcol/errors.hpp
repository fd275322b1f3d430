#pragma once

#include <stdexcept>
#include <string>

namespace balcol {

// Malformed or inconsistent user input (bad files, mismatched lengths,
// instances too large for exhaustive search).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A construction invariant failed. Never caused by valid input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

#define BALCOL_CHECK(cond, msg)                                              \
    do {                                                                     \
        if (!(cond)) throw ::balcol::InternalError(std::string(msg));        \
    } while (0)

}  // namespace balcol
