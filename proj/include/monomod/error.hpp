#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monomod {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input. offset is a byte offset for formulas, a line number for line-oriented files.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A desk-scale limit was exceeded (world cap, atom cap, ...).
class CapacityError : public Error {
public:
    using Error::Error;
};

// Structurally invalid input that parsed fine (unknown world, non-monotone delta, ...).
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace monomod
