#pragma once

#include <stdexcept>
#include <string>

namespace atomlat {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid input: bad constant names, mismatched tables, violated preconditions.
struct ValueError : Error {
    using Error::Error;
};

// A set of atoms does not spawn a valid model (some constant has no atom
// below it).
struct AxiomError : Error {
    using Error::Error;
};

// An exhaustive enumeration was refused because the universe exceeds the guard.
struct GuardError : Error {
    using Error::Error;
};

// Syntax or validation error in problem/model text, with a 1-based location.
struct ParseError : Error {
    int line;
    int column;

    ParseError(const std::string& message, int line_, int column_)
        : Error(message), line(line_), column(column_) {}
};

} // namespace atomlat
