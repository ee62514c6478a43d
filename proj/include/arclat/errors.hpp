#pragma once

#include <stdexcept>
#include <string>

namespace arclat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pair of elements without a unique meet or join.
struct NotALattice : Error {
    int a, b;
    NotALattice(int a_, int b_, const std::string& what)
        : Error(what), a(a_), b(b_) {}
};

struct ScopeExceeded : Error { using Error::Error; };
struct NotADiagram : Error { using Error::Error; };
struct NotJoinIrreducible : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct InvalidArc : Error { using Error::Error; };
struct NotInConA : Error { using Error::Error; };
struct MalformedPartition : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace arclat
