#pragma once

#include <stdexcept>
#include <string>

namespace qmf {

// A value was requested outside the determined coefficient window, or an
// operation would produce an empty window. Never degrades to a silent zero.
class insufficient_precision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Series inversion of a series whose leading coefficient vanishes.
class not_invertible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qmf
