#pragma once

#include <stdexcept>
#include <string>

namespace aqc {

/// Inputs whose shapes or cross-references do not fit together.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A degree outside the declared truncation window was requested.
class WindowError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A consistency check that cannot fail on valid inputs did fail.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace aqc
