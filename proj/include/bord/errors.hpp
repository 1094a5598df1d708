#pragma once

#include <stdexcept>
#include <string>

namespace bord {

/// Malformed or inconsistent caller input (bad names, dimension mismatch, inhomogeneous data).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A query outside the degree range in which a presentation or computation is asserted valid.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Fixture data that contradicts what the engine derives from it.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed at runtime (e.g. an odd pairing that must be even).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace bord
