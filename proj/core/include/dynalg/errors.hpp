#pragma once

#include <stdexcept>
#include <string>

namespace dynalg {

/// Precondition violated by the caller (bad index, mismatched basis, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A list of algebra elements is not closed under the bracket.
class ClosureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical identity check exceeded its tolerance.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simultaneous eigenbasis construction hit an unresolved degeneracy.
class LabelingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotSemisimpleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedLabelError : public InputError {
public:
    using InputError::InputError;
};

}  // namespace dynalg
