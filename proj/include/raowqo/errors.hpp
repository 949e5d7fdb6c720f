#pragma once

#include <stdexcept>
#include <string>

namespace raowqo {

// Input is too large for an exhaustive procedure.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t size, std::size_t cap)
        : std::runtime_error("size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
          size_(size), cap_(cap) {}
    std::size_t size() const { return size_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t size_;
    std::size_t cap_;
};

// A label does not fit the shape of its order descriptor.
class TypeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two labelled objects are compared under different order descriptors.
class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotGraphicError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class TooShort : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class TopGraphMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LabelNotDominated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a reconstructed graph fails its own degree accounting. Always a bug.
class ReconstructionDegreeMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace raowqo
