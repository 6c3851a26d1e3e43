#ifndef STRANDLAB_ERRORS_HPP
#define STRANDLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace strandlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPureError : Error {
    explicit NotPureError(const std::string& what) : Error(what) {}
};

struct WrongCardinalityError : Error {
    explicit WrongCardinalityError(const std::string& what) : Error(what) {}
};

struct OutOfRangeError : Error {
    explicit OutOfRangeError(const std::string& what) : Error(what) {}
};

struct InvalidShapeError : Error {
    explicit InvalidShapeError(const std::string& what) : Error(what) {}
};

struct ShapeMismatchError : Error {
    explicit ShapeMismatchError(const std::string& what) : Error(what) {}
};

struct NotComposableError : Error {
    explicit NotComposableError(const std::string& what) : Error(what) {}
};

struct NotAComplexError : Error {
    explicit NotAComplexError(const std::string& what) : Error(what) {}
};

struct NotMinimalError : Error {
    explicit NotMinimalError(const std::string& what) : Error(what) {}
};

struct NonHomogeneousError : Error {
    explicit NonHomogeneousError(const std::string& what) : Error(what) {}
};

struct LabelMismatchError : Error {
    explicit LabelMismatchError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace strandlab

#endif
