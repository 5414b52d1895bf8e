#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace purepoly {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
    /// Stable machine-readable name, used by the CLI and corpus runner.
    virtual const char* kind() const noexcept { return "Error"; }
};

class ParseError : public Error {
   public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }
    const char* kind() const noexcept override { return "ParseError"; }

   private:
    std::size_t position_;
};

class BudgetExceeded : public Error {
   public:
    BudgetExceeded(const std::string& message, unsigned long reached)
        : Error(message + " (reached iterate " + std::to_string(reached) + ")"), reached_(reached) {}
    /// Index of the last iterate that was successfully computed.
    unsigned long reached() const noexcept { return reached_; }
    const char* kind() const noexcept override { return "BudgetExceeded"; }

   private:
    unsigned long reached_;
};

class NegativeValuation : public Error {
   public:
    explicit NegativeValuation(std::size_t index)
        : Error("coefficient of x^" + std::to_string(index) + " has negative valuation"), index_(index) {}
    std::size_t index() const noexcept { return index_; }
    const char* kind() const noexcept override { return "NegativeValuation"; }

   private:
    std::size_t index_;
};

class NotPrime : public Error {
   public:
    explicit NotPrime(const std::string& value) : Error(value + " is not a supported prime") {}
    const char* kind() const noexcept override { return "NotPrime"; }
};

class ZeroEndCoefficient : public Error {
   public:
    using Error::Error;
    const char* kind() const noexcept override { return "ZeroEndCoefficient"; }
};

class ShapeMismatch : public Error {
   public:
    using Error::Error;
    const char* kind() const noexcept override { return "ShapeMismatch"; }
};

/// Violated operation precondition (degree too small, invalid parameter, ...).
class PreconditionError : public Error {
   public:
    using Error::Error;
    const char* kind() const noexcept override { return "PreconditionError"; }
};

}  // namespace purepoly
