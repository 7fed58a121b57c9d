#pragma once

#include <stdexcept>
#include <string>

namespace folindex {

// Exit-code taxonomy shared by the library and the CLI.
enum class ErrorKind {
    Parse = 1,
    Precondition = 2,
    Mismatch = 3,
    ResourceCap = 4,
};

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    // Short machine-readable tag, e.g. "non-isolated" or "extension-required".
    const std::string& code() const noexcept { return code_; }

   private:
    ErrorKind kind_;
    std::string code_;
};

class ParseError : public Error {
   public:
    explicit ParseError(const std::string& message) : Error(ErrorKind::Parse, "parse", message) {}
};

class PreconditionError : public Error {
   public:
    PreconditionError(std::string code, const std::string& message)
        : Error(ErrorKind::Precondition, std::move(code), message) {}
};

class DescriptorMismatch : public PreconditionError {
   public:
    explicit DescriptorMismatch(const std::string& message)
        : PreconditionError("descriptor-mismatch", message) {}
};

// Raised when a computation needs a root that does not live in the current
// field and a further extension would be a tower.
class ExtensionRequired : public PreconditionError {
   public:
    ExtensionRequired(std::string polynomial, const std::string& context)
        : PreconditionError("extension-required",
                            "extension required: " + polynomial + " has no root in the working field (" +
                                context + ")"),
          polynomial_(std::move(polynomial)) {}

    const std::string& polynomial() const noexcept { return polynomial_; }

   private:
    std::string polynomial_;
};

class ResourceCapError : public Error {
   public:
    ResourceCapError(std::string code, const std::string& message)
        : Error(ErrorKind::ResourceCap, std::move(code), message) {}
};

}  // namespace folindex
