#ifndef CEQ_ERRORS_HPP
#define CEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ceq {

enum class ErrorCode {
    MissingComposite,
    NonAssociative,
    BadIdentity,
    DanglingReference,
    CyclicGraph,
    NotFunctorial,
    SourceTargetMismatch,
    NotNatural,
    BadComponentTyping,
    TypingMismatch,
    TargetMismatch,
    UnknownObject,
    NotOpfibration,
    NotOpfibrationAt,
    NotPseudo,
    NotALift,
    BaseMismatch,
    EndpointMismatch,
    BackwardNotInitial,
    NotOverX,
    WrongBase,
    BoundTooLargeForBase,
    InternalInvariantViolation,
    ParseError,
    UnresolvedReference,
    ValidationError,
};

const char* error_code_name(ErrorCode code);

class CeqError : public std::runtime_error {
public:
    CeqError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw CeqError(code, message);
}

}  // namespace ceq

#endif
