#pragma once

#include <stdexcept>
#include <string>

namespace coherence {

// Domain errors: violated preconditions of library operations. The CLI maps
// these to exit code 1; usage errors are handled by the argument parser and
// map to exit code 2.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct NoPositiveElement : DomainError {
    explicit NoPositiveElement(const std::string& m) : DomainError("NoPositiveElement", m) {}
};

struct QueryTooLarge : DomainError {
    explicit QueryTooLarge(const std::string& m) : DomainError("QueryTooLarge", m) {}
};

struct InvalidGenerator : DomainError {
    explicit InvalidGenerator(const std::string& m) : DomainError("InvalidGenerator", m) {}
};

struct SizeLimit : DomainError {
    explicit SizeLimit(const std::string& m) : DomainError("SizeLimit", m) {}
};

struct BadLeaf : DomainError {
    explicit BadLeaf(const std::string& m) : DomainError("BadLeaf", m) {}
};

struct NoThreeStage : DomainError {
    explicit NoThreeStage(const std::string& m) : DomainError("NoThreeStage", m) {}
};

struct WrongClass : DomainError {
    explicit WrongClass(const std::string& m) : DomainError("WrongClass", m) {}
};

struct CeilingReached : DomainError {
    explicit CeilingReached(const std::string& m) : DomainError("CeilingReached", m) {}
};

struct StageTooLow : DomainError {
    explicit StageTooLow(const std::string& m) : DomainError("StageTooLow", m) {}
};

struct InstabilityZero : DomainError {
    explicit InstabilityZero(const std::string& m) : DomainError("InstabilityZero", m) {}
};

struct ParseError : DomainError {
    explicit ParseError(const std::string& m) : DomainError("ParseError", m) {}
};

struct SchemaError : DomainError {
    explicit SchemaError(const std::string& m) : DomainError("SchemaError", m) {}
};

struct InvariantError : DomainError {
    explicit InvariantError(const std::string& m) : DomainError("InvariantError", m) {}
};

}  // namespace coherence
