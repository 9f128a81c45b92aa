#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace walker {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class UnboundSymbol : public Error {
public:
    explicit UnboundSymbol(const std::string& symbol)
        : Error("unbound symbol: " + symbol), symbol_(symbol) {}
    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

class SubstitutionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::set<std::string> expected, const std::string& message);
    std::size_t offset() const noexcept { return offset_; }
    const std::set<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::set<std::string> expected_;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class ValueError : public Error {
public:
    using Error::Error;
};

class SamplingExhausted : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    explicit UnknownName(const std::string& name) : Error("unknown name: " + name) {}
};

enum class FamilyErrorCode {
    MuZero,
    ArgumentViolation,
    ZeroDenominator,
    BetaEqualsMu,
    CaseMismatch,
    Precondition,
};

const char* to_string(FamilyErrorCode code);

class FamilyError : public Error {
public:
    FamilyError(FamilyErrorCode code, const std::string& detail)
        : Error(std::string(to_string(code)) + ": " + detail), code_(code) {}
    FamilyErrorCode code() const noexcept { return code_; }

private:
    FamilyErrorCode code_;
};

}  // namespace walker
