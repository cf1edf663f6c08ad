#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdes {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    DimensionError(std::size_t left, std::size_t right)
        : Error("dimension mismatch: " + std::to_string(left) + " vs " + std::to_string(right)),
          left_(left), right_(right) {}

    std::size_t left() const noexcept { return left_; }
    std::size_t right() const noexcept { return right_; }

private:
    std::size_t left_;
    std::size_t right_;
};

class UnknownEvent : public Error {
public:
    explicit UnknownEvent(const std::string& name)
        : Error("unknown event '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class SemanticsMismatch : public Error {
public:
    using Error::Error;
};

class NotCrisp : public Error {
public:
    using Error::Error;
};

class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

class TargetNotReachable : public Error {
public:
    using Error::Error;
};

class StringNotInLanguage : public Error {
public:
    using Error::Error;
};

class MNotPrefixClosed : public Error {
public:
    using Error::Error;
};

class KNotContainedInM : public Error {
public:
    using Error::Error;
};

class TreeTooLarge : public Error {
public:
    using Error::Error;
};

/// Degree outside [0,1].
class RangeError : public Error {
public:
    using Error::Error;
};

/// Grid or vector whose shape disagrees with the declared state count.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Malformed input; carries the line (when known) and the offending field.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string field = {}, std::size_t line = 0)
        : Error(compose(message, field, line)), field_(std::move(field)), line_(line) {}

    const std::string& field() const noexcept { return field_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string compose(const std::string& message, const std::string& field, std::size_t line)
    {
        std::string out;
        if (line != 0)
            out += "line " + std::to_string(line) + ": ";
        if (!field.empty())
            out += field + ": ";
        return out + message;
    }

    std::string field_;
    std::size_t line_;
};

} // namespace fdes
