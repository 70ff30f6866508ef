#pragma once

#include <stdexcept>
#include <string>

namespace invaut {

enum class ErrorKind { InvalidInput, TooLarge, NotFixed, NotInvariant };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed arguments: mismatched lengths, bad permutations, parse failures.
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(ErrorKind::InvalidInput, what) {}
};

/// A resource guard tripped (enumeration size, n > 12 for exact groups, ...).
class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& what) : Error(ErrorKind::TooLarge, what) {}
};

/// A word that should be fixed by the involution is not.
class NotFixed : public Error {
public:
    explicit NotFixed(const std::string& what) : Error(ErrorKind::NotFixed, what) {}
};

/// The involution is not an automorphism of the code.
class NotInvariant : public Error {
public:
    explicit NotInvariant(const std::string& what) : Error(ErrorKind::NotInvariant, what) {}
};

}  // namespace invaut
