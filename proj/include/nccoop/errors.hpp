#ifndef NCCOOP_ERRORS_HPP
#define NCCOOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nccoop {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input rejected by a precondition or a structural invariant.
class validation_error : public error {
 public:
  using error::error;
};

/// Malformed text: words, rationals, JSON documents.
class parse_error : public validation_error {
 public:
  using validation_error::validation_error;
};

/// restrict() was asked for a subset containing no letter of the word.
class empty_restriction_error : public validation_error {
 public:
  using validation_error::validation_error;
};

/// A non-crossing operation was handed a crossing word.
class crossing_word_error : public validation_error {
 public:
  using validation_error::validation_error;
};

/// An expectation was requested on a monomial the functional does not define.
class missing_moment_error : public error {
 public:
  explicit missing_moment_error(std::string monomial)
      : error("missing moment: E(" + monomial + ") is not defined"),
        monomial_(std::move(monomial)) {}

  const std::string& monomial() const noexcept { return monomial_; }

 private:
  std::string monomial_;
};

}  // namespace nccoop

#endif  // NCCOOP_ERRORS_HPP
