#pragma once

#include <stdexcept>
#include <string>

namespace amr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Panel entities could not be turned into a concept.
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// A file or document could not be read into a schema or instance.
class IngestionError : public Error {
 public:
  using Error::Error;
};

/// Answer generation (or synthetic instance generation) could not proceed.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Text syntax error in the polynomial / ideal notation.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace amr
