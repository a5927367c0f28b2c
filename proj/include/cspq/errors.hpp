// Copyright 2026 The cspq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSPQ_ERRORS_HPP_INCLUDED
#define CSPQ_ERRORS_HPP_INCLUDED

#include <stdexcept>

namespace cspq {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input contains no strings.
class EmptySetError : public Error {
 public:
  using Error::Error;
};

/// Two strings (or a string and an assignment) disagree on length.
class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

/// A string of length zero was supplied.
class ZeroLengthError : public Error {
 public:
  using Error::Error;
};

/// A string index, position index or variable index is out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// The candidate enumeration would exceed the configured guard.
class SearchSpaceTooLargeError : public Error {
 public:
  using Error::Error;
};

/// The model has more variables than the exhaustive solver allows.
class TooManyVariablesError : public Error {
 public:
  using Error::Error;
};

/// The symbol-to-real mapping maps two alphabet symbols to the same value.
class NonInjectiveBijectionError : public Error {
 public:
  using Error::Error;
};

/// A numeric argument lies outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A byte sequence is not valid UTF-8.
class EncodingError : public Error {
 public:
  using Error::Error;
};

}  // namespace cspq

#endif  // CSPQ_ERRORS_HPP_INCLUDED
