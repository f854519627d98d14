// Copyright 2026 The bosonsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOSONSIM_ERRORS_H
#define BOSONSIM_ERRORS_H

#include <stdexcept>
#include <string>

namespace bosonsim {

/// Base of every error raised by the library. The C API maps each subclass
/// onto its own status code.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch: non-square where square is required, wrong mode count.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// A documented precondition was violated by the caller.
class ContractError : public Error {
   public:
    using Error::Error;
};

/// A resource guard refused the request (factorial or exponential blowup).
class RefusalError : public Error {
   public:
    using Error::Error;
};

/// The data is inconsistent with the model, e.g. an impossible event.
class DataError : public Error {
   public:
    using Error::Error;
};

class IoError : public Error {
   public:
    using Error::Error;
};

/// Malformed file content.
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace bosonsim

#endif
