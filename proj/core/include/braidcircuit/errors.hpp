// Copyright 2026 The braidcircuit Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidcircuit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
   public:
    using Error::Error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

/// Squared spectrum does not sum to one.
class NotNormalized : public Error {
   public:
    using Error::Error;
};

class UnsupportedParameter : public Error {
   public:
    using Error::Error;
};

class UnsupportedLayout : public Error {
   public:
    using Error::Error;
};

class ResourceLimit : public Error {
   public:
    using Error::Error;
};

/// Forced measurements annihilated the trajectory (Frobenius norm below the guard).
class ZeroNormTrajectory : public Error {
   public:
    using Error::Error;
};

class InvalidConfig : public Error {
   public:
    using Error::Error;
};

class IoError : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    ParseError(const std::string &what, std::size_t byte_offset);
    std::size_t byte_offset() const noexcept {
        return offset_;
    }

   private:
    std::size_t offset_;
};

}  // namespace braidcircuit
