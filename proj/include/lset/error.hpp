// Copyright 2026 The lset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace lset {

// Base class for every error raised by the library. The CLI maps these to
// exit code 2 (data error).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mixed widths/lengths where equal ones are required.
class WidthError : public Error {
public:
    using Error::Error;
};

// Malformed textual input. position() is the 0-based offset (or line number
// for line-oriented formats) of the first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, size_t position)
        : Error(what), position_(position) {}

    size_t position() const { return position_; }

private:
    size_t position_;
};

}  // namespace lset
