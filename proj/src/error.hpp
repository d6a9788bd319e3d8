// Copyright 2026 The InfraNotes Authors
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

#ifndef INFRANOTES_ERROR_HPP
#define INFRANOTES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace infranotes {

enum class Errc {
  EmptyStroke,
  DegenerateTriple,
  DegenerateRegion,
  NonMonotonicTime,
  BadProbability,
  NoGlyphPlan,
  TooShort,
  OracleTooLarge,
  OrphanErase,
  CrossPageMask,
  BeforePage,
  OutOfSession,
  UnknownPage,
  ParseError,
  IoError,
  InvalidArgument,
};

const char* errc_name(Errc code);

/// Domain error carrying a stable code plus a human-readable detail message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}
  explicit Error(Errc code) : Error(code, "") {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace infranotes

#endif  // INFRANOTES_ERROR_HPP
