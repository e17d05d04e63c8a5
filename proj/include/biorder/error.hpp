/*
 *   Copyright 2026 The biorder authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BIORDER_ERROR_HPP_
#define BIORDER_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace biorder {

  enum class ErrorKind {
    NotAPoset,
    NotALattice,
    Unbounded,
    OutOfInterval,
    NotComplementary,
    NotComplementedModular,
    CapExceeded,
    UndefinedProduct,
    IncompatiblePair,
    NotABasis,
    NotARing,
    TooLarge,
    NotIdempotent,
    NotRegular,
    ParseError,
    UnknownElement,
    HypothesisFailed,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  //! Every failure raised by the library carries one of the kinds above and
  //! a human-readable witness.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace biorder

#endif  // BIORDER_ERROR_HPP_
