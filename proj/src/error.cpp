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

#include "biorder/error.hpp"
#include "biorder/exec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace biorder {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::NotAPoset: return "NotAPoset";
      case ErrorKind::NotALattice: return "NotALattice";
      case ErrorKind::Unbounded: return "Unbounded";
      case ErrorKind::OutOfInterval: return "OutOfInterval";
      case ErrorKind::NotComplementary: return "NotComplementary";
      case ErrorKind::NotComplementedModular: return "NotComplementedModular";
      case ErrorKind::CapExceeded: return "CapExceeded";
      case ErrorKind::UndefinedProduct: return "UndefinedProduct";
      case ErrorKind::IncompatiblePair: return "IncompatiblePair";
      case ErrorKind::NotABasis: return "NotABasis";
      case ErrorKind::NotARing: return "NotARing";
      case ErrorKind::TooLarge: return "TooLarge";
      case ErrorKind::NotIdempotent: return "NotIdempotent";
      case ErrorKind::NotRegular: return "NotRegular";
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::UnknownElement: return "UnknownElement";
      case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    }
    return "Unknown";
  }

  void set_thread_count(int n) {
#ifdef _OPENMP
    if (n > 0) {
      omp_set_num_threads(n);
    }
#else
    (void) n;
#endif
  }

  int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
  }

}  // namespace biorder
