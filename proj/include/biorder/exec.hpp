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

#ifndef BIORDER_EXEC_HPP_
#define BIORDER_EXEC_HPP_

namespace biorder {

  //! Selects the kernel flavour. `serial` runs the plain reference loops,
  //! `parallel` runs the OpenMP kernels. Both produce identical output.
  enum class Exec { serial, parallel };

  //! Sets the OpenMP thread count used by `Exec::parallel` kernels; a value
  //! of 0 leaves the runtime default in place.
  void set_thread_count(int n);
  int  thread_count();

}  // namespace biorder

#endif  // BIORDER_EXEC_HPP_
