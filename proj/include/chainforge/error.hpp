/* Copyright (C) 2026 the chainforge authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef CHAINFORGE_ERROR_HPP
#define CHAINFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chainforge {

/// Domain error carrying a stable machine-readable code
/// ("NotCoprime", "SizeExceeded", ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string msg)
      : std::runtime_error(code + ": " + msg),
        code_(std::move(code)),
        message_(std::move(msg)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string code_;
  std::string message_;
};

[[noreturn]] inline void raise(const char* code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace chainforge

#endif
