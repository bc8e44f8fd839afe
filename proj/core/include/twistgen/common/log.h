// Copyright (c) 2026 twistgen contributors
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

#ifndef TWISTGEN_COMMON_LOG_H_
#define TWISTGEN_COMMON_LOG_H_

#include <sstream>
#include <string>

namespace twistgen {

enum class LogLevel { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3 };

void SetLogLevel(LogLevel level);
LogLevel GetLogLevel();
void LogMessage(LogLevel level, const std::string& msg);

namespace internal {

class LogLine {
 public:
  explicit LogLine(LogLevel level) : level_(level) {}
  ~LogLine() { LogMessage(level_, ss_.str()); }

  template <typename T>
  LogLine& operator<<(const T& v) {
    ss_ << v;
    return *this;
  }

 private:
  LogLevel level_;
  std::ostringstream ss_;
};

}  // namespace internal
}  // namespace twistgen

#define TG_DEBUG() ::twistgen::internal::LogLine(::twistgen::LogLevel::kDebug)
#define TG_INFO() ::twistgen::internal::LogLine(::twistgen::LogLevel::kInfo)
#define TG_WARN() ::twistgen::internal::LogLine(::twistgen::LogLevel::kWarn)
#define TG_ERROR() ::twistgen::internal::LogLine(::twistgen::LogLevel::kError)

#endif  // TWISTGEN_COMMON_LOG_H_
