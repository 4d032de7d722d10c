// Copyright 2026 The se2form Authors
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

#include "se2form/log.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace se2form {
namespace {

LogLevel ParseThreshold() {
  const char* env = std::getenv("SE2FORM_LOG");
  if (env == nullptr) return LogLevel::kWarn;
  if (std::strcmp(env, "debug") == 0) return LogLevel::kDebug;
  if (std::strcmp(env, "info") == 0) return LogLevel::kInfo;
  return LogLevel::kWarn;
}

void Emit(const char* tag, std::string_view message) {
  std::fprintf(stderr, "[se2form %s] %.*s\n", tag,
               static_cast<int>(message.size()), message.data());
}

}  // namespace

LogLevel LogThreshold() {
  static const LogLevel threshold = ParseThreshold();
  return threshold;
}

void LogWarn(std::string_view message) { Emit("warn", message); }

void LogInfo(std::string_view message) {
  if (LogThreshold() >= LogLevel::kInfo) Emit("info", message);
}

void LogDebug(std::string_view message) {
  if (LogThreshold() >= LogLevel::kDebug) Emit("debug", message);
}

}  // namespace se2form
