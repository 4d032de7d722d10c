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

#pragma once

#include <string_view>

namespace se2form {

enum class LogLevel { kWarn = 0, kInfo = 1, kDebug = 2 };

// Threshold parsed once from the SE2FORM_LOG environment variable
// ("info" or "debug"; anything else means warnings only).
LogLevel LogThreshold();

// All diagnostics go to stderr so they never mix with exported data.
void LogWarn(std::string_view message);
void LogInfo(std::string_view message);
void LogDebug(std::string_view message);

}  // namespace se2form
