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

#ifndef TWISTGEN_COMMON_IO_H_
#define TWISTGEN_COMMON_IO_H_

#include <filesystem>
#include <string>
#include <vector>

namespace twistgen {

// Reads all lines (without trailing newline). Throws DataError if unreadable.
std::vector<std::string> ReadLines(const std::filesystem::path& path);

// Like ReadLines but drops blank lines and lines starting with '#'.
std::vector<std::string> ReadDataLines(const std::filesystem::path& path);

std::string ReadFileToString(const std::filesystem::path& path);

// Creates parent directories as needed.
void WriteStringToFile(const std::filesystem::path& path,
                       const std::string& contents);

void WriteLines(const std::filesystem::path& path,
                const std::vector<std::string>& lines);

}  // namespace twistgen

#endif  // TWISTGEN_COMMON_IO_H_
