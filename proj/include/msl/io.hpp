// Copyright 2026 The Multisecretary Lab Authors.
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

#ifndef MSL_IO_HPP_
#define MSL_IO_HPP_

#include <string>
#include <vector>

namespace msl {

inline constexpr int kSchemaVersion = 1;

// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

double parse_double(const std::string& token);

// Splits CSV text into rows of string fields, skipping blank lines
// and '#' comment lines (the schema header).
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace msl

#endif  // MSL_IO_HPP_
