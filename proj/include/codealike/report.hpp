// Copyright 2026 The CodeAlike Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CODEALIKE_REPORT_HPP_
#define CODEALIKE_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "codealike/matcher.hpp"

namespace codealike {

inline constexpr int kReportSchemaVersion = 1;

// Splits on '\n', dropping one trailing '\r' per line. A final newline does
// not start an extra line.
std::vector<std::string> SplitLines(std::string_view text);

std::string RenderText(const ComparisonReport& report);

// Canonical JSON: sorted keys, no insignificant whitespace, scores with four
// decimals. See docs/report_schema.md.
std::string RenderJson(const ComparisonReport& report);

// Inverse of RenderJson (scores come back rounded to four decimals).
// Throws std::invalid_argument on malformed input.
ComparisonReport ParseReportJson(std::string_view json);

// Self-contained static page: primary source on the left, one panel per
// suspect on the right listing only the matched lines (plus one line of
// context) with their original numbers.
std::string RenderHtml(const ComparisonReport& report);

std::string HtmlEscape(std::string_view text);

}  // namespace codealike

#endif  // CODEALIKE_REPORT_HPP_
