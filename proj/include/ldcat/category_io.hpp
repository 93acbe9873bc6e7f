// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ldcat/category.hpp"

namespace ldcat {

// Line-oriented category files:
//
//   # comment
//   object <name>
//   arrow <name> : <dom> -> <cod>
//   id <object> = <arrow>        (or `= auto` to generate id_<object>)
//   compose <g> . <f> = <h>
//
// Parse errors are SyntaxError / MalformedInput carrying the line number.
FinCategory parse_category(std::string_view text);

/// Writes every arrow, identity and table entry explicitly, so that
/// parse_category(write_category(c)) == c.
std::string write_category(const FinCategory& c);

std::string read_text_file(const std::filesystem::path& path);
FinCategory load_category(const std::filesystem::path& path);

}  // namespace ldcat
