// SPDX-License-Identifier: Apache-2.0
//
// mimofe - massive MIMO front-end architecture comparison
// Copyright (C) 2026 The mimofe authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mimofe::bench {

/// Error with the 1-based line it refers to (0 when not tied to a line).
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(int line, const std::string &message);
    int line() const { return line_; }

  private:
    int line_;
};

struct TomlValue;
using TomlArray = std::vector<TomlValue>;

struct TomlValue
{
    std::variant<bool, std::int64_t, double, std::string, TomlArray> data;
    int line = 0;

    bool is_bool() const { return std::holds_alternative<bool>(data); }
    bool is_int() const { return std::holds_alternative<std::int64_t>(data); }
    bool is_float() const { return std::holds_alternative<double>(data); }
    bool is_string() const { return std::holds_alternative<std::string>(data); }
    bool is_array() const { return std::holds_alternative<TomlArray>(data); }
    std::string_view type_name() const;
};

struct TomlTable
{
    std::map<std::string, TomlValue> values;
    int line = 0;
};

/// Tables by dotted name; the root table is "".
using TomlDocument = std::map<std::string, TomlTable>;

/// Reads the subset used by the config files: [table] and [a.b] headers,
/// key = value pairs with bare keys, basic strings, integers, floats
/// (including inf/nan), booleans, single-line arrays and # comments.
/// Throws ConfigError with the offending line.
TomlDocument parse_toml(std::string_view text);

} // namespace mimofe::bench
