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


#include "mimofe/bench/toml.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

namespace mimofe::bench {

ConfigError::ConfigError(int line, const std::string &message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line)
{
}

std::string_view TomlValue::type_name() const
{
    switch (data.index()) {
    case 0: return "boolean";
    case 1: return "integer";
    case 2: return "float";
    case 3: return "string";
    default: return "array";
    }
}

namespace {

class Cursor
{
  public:
    Cursor(std::string_view s, int line) : s_(s), line_(line) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t'))
            ++pos_;
    }
    bool at_end_or_comment()
    {
        skip_ws();
        return pos_ >= s_.size() || s_[pos_] == '#';
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char c)
    {
        skip_ws();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string &msg) const { throw ConfigError(line_, msg); }

    std::string key()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                    s_[pos_] == '-'))
            ++pos_;
        if (pos_ == start)
            fail("expected a key");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string table_name()
    {
        std::string name = key();
        skip_ws();
        while (peek() == '.') {
            ++pos_;
            name += '.';
            name += key();
            skip_ws();
        }
        return name;
    }

    TomlValue value()
    {
        skip_ws();
        TomlValue v;
        v.line = line_;
        const char c = peek();
        if (c == '"') {
            v.data = string();
        } else if (c == '[') {
            ++pos_;
            TomlArray arr;
            skip_ws();
            if (peek() == ']') {
                ++pos_;
            } else {
                while (true) {
                    arr.push_back(value());
                    if (arr.back().is_array())
                        fail("nested arrays are not supported");
                    skip_ws();
                    if (peek() == ',') {
                        ++pos_;
                        skip_ws();
                        if (peek() == ']') {
                            ++pos_;
                            break;
                        }
                        continue;
                    }
                    if (peek() == ']') {
                        ++pos_;
                        break;
                    }
                    fail("expected ',' or ']' in array");
                }
            }
            v.data = std::move(arr);
        } else {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']' && s_[pos_] != '#' && s_[pos_] != ' ' &&
                   s_[pos_] != '\t')
                ++pos_;
            v.data = scalar(s_.substr(start, pos_ - start));
        }
        return v;
    }

  private:
    std::string string()
    {
        ++pos_;
        std::string out;
        while (true) {
            if (pos_ >= s_.size())
                fail("unterminated string");
            const char c = s_[pos_++];
            if (c == '"')
                return out;
            if (c != '\\') {
                out += c;
                continue;
            }
            if (pos_ >= s_.size())
                fail("unterminated escape");
            switch (s_[pos_++]) {
            case '"': out += '"'; break;
            case '\\': out += '\\'; break;
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case 'r': out += '\r'; break;
            default: fail("unsupported escape sequence");
            }
        }
    }

    std::variant<bool, std::int64_t, double, std::string, TomlArray> scalar(std::string_view tok)
    {
        if (tok.empty())
            fail("missing value");
        if (tok == "true")
            return true;
        if (tok == "false")
            return false;
        std::string clean;
        for (char ch : tok)
            if (ch != '_')
                clean += ch;
        std::string_view t = clean;
        const bool neg = !t.empty() && t.front() == '-';
        std::string_view body = (!t.empty() && (t.front() == '+' || t.front() == '-')) ? t.substr(1) : t;
        if (body == "inf")
            return neg ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
        if (body == "nan")
            return std::numeric_limits<double>::quiet_NaN();
        const bool is_float = body.find_first_of(".eE") != std::string_view::npos;
        const char *first = t.data() + (t.front() == '+' ? 1 : 0);
        const char *last = t.data() + t.size();
        if (!is_float) {
            std::int64_t i = 0;
            auto [p, ec] = std::from_chars(first, last, i);
            if (ec == std::errc() && p == last)
                return i;
        } else {
            double d = 0.0;
            auto [p, ec] = std::from_chars(first, last, d);
            if (ec == std::errc() && p == last)
                return d;
        }
        fail("invalid value '" + std::string(tok) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;
};

} // namespace

TomlDocument parse_toml(std::string_view text)
{
    TomlDocument doc;
    doc[""].line = 0;
    std::string current;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        Cursor cur(line, line_no);
        if (cur.at_end_or_comment())
            continue;
        if (cur.peek() == '[') {
            cur.expect('[');
            if (cur.peek() == '[')
                cur.fail("arrays of tables are not supported");
            current = cur.table_name();
            cur.expect(']');
            if (!cur.at_end_or_comment())
                cur.fail("unexpected text after table header");
            if (doc.count(current))
                cur.fail("table [" + current + "] defined twice");
            doc[current].line = line_no;
            continue;
        }
        const std::string key = cur.key();
        cur.expect('=');
        TomlValue v = cur.value();
        if (!cur.at_end_or_comment())
            cur.fail("unexpected text after value");
        auto &table = doc[current].values;
        if (table.count(key))
            cur.fail("duplicate key '" + key + "'");
        table.emplace(key, std::move(v));
    }
    return doc;
}

} // namespace mimofe::bench
