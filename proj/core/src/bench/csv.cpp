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


#include "mimofe/bench/csv.hpp"
#include "mimofe/bench/config.hpp"

namespace mimofe::bench {

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void write_csv(std::ostream &os, const std::vector<metrics::MetricRecord> &records)
{
    os << kCsvHeader << "\r\n";
    for (const auto &r : records)
        os << csv_field(r.experiment) << ',' << csv_field(r.architecture) << ',' << csv_field(r.scenario) << ','
           << csv_field(r.band) << ',' << format_double(r.p_t_w) << ',' << r.n_t << ',' << csv_field(r.metric)
           << ',' << format_double(r.value) << ',' << r.n_realizations << ',' << r.excluded << ',' << r.seed
           << "\r\n";
}

} // namespace mimofe::bench
