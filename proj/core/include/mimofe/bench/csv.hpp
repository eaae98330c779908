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

#include "mimofe/metrics/metrics.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mimofe::bench {

inline constexpr std::string_view kCsvHeader =
    "experiment,architecture,scenario,band,p_t_w,n_t,metric,value,n_realizations,excluded,seed";

/// RFC 4180 field: quoted when it holds a comma, quote or line break.
std::string csv_field(std::string_view s);

/// Header plus one CRLF-terminated row per record, in the given order.
void write_csv(std::ostream &os, const std::vector<metrics::MetricRecord> &records);

} // namespace mimofe::bench
