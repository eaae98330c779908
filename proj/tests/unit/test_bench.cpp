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


#include "mimofe/bench/config.hpp"
#include "mimofe/bench/csv.hpp"
#include "mimofe/bench/run.hpp"
#include "mimofe/bench/toml.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mimofe;
using namespace mimofe::bench;
namespace fs = std::filesystem;

namespace {

int error_line(std::string_view text)
{
    try {
        parse_config(text);
    } catch (const ConfigError &e) {
        return e.line();
    }
    return -1;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir
{
    fs::path path;
    explicit TempDir(const std::string &name) : path(fs::temp_directory_path() / name)
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_SUITE("bench")
{
    TEST_CASE("toml values")
    {
        const auto doc = parse_toml(R"(# leading comment
a = 1
b = -2.5e3
c = "x,\"y\"\tz" # trailing comment
d = true
e = [1, 2.0, "s"]
f = inf
g = -inf
h = []

[t]
k = 3
[t.u]
k = 4
)");
        const auto &root = doc.at("");
        CHECK(std::get<std::int64_t>(root.values.at("a").data) == 1);
        CHECK(std::get<double>(root.values.at("b").data) == -2500.0);
        CHECK(std::get<std::string>(root.values.at("c").data) == "x,\"y\"\tz");
        CHECK(std::get<bool>(root.values.at("d").data));
        CHECK(root.values.at("e").is_array());
        CHECK(std::get<TomlArray>(root.values.at("e").data).size() == 3);
        CHECK(std::isinf(std::get<double>(root.values.at("g").data)));
        CHECK(std::get<TomlArray>(root.values.at("h").data).empty());
        CHECK(root.values.at("c").line == 4);
        CHECK(std::get<std::int64_t>(doc.at("t.u").values.at("k").data) == 4);
        CHECK(doc.at("t").line == 11);
    }

    TEST_CASE("toml errors carry lines")
    {
        auto line_of = [](std::string_view text) {
            try {
                parse_toml(text);
            } catch (const ConfigError &e) {
                return e.line();
            }
            return -1;
        };
        CHECK(line_of("a = 1\na = 2\n") == 2);
        CHECK(line_of("a = 1\n[t]\n[t]\n") == 3);
        CHECK(line_of("a = \"open\n") == 1);
        CHECK(line_of("\n\nb = [1, 2\n") == 3);
        CHECK(line_of("x\n") == 1);
        CHECK(line_of("a = 1 2\n") == 1);
        CHECK(line_of("[bad\n") == 1);
        CHECK(line_of("a = 0x1g\n") == 1);
        try {
            parse_toml("\nz = ?\n");
        } catch (const ConfigError &e) {
            CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
        }
    }

    TEST_CASE("empty config resolves to defaults")
    {
        const RunConfig c = parse_config("");
        CHECK(c == RunConfig{});
        CHECK(c.system.n_t == 64);
        CHECK(c.system.n_rf == 4);
        CHECK(c.system.p_t == 20.0);
        CHECK(c.n_realizations == 200);
        CHECK(c.rf(frontend::Band::FR1) == frontend::RfParams::preset(frontend::Band::FR1));
    }

    TEST_CASE("shipped default config matches the built-in defaults")
    {
        const std::string text = slurp(fs::path(MIMOFE_SOURCE_DIR) / "configs" / "default.toml");
        REQUIRE_FALSE(text.empty());
        CHECK(parse_config(text) == RunConfig{});
    }

    TEST_CASE("config examples")
    {
        CHECK(error_line("[system]\nphase_bits = 0\n") == 2);
        CHECK(parse_config("band = \"FR2\"\n").band == frontend::Band::FR2);
        CHECK(parse_config("[system]\nphase_bits = 3\n").rf(frontend::Band::FR2).phase_bits == 3);
        CHECK(error_line("\nunknown_key = 1\n") == 2);
        CHECK(error_line("architectures = [\"FD\", \"HADB_FC\"]\n") == 1);
        CHECK(error_line("[nope]\n") == 1);
        CHECK(error_line("[system]\nn_t = 60\n") == 2);
        CHECK(error_line("[system]\nn_t = 16\nn_rf = 32\n") > 0);
        CHECK(error_line("[system]\np_t = \"20\"\n") == 2);
        CHECK(error_line("[lens]\ntheta_max_deg = 45.0\ntheta_max_rad = 0.5\n") > 0);
        CHECK(error_line("[sweep]\nn_t_grid = [16, 50]\n") == 2);
        CHECK(error_line("scenarios = [\"UMa-LOS\", \"UMa-Foo\"]\n") == 1);

        const auto c = parse_config(R"(experiment = "power"
architectures = ["FD", "TARA-FI"]
seed = 7
[rf.FR1]
p_rf_chain = 1.5
[lens]
theta_max_deg = 30.0
[optimizer]
restarts = 5
)");
        CHECK(c.experiment == Experiment::Power);
        CHECK(c.architectures.size() == 2);
        CHECK(c.seed == 7);
        CHECK(c.rf_fr1.p_rf_chain == 1.5);
        CHECK(c.design.lens_theta_max == doctest::Approx(kPi / 6));
        CHECK(c.optimizer.restarts == 5);
    }

    TEST_CASE("echo round trip")
    {
        const char *texts[] = {
            "",
            "experiment = \"steereff\"\nband = \"FR2\"\n[sweep]\np_t_grid = [0.1, 3.0]\nsector_average = true\n",
            "[system]\nevm_target = 0.1\nelement_q = 2.0\n[tara]\nlossless_illumination = true\n[lens]\n"
            "theta_max_deg = 37.3\n[optimizer]\ntol = 1e-9\n",
        };
        for (const char *t : texts) {
            const RunConfig c = parse_config(t);
            const std::string echo = echo_config(c);
            CHECK(parse_config(echo) == c);
            CHECK(echo_config(parse_config(echo)) == echo);
        }
        CHECK(format_double(20.0) == "20.0");
        CHECK(format_double(0.1) == "0.1");
        CHECK(format_double(1e-300) == "1e-300");
        CHECK(std::stod(format_double(kPi)) == kPi);
    }

    TEST_CASE("csv")
    {
        CHECK(csv_field("plain") == "plain");
        CHECK(csv_field("a,b") == "\"a,b\"");
        CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
        CHECK(csv_field("two\nlines") == "\"two\nlines\"");

        metrics::MetricRecord r;
        r.experiment = "power";
        r.architecture = "FD";
        r.band = "FR1";
        r.p_t_w = 20.0;
        r.n_t = 64;
        r.metric = "p_total_w";
        r.value = 173.12;
        std::ostringstream os;
        write_csv(os, {r});
        CHECK(os.str() == std::string(kCsvHeader) + "\r\npower,FD,,FR1,20.0,64,p_total_w,173.12,0,0,0\r\n");
    }

    TEST_CASE("run writes results and config")
    {
        TempDir dir("mimofe_bench_run");
        RunConfig c = parse_config(R"(experiment = "sysloss"
architectures = ["FD", "HADB-PC", "TARA-SI"]
scenarios = ["UMa-LOS"]
n_realizations = 3
[system]
n_t = 16
)");
        c.output = (dir.path / "a").string();
        std::ostringstream log;
        REQUIRE(run(c, log) == kExitOk);
        const std::string csv = slurp(dir.path / "a" / "sysloss.csv");
        CHECK(csv.rfind(std::string(kCsvHeader) + "\r\n", 0) == 0);
        CHECK(csv.find("sysloss,FD,UMa-LOS,FR1,20.0,16,SL_rel_db,0.0,3,0,42\r\n") != std::string::npos);
        const std::string echoed = slurp(dir.path / "a" / "sysloss.toml");
        RunConfig back = parse_config(echoed);
        CHECK(back == c);

        c.output = (dir.path / "b").string();
        REQUIRE(run(c, log) == kExitOk);
        CHECK(slurp(dir.path / "b" / "sysloss.csv") == csv);

        c.threads = 2;
        c.output = (dir.path / "c").string();
        REQUIRE(run(c, log) == kExitOk);
        CHECK(slurp(dir.path / "c" / "sysloss.csv") == csv);
    }

    TEST_CASE("run reports config errors")
    {
        TempDir dir("mimofe_bench_err");
        RunConfig c;
        c.experiment = Experiment::Power;
        c.system.n_rf = 5; // PC needs n_rf to divide the array into square blocks
        c.output = dir.path.string();
        std::ostringstream log;
        CHECK(run(c, log) == kExitConfigError);
        CHECK_FALSE(log.str().empty());
        CHECK_FALSE(fs::exists(dir.path / "power.csv"));
    }

    TEST_CASE("experiments produce their metrics")
    {
        RunConfig c;
        c.experiment = Experiment::Components;
        c.system.n_t = 256;
        auto res = execute(c);
        CHECK(res.problems.empty());
        CHECK(std::is_sorted(res.records.begin(), res.records.end(), metrics::record_less));
        bool found = false;
        for (const auto &r : res.records)
            if (r.architecture == "HADB-FC" && r.metric == "lines" && r.n_t == 256)
                found = r.value == 1024.0;
        CHECK(found);

        c.experiment = Experiment::Power;
        c.system.n_t = 64;
        res = execute(c);
        for (const auto &r : res.records)
            if (r.architecture == "FD" && r.metric == "p_total_w" && r.band == "FR1")
                CHECK(r.value == doctest::Approx(173.12));

        c.experiment = Experiment::SteerEff;
        c.sweep.p_t_grid = {1.0, 20.0};
        c.sweep.n_t_grid = {16};
        res = execute(c);
        CHECK(res.problems.empty());
        CHECK(res.records.size() == 2 * 6 * 3);
    }
}
