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

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace mimofe::bench {

using frontend::Band;

std::string_view to_string(Experiment e)
{
    switch (e) {
    case Experiment::SysLoss: return "sysloss";
    case Experiment::SteerEff: return "steereff";
    case Experiment::Power: return "power";
    case Experiment::Components: return "components";
    }
    return "?";
}

frontend::RfParams RunConfig::rf(Band b) const
{
    frontend::RfParams p = b == Band::FR1 ? rf_fr1 : rf_fr2;
    p.phase_bits = system.phase_bits;
    return p;
}

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, p);
    if (s.find_first_of(".en") == std::string::npos)
        s += ".0";
    return s;
}

namespace {

class TableReader
{
  public:
    TableReader(const TomlDocument &doc, const std::string &name) : name_(name)
    {
        auto it = doc.find(name);
        if (it != doc.end())
            table_ = &it->second;
    }

    const TomlValue *get(const std::string &key)
    {
        if (!table_)
            return nullptr;
        auto it = table_->values.find(key);
        if (it == table_->values.end())
            return nullptr;
        used_.insert(key);
        return &it->second;
    }

    [[noreturn]] void fail(const TomlValue &v, const std::string &key, const std::string &msg) const
    {
        throw ConfigError(v.line, where(key) + ": " + msg);
    }

    std::string where(const std::string &key) const { return name_.empty() ? key : name_ + "." + key; }

    void read(const std::string &key, double &out, double lo = -HUGE_VAL, double hi = HUGE_VAL, bool lo_open = false)
    {
        if (const TomlValue *v = get(key)) {
            out = as_double(*v, key);
            if (!(out >= lo && out <= hi) || (lo_open && out == lo))
                fail(*v, key, "value " + format_double(out) + " out of range");
        }
    }

    template <class Int> void read(const std::string &key, Int &out, long long lo, long long hi)
    {
        if (const TomlValue *v = get(key)) {
            if (!v->is_int())
                fail(*v, key, "expected integer, got " + std::string(v->type_name()));
            const auto i = std::get<std::int64_t>(v->data);
            if (i < lo || i > hi)
                fail(*v, key, "value " + std::to_string(i) + " out of range [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
            out = static_cast<Int>(i);
        }
    }

    void read(const std::string &key, bool &out)
    {
        if (const TomlValue *v = get(key)) {
            if (!v->is_bool())
                fail(*v, key, "expected boolean, got " + std::string(v->type_name()));
            out = std::get<bool>(v->data);
        }
    }

    void read(const std::string &key, std::string &out)
    {
        if (const TomlValue *v = get(key)) {
            if (!v->is_string())
                fail(*v, key, "expected string, got " + std::string(v->type_name()));
            out = std::get<std::string>(v->data);
        }
    }

    template <class T, class Parse>
    void read_label(const std::string &key, T &out, Parse parse, const char *what)
    {
        if (const TomlValue *v = get(key))
            out = label(*v, key, parse, what);
    }

    template <class T, class Parse>
    void read_labels(const std::string &key, std::vector<T> &out, Parse parse, const char *what)
    {
        if (const TomlValue *v = get(key)) {
            const auto &arr = array(*v, key);
            out.clear();
            for (const auto &e : arr) {
                T x = label(e, key, parse, what);
                for (const auto &y : out)
                    if (y == x)
                        fail(e, key, std::string("duplicate ") + what);
                out.push_back(x);
            }
        }
    }

    void read_doubles(const std::string &key, std::vector<double> &out, double lo_exclusive)
    {
        if (const TomlValue *v = get(key)) {
            const auto &arr = array(*v, key);
            out.clear();
            for (const auto &e : arr) {
                const double d = as_double(e, key);
                if (!(d > lo_exclusive) || !std::isfinite(d))
                    fail(e, key, "grid value " + format_double(d) + " out of range");
                out.push_back(d);
            }
        }
    }

    void read_ints(const std::string &key, std::vector<int> &out, int lo)
    {
        if (const TomlValue *v = get(key)) {
            const auto &arr = array(*v, key);
            out.clear();
            for (const auto &e : arr) {
                if (!e.is_int())
                    fail(e, key, "expected integer grid values");
                const auto i = std::get<std::int64_t>(e.data);
                if (i < lo || i > (1 << 20))
                    fail(e, key, "grid value " + std::to_string(i) + " out of range");
                out.push_back(static_cast<int>(i));
            }
        }
    }

    void finish() const
    {
        if (!table_)
            return;
        for (const auto &[key, v] : table_->values)
            if (!used_.count(key))
                throw ConfigError(v.line, "unknown key '" + where(key) + "'");
    }

    int line() const { return table_ ? table_->line : 0; }

  private:
    double as_double(const TomlValue &v, const std::string &key) const
    {
        if (v.is_float())
            return std::get<double>(v.data);
        if (v.is_int())
            return static_cast<double>(std::get<std::int64_t>(v.data));
        fail(v, key, "expected number, got " + std::string(v.type_name()));
    }

    const TomlArray &array(const TomlValue &v, const std::string &key) const
    {
        if (!v.is_array())
            fail(v, key, "expected array, got " + std::string(v.type_name()));
        const auto &arr = std::get<TomlArray>(v.data);
        if (arr.empty())
            fail(v, key, "array must not be empty");
        return arr;
    }

    template <class Parse>
    auto label(const TomlValue &v, const std::string &key, Parse parse, const char *what) const
    {
        if (!v.is_string())
            fail(v, key, "expected string, got " + std::string(v.type_name()));
        const auto &text = std::get<std::string>(v.data);
        auto r = parse(text);
        if (!r)
            fail(v, key, std::string("unknown ") + what + " '" + text + "'");
        return *r;
    }

    std::string name_;
    const TomlTable *table_ = nullptr;
    std::set<std::string> used_;
};

bool is_square(int n)
{
    const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    return n >= 1 && r * r == n;
}

int line_of(const TomlDocument &doc, const std::string &table, const std::string &key)
{
    auto t = doc.find(table);
    if (t == doc.end())
        return 0;
    auto v = t->second.values.find(key);
    return v == t->second.values.end() ? t->second.line : v->second.line;
}

std::optional<Experiment> parse_experiment(std::string_view s)
{
    for (auto e : {Experiment::SysLoss, Experiment::SteerEff, Experiment::Power, Experiment::Components})
        if (to_string(e) == s)
            return e;
    return std::nullopt;
}

void read_rf(const TomlDocument &doc, const std::string &name, frontend::RfParams &rf)
{
    TableReader t(doc, name);
    t.read("p_rf_chain", rf.p_rf_chain, 0.0);
    t.read("eta_pae", rf.eta_pae, 0.0, 1.0, true);
    t.read("ps_loss_db", rf.ps_loss_db, 0.0);
    t.read("p_ima_fixed", rf.p_ima_fixed, 0.0);
    t.read("eta_ima", rf.eta_ima, 0.0, 1.0, true);
    t.read("divider_excess_db", rf.divider_excess_db, 0.0);
    t.read("lens_il_db", rf.lens_il_db, 0.0);
    t.read("switch_il_db", rf.switch_il_db, 0.0);
    t.read("pa_gain_db", rf.pa_gain_db, 0.0);
    t.finish();
}

} // namespace

RunConfig parse_config(std::string_view text)
{
    const TomlDocument doc = parse_toml(text);
    static const std::set<std::string> known{"", "system", "rf", "rf.FR1", "rf.FR2", "tara", "lens", "sweep",
                                             "optimizer"};
    for (const auto &[name, table] : doc)
        if (!known.count(name))
            throw ConfigError(table.line, "unknown table [" + name + "]");

    RunConfig c;
    {
        TableReader t(doc, "");
        t.read_label("experiment", c.experiment, parse_experiment, "experiment");
        t.read_labels("architectures", c.architectures, frontend::parse_variant, "architecture");
        t.read_labels("scenarios", c.scenarios, aperture::parse_scenario_label, "scenario");
        t.read_label("band", c.band, frontend::parse_band, "band");
        t.read("n_realizations", c.n_realizations, 1, 10'000'000);
        t.read("seed", c.seed, 0, std::numeric_limits<long long>::max());
        t.read("output", c.output);
        t.read("threads", c.threads, 1, 1024);
        t.finish();
    }
    {
        TableReader t(doc, "system");
        t.read("n_t", c.system.n_t, 1, 1 << 16);
        t.read("n_rf", c.system.n_rf, 1, 1 << 10);
        t.read("p_t", c.system.p_t, 0.0, HUGE_VAL, true);
        t.read("phase_bits", c.system.phase_bits, 1, 16);
        t.read("evm_target", c.system.evm_target, 0.0, 1.0);
        t.read("spacing", c.design.spacing, 0.0, HUGE_VAL, true);
        double q = c.design.element.q;
        t.read("element_q", q, 0.0, 1000.0);
        c.design.element = aperture::ElementPattern::cosine(q);
        t.finish();
        if (!is_square(c.system.n_t))
            throw ConfigError(line_of(doc, "system", "n_t"), "system.n_t must be a square URA size");
        if (c.system.n_rf > c.system.n_t)
            throw ConfigError(line_of(doc, "system", "n_rf"), "system.n_rf exceeds system.n_t");
    }
    {
        TableReader t(doc, "rf");
        t.finish();
    }
    read_rf(doc, "rf.FR1", c.rf_fr1);
    read_rf(doc, "rf.FR2", c.rf_fr2);
    {
        TableReader t(doc, "tara");
        t.read("fi_feed_square_side", c.design.fi_feed_square_side, 0.0);
        t.read("focal_ratio", c.design.focal_ratio, 0.0, HUGE_VAL, true);
        t.read("edge_taper_db", c.design.edge_taper_db, -100.0, 0.0);
        if (c.design.edge_taper_db == 0.0)
            throw ConfigError(t.line(), "tara.edge_taper_db must be negative");
        t.read("cell_points", c.design.cell_points, 1, 64);
        t.read("lossless_illumination", c.design.lossless_illumination);
        t.finish();
    }
    {
        TableReader t(doc, "lens");
        t.read("beams_per_axis", c.design.lens_beams_per_axis, 1, 64);
        const TomlValue *deg = t.get("theta_max_deg");
        const TomlValue *rad = t.get("theta_max_rad");
        if (deg && rad)
            t.fail(*rad, "theta_max_rad", "give theta_max_deg or theta_max_rad, not both");
        if (deg) {
            double d = 0.0;
            TableReader tmp(doc, "lens");
            tmp.read("theta_max_deg", d, 0.0, 90.0, true);
            c.design.lens_theta_max = deg_to_rad(d);
        }
        if (rad) {
            TableReader tmp(doc, "lens");
            tmp.read("theta_max_rad", c.design.lens_theta_max, 0.0, kPi / 2, true);
        }
        t.finish();
    }
    {
        TableReader t(doc, "sweep");
        t.read_doubles("p_t_grid", c.sweep.p_t_grid, 0.0);
        t.read_ints("n_t_grid", c.sweep.n_t_grid, 1);
        for (int n : c.sweep.n_t_grid)
            if (!is_square(n))
                throw ConfigError(line_of(doc, "sweep", "n_t_grid"), "sweep.n_t_grid entries must be square URA sizes");
        t.read_labels("bands", c.sweep.bands, frontend::parse_band, "band");
        t.read("azimuth_deg", c.sweep.azimuth_deg, -180.0, 180.0);
        t.read("elevation_deg", c.sweep.elevation_deg, -90.0, 90.0);
        t.read("sector_average", c.sweep.sector_average);
        t.finish();
    }
    {
        TableReader t(doc, "optimizer");
        t.read("max_iters", c.optimizer.max_iters, 1, 100000);
        t.read("tol", c.optimizer.tol, 0.0, 1.0);
        t.read("restarts", c.optimizer.restarts, 0, 1000);
        t.read("seed", c.optimizer.seed, 0, std::numeric_limits<long long>::max());
        t.read("rl_exhaustive_limit", c.optimizer.rl_exhaustive_limit, 0, std::numeric_limits<long long>::max());
        t.read("restart_perturbation", c.optimizer.restart_perturbation, 0.0, 1.0);
        t.finish();
    }

    for (auto b : {Band::FR1, Band::FR2}) {
        try {
            c.rf(b).validate();
        } catch (const std::invalid_argument &e) {
            throw ConfigError(0, e.what());
        }
    }
    return c;
}

namespace {

std::string quoted(std::string_view s)
{
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out + "\"";
}

template <class T, class Fmt> std::string list(const std::vector<T> &v, Fmt fmt)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + fmt(v[i]);
    return out + "]";
}

void write_rf(std::ostringstream &os, const char *name, const frontend::RfParams &rf)
{
    os << "\n[rf." << name << "]\n"
       << "p_rf_chain = " << format_double(rf.p_rf_chain) << "\n"
       << "eta_pae = " << format_double(rf.eta_pae) << "\n"
       << "ps_loss_db = " << format_double(rf.ps_loss_db) << "\n"
       << "p_ima_fixed = " << format_double(rf.p_ima_fixed) << "\n"
       << "eta_ima = " << format_double(rf.eta_ima) << "\n"
       << "divider_excess_db = " << format_double(rf.divider_excess_db) << "\n"
       << "lens_il_db = " << format_double(rf.lens_il_db) << "\n"
       << "switch_il_db = " << format_double(rf.switch_il_db) << "\n"
       << "pa_gain_db = " << format_double(rf.pa_gain_db) << "\n";
}

} // namespace

std::string echo_config(const RunConfig &c)
{
    auto str = [](auto x) { return quoted(to_string(x)); };
    std::ostringstream os;
    os << "# effective configuration\n"
       << "experiment = " << quoted(to_string(c.experiment)) << "\n"
       << "architectures = " << list(c.architectures, [](frontend::Variant v) { return quoted(frontend::to_string(v)); })
       << "\n"
       << "scenarios = "
       << list(c.scenarios, [](aperture::ScenarioLabel s) { return quoted(aperture::to_string(s)); }) << "\n"
       << "band = " << str(c.band) << "\n"
       << "n_realizations = " << c.n_realizations << "\n"
       << "seed = " << c.seed << "\n"
       << "output = " << quoted(c.output) << "\n"
       << "threads = " << c.threads << "\n"
       << "\n[system]\n"
       << "n_t = " << c.system.n_t << "\n"
       << "n_rf = " << c.system.n_rf << "\n"
       << "p_t = " << format_double(c.system.p_t) << "\n"
       << "phase_bits = " << c.system.phase_bits << "\n"
       << "evm_target = " << format_double(c.system.evm_target) << "\n"
       << "spacing = " << format_double(c.design.spacing) << "\n"
       << "element_q = " << format_double(c.design.element.q) << "\n";
    write_rf(os, "FR1", c.rf_fr1);
    write_rf(os, "FR2", c.rf_fr2);
    os << "\n[tara]\n"
       << "fi_feed_square_side = " << format_double(c.design.fi_feed_square_side) << "\n"
       << "focal_ratio = " << format_double(c.design.focal_ratio) << "\n"
       << "edge_taper_db = " << format_double(c.design.edge_taper_db) << "\n"
       << "cell_points = " << c.design.cell_points << "\n"
       << "lossless_illumination = " << (c.design.lossless_illumination ? "true" : "false") << "\n"
       << "\n[lens]\n"
       << "beams_per_axis = " << c.design.lens_beams_per_axis << "\n"
       << "theta_max_rad = " << format_double(c.design.lens_theta_max) << "\n"
       << "\n[sweep]\n"
       << "p_t_grid = " << list(c.sweep.p_t_grid, [](double d) { return format_double(d); }) << "\n"
       << "n_t_grid = " << list(c.sweep.n_t_grid, [](int n) { return std::to_string(n); }) << "\n"
       << "bands = " << list(c.sweep.bands, [](Band b) { return quoted(frontend::to_string(b)); }) << "\n"
       << "azimuth_deg = " << format_double(c.sweep.azimuth_deg) << "\n"
       << "elevation_deg = " << format_double(c.sweep.elevation_deg) << "\n"
       << "sector_average = " << (c.sweep.sector_average ? "true" : "false") << "\n"
       << "\n[optimizer]\n"
       << "max_iters = " << c.optimizer.max_iters << "\n"
       << "tol = " << format_double(c.optimizer.tol) << "\n"
       << "restarts = " << c.optimizer.restarts << "\n"
       << "seed = " << c.optimizer.seed << "\n"
       << "rl_exhaustive_limit = " << c.optimizer.rl_exhaustive_limit << "\n"
       << "restart_perturbation = " << format_double(c.optimizer.restart_perturbation) << "\n";
    return os.str();
}

} // namespace mimofe::bench
