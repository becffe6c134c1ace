#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "akgrowth/csv.hpp"
#include "akgrowth/errors.hpp"
#include "akgrowth/scenario.hpp"

namespace akgrowth {

// Scenario files are flat key-value trees:
//
//   [technology]
//   kind = constant            # constant | sampled | sinusoidal
//   rate = 0.05
//
//   [consumption]
//   kind = separable           # zero | separable | grid
//   spatial = constant         # constant | harmonics | samples | csv
//   spatial_value = 1
//   temporal = constant        # constant | exponential | sampled | sinusoidal
//   temporal_value = 0.1
//
//   [initial_capital]
//   kind = constant            # constant | harmonics | samples | csv
//   value = 2
//
//   [grid]
//   size = 256
//   horizon = 20
//   time_steps = 100           # or: times = explicit ascending list
//
//   [tolerances]               # optional, defaults otherwise
//   quadrature = 1e-10
//
// Sampled data may be inline comma lists or referenced CSV files. Lines
// starting with # or ; are comments.

namespace scenario_io_detail {

struct Entry {
    std::string value;
    std::size_t line = 0;
    mutable bool used = false;
};

using SectionMap = std::map<std::string, std::map<std::string, Entry>>;

inline std::string trim(std::string_view sv) {
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r'))
        sv.remove_suffix(1);
    return std::string(sv);
}

inline SectionMap parse_sections(std::istream& in) {
    SectionMap sections;
    std::string line;
    std::string current;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#' || text[0] == ';') continue;
        if (text.front() == '[') {
            if (text.back() != ']')
                throw ScenarioParseError("unterminated section header", lineno);
            current = trim(std::string_view(text).substr(1, text.size() - 2));
            if (current.empty()) throw ScenarioParseError("empty section name", lineno);
            sections[current];
            continue;
        }
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw ScenarioParseError("expected 'key = value': '" + text + "'", lineno);
        if (current.empty())
            throw ScenarioParseError("key outside of any [section]", lineno);
        const std::string key = trim(std::string_view(text).substr(0, eq));
        if (key.empty()) throw ScenarioParseError("empty key", lineno);
        sections[current][key] = Entry{trim(std::string_view(text).substr(eq + 1)), lineno};
    }
    return sections;
}

class Section {
public:
    Section(const SectionMap& map, std::string name, const std::string& base_dir)
        : name_(std::move(name)), base_dir_(base_dir) {
        auto it = map.find(name_);
        entries_ = it == map.end() ? nullptr : &it->second;
    }

    bool exists() const { return entries_ != nullptr; }

    const Entry* find(const std::string& key) const {
        if (!entries_) return nullptr;
        auto it = entries_->find(key);
        if (it == entries_->end()) return nullptr;
        it->second.used = true;
        return &it->second;
    }

    std::string require_string(const std::string& key) const {
        const Entry* e = find(key);
        if (!e)
            throw ScenarioParseError("[" + name_ + "] is missing required key '" + key + "'");
        return e->value;
    }

    double require_number(const std::string& key) const {
        const Entry* e = find(key);
        if (!e)
            throw ScenarioParseError("[" + name_ + "] is missing required key '" + key + "'");
        return parse_double(e->value, e->line);
    }

    double number_or(const std::string& key, double fallback) const {
        const Entry* e = find(key);
        return e ? parse_double(e->value, e->line) : fallback;
    }

    std::optional<double> optional_number(const std::string& key) const {
        const Entry* e = find(key);
        if (!e) return std::nullopt;
        return parse_double(e->value, e->line);
    }

    std::vector<double> require_list(const std::string& key) const {
        const Entry* e = find(key);
        if (!e)
            throw ScenarioParseError("[" + name_ + "] is missing required key '" + key + "'");
        return parse_number_list(e->value, e->line);
    }

    std::vector<double> list_or_empty(const std::string& key) const {
        const Entry* e = find(key);
        return e ? parse_number_list(e->value, e->line) : std::vector<double>{};
    }

    std::string resolve_path(const std::string& relative) const {
        if (relative.empty() || relative.front() == '/' || base_dir_.empty()) return relative;
        return base_dir_ + "/" + relative;
    }

    const std::string& name() const { return name_; }

private:
    std::string name_;
    const std::string& base_dir_;
    const std::map<std::string, Entry>* entries_;
};

inline std::vector<SpatialProfile::Harmonic> harmonic_terms(const Section& sec,
                                                            const std::string& mode_key,
                                                            const std::string& amp_key) {
    const auto modes = sec.list_or_empty(mode_key);
    const auto amps = sec.list_or_empty(amp_key);
    if (modes.size() != amps.size())
        throw ScenarioParseError("[" + sec.name() + "] " + mode_key + " and " + amp_key +
                                 " must have the same length");
    std::vector<SpatialProfile::Harmonic> out;
    for (std::size_t i = 0; i < modes.size(); ++i)
        out.push_back({static_cast<int>(modes[i]), amps[i]});
    return out;
}

inline SpatialProfile parse_profile(const Section& sec, const std::string& prefix,
                                    std::size_t grid_size) {
    const std::string kind = sec.require_string(prefix.empty() ? "kind" : prefix);
    auto key = [&](const std::string& k) { return prefix.empty() ? k : prefix + "_" + k; };
    if (kind == "constant")
        return SpatialProfile::constant(grid_size, sec.require_number(key("value")));
    if (kind == "harmonics")
        return SpatialProfile::harmonics(grid_size, sec.number_or(key("base"), 0.0),
                                         harmonic_terms(sec, key("cos_modes"), key("cos_amps")),
                                         harmonic_terms(sec, key("sin_modes"), key("sin_amps")));
    if (kind == "samples") return SpatialProfile(sec.require_list(key("samples")));
    if (kind == "csv") {
        const auto rows = read_numeric_csv(sec.resolve_path(sec.require_string(key("csv"))));
        std::vector<double> samples;
        for (const auto& r : rows) samples.insert(samples.end(), r.begin(), r.end());
        return SpatialProfile(samples);
    }
    throw ScenarioParseError("[" + sec.name() + "] unknown profile kind '" + kind +
                             "' (expected constant, harmonics, samples, or csv)");
}

inline ScalarPath parse_scalar_path(const Section& sec, const std::string& prefix) {
    const std::string kind = sec.require_string(prefix);
    auto key = [&](const std::string& k) { return prefix + "_" + k; };
    if (kind == "constant") return ScalarPath::constant(sec.require_number(key("value")));
    if (kind == "exponential")
        return ScalarPath::exponential(sec.require_number(key("value")),
                                       sec.require_number(key("growth")));
    if (kind == "sinusoidal")
        return ScalarPath::sinusoidal(sec.require_number(key("base")),
                                      sec.require_number(key("amplitude")),
                                      sec.require_number(key("frequency")),
                                      sec.number_or(key("phase"), 0.0));
    if (kind == "sampled") {
        if (const Entry* e = sec.find(key("csv"))) {
            const auto rows = read_numeric_csv(sec.resolve_path(e->value));
            std::vector<double> times, values;
            for (const auto& r : rows) {
                if (r.size() != 2)
                    throw ScenarioParseError("sampled path CSV needs two columns (t, value)");
                times.push_back(r[0]);
                values.push_back(r[1]);
            }
            return ScalarPath::sampled(times, values);
        }
        return ScalarPath::sampled(sec.require_list(key("times")),
                                   sec.require_list(key("values")));
    }
    throw ScenarioParseError("[" + sec.name() + "] unknown path kind '" + kind +
                             "' (expected constant, exponential, sinusoidal, or sampled)");
}

}  // namespace scenario_io_detail

/// Materialize a Scenario from a parsed key-value document. Exposed (next to
/// parse_scenario) so that batch tools can override single keys between
/// parsing and building.
inline Scenario build_scenario(const scenario_io_detail::SectionMap& sections,
                               const std::string& base_dir = "") {
    using namespace scenario_io_detail;
    for (const auto& [name, _] : sections)
        if (name != "technology" && name != "consumption" && name != "initial_capital" &&
            name != "grid" && name != "tolerances")
            throw ScenarioParseError("unknown section [" + name + "]");

    Scenario s;
    const Section grid(sections, "grid", base_dir);
    const std::size_t grid_size =
        static_cast<std::size_t>(grid.number_or("size", 256.0));
    s.horizon = grid.require_number("horizon");
    s.mode_cutoff = static_cast<std::size_t>(grid.number_or("modes", 0.0));
    if (const Entry* times = grid.find("times")) {
        s.time_mesh = parse_number_list(times->value, times->line);
    } else {
        const double steps = grid.number_or("time_steps", 100.0);
        if (!(steps >= 1.0)) throw ScenarioParseError("[grid] time_steps must be at least 1");
        s.time_mesh = uniform_time_mesh(s.horizon, static_cast<std::size_t>(steps));
    }

    // technology
    const Section tech(sections, "technology", base_dir);
    const std::string tech_kind = tech.exists() ? tech.require_string("kind") : "constant";
    if (!tech.exists()) {
        s.technology = TechnologyPath::constant(0.0);
    } else if (tech_kind == "constant") {
        s.technology = TechnologyPath::constant(tech.require_number("rate"));
    } else if (tech_kind == "sinusoidal") {
        s.technology = TechnologyPath::sinusoidal(tech.require_number("base"),
                                                  tech.require_number("amplitude"),
                                                  tech.require_number("frequency"));
    } else if (tech_kind == "sampled") {
        std::vector<double> times, values;
        if (const Entry* e = tech.find("csv")) {
            for (const auto& r : read_numeric_csv(tech.resolve_path(e->value))) {
                if (r.size() != 2)
                    throw ScenarioParseError("technology CSV needs two columns (t, rate)");
                times.push_back(r[0]);
                values.push_back(r[1]);
            }
        } else {
            times = tech.require_list("times");
            values = tech.require_list("values");
        }
        s.technology = TechnologyPath::sampled(times, values, tech.optional_number("lower_bound"));
    } else {
        throw ScenarioParseError("[technology] unknown kind '" + tech_kind + "'");
    }

    // consumption
    const Section cons(sections, "consumption", base_dir);
    const std::string cons_kind = cons.exists() ? cons.require_string("kind") : "zero";
    if (cons_kind == "zero") {
        s.consumption = ConsumptionField::zero(grid_size);
    } else if (cons_kind == "separable") {
        s.consumption = ConsumptionField::separable(parse_profile(cons, "spatial", grid_size),
                                                    parse_scalar_path(cons, "temporal"));
    } else if (cons_kind == "grid") {
        const auto times = cons.require_list("times");
        std::vector<std::vector<double>> values;
        if (const Entry* e = cons.find("values_csv")) {
            values = read_numeric_csv(cons.resolve_path(e->value));
        } else if (const Entry* e2 = cons.find("values_inline")) {
            for (auto row : split(e2->value, '|'))
                values.push_back(parse_number_list(row, e2->line));
        } else {
            throw ScenarioParseError("[consumption] grid kind needs values_csv or values_inline");
        }
        s.consumption = ConsumptionField::grid(times, values);
    } else {
        throw ScenarioParseError("[consumption] unknown kind '" + cons_kind + "'");
    }

    // initial capital
    const Section cap(sections, "initial_capital", base_dir);
    if (!cap.exists()) throw ScenarioParseError("missing required section [initial_capital]");
    s.initial_capital = parse_profile(cap, "", grid_size);
    if ((cap.require_string("kind") == "samples" || cap.require_string("kind") == "csv") &&
        grid.find("size") && s.initial_capital.size() != grid_size)
        throw ScenarioParseError("[initial_capital] sample count " +
                                 std::to_string(s.initial_capital.size()) +
                                 " does not match [grid] size " + std::to_string(grid_size));

    // tolerances
    const Section tol(sections, "tolerances", base_dir);
    s.tolerances.series_tail = tol.number_or("series_tail", s.tolerances.series_tail);
    s.tolerances.quadrature = tol.number_or("quadrature", s.tolerances.quadrature);
    s.tolerances.fd_dt = tol.number_or("fd_dt", s.tolerances.fd_dt);
    s.tolerances.fd_dx = tol.number_or("fd_dx", s.tolerances.fd_dx);
    s.tolerances.feasibility = tol.number_or("feasibility", s.tolerances.feasibility);

    // reject unknown keys so typos do not silently fall back to defaults
    for (const auto& [name, entries] : sections)
        for (const auto& [key, entry] : entries)
            if (!entry.used)
                throw ScenarioParseError("unknown key '" + key + "' in [" + name + "]",
                                         entry.line);
    return s;
}

inline Scenario parse_scenario(std::istream& in, const std::string& base_dir = "") {
    return build_scenario(scenario_io_detail::parse_sections(in), base_dir);
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioParseError("cannot open scenario file: " + path);
    const std::size_t slash = path.find_last_of('/');
    return parse_scenario(in, slash == std::string::npos ? "" : path.substr(0, slash));
}

namespace scenario_io_detail {

inline void write_list(std::ostream& out, const std::string& key,
                       const std::vector<double>& values) {
    out << key << " = ";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ", ";
        out << format_double(values[i]);
    }
    out << "\n";
}

inline void write_profile(std::ostream& out, const std::string& prefix,
                          const SpatialProfile& p) {
    auto key = [&](const std::string& k) { return prefix.empty() ? k : prefix + "_" + k; };
    out << (prefix.empty() ? "kind" : prefix) << " = samples\n";
    write_list(out, key("samples"), {p.samples().begin(), p.samples().end()});
}

inline void write_scalar_path(std::ostream& out, const std::string& prefix,
                              const ScalarPath& path) {
    auto key = [&](const std::string& k) { return prefix + "_" + k; };
    if (const auto* c = path.get_if<ScalarPath::Constant>()) {
        out << prefix << " = constant\n" << key("value") << " = " << format_double(c->value) << "\n";
    } else if (const auto* e = path.get_if<ScalarPath::Exponential>()) {
        out << prefix << " = exponential\n"
            << key("value") << " = " << format_double(e->value) << "\n"
            << key("growth") << " = " << format_double(e->growth) << "\n";
    } else if (const auto* sn = path.get_if<ScalarPath::Sinusoidal>()) {
        out << prefix << " = sinusoidal\n"
            << key("base") << " = " << format_double(sn->base) << "\n"
            << key("amplitude") << " = " << format_double(sn->amplitude) << "\n"
            << key("frequency") << " = " << format_double(sn->frequency) << "\n"
            << key("phase") << " = " << format_double(sn->phase) << "\n";
    } else if (const auto* sm = path.get_if<ScalarPath::Sampled>()) {
        out << prefix << " = sampled\n";
        write_list(out, key("times"), sm->data.times);
        write_list(out, key("values"), sm->data.values);
    }
}

}  // namespace scenario_io_detail

/// Serialize a scenario so that parse_scenario reproduces it exactly
/// (numbers are written in shortest round-trip form). Analytic consumption
/// kinds cannot be serialized.
inline void write_scenario(std::ostream& out, const Scenario& s) {
    using namespace scenario_io_detail;
    out << "[grid]\n";
    out << "size = " << s.grid_size() << "\n";
    out << "horizon = " << format_double(s.horizon) << "\n";
    write_list(out, "times", s.time_mesh);
    out << "modes = " << s.mode_cutoff << "\n";

    out << "\n[technology]\n";
    if (const auto* c = s.technology.get_if<TechnologyPath::Constant>()) {
        out << "kind = constant\nrate = " << format_double(c->rate) << "\n";
    } else if (const auto* sn = s.technology.get_if<TechnologyPath::Sinusoidal>()) {
        out << "kind = sinusoidal\n"
            << "base = " << format_double(sn->base) << "\n"
            << "amplitude = " << format_double(sn->amplitude) << "\n"
            << "frequency = " << format_double(sn->frequency) << "\n";
    } else if (const auto* sm = s.technology.get_if<TechnologyPath::Sampled>()) {
        out << "kind = sampled\n";
        write_list(out, "times", sm->data.times);
        write_list(out, "values", sm->data.values);
        if (s.technology.lower_bound())
            out << "lower_bound = " << format_double(*s.technology.lower_bound()) << "\n";
    }

    out << "\n[consumption]\n";
    if (const auto* sep = s.consumption.separable_kind()) {
        out << "kind = separable\n";
        write_profile(out, "spatial", sep->spatial);
        write_scalar_path(out, "temporal", sep->temporal);
    } else if (const auto* g = s.consumption.grid_kind()) {
        out << "kind = grid\n";
        write_list(out, "times", g->times);
        out << "values_inline = ";
        for (std::size_t j = 0; j < g->values.size(); ++j) {
            if (j) out << " | ";
            for (std::size_t i = 0; i < g->values[j].size(); ++i) {
                if (i) out << ", ";
                out << format_double(g->values[j][i]);
            }
        }
        out << "\n";
    } else {
        throw std::invalid_argument("analytic consumption fields cannot be serialized");
    }

    out << "\n[initial_capital]\n";
    write_profile(out, "", s.initial_capital);

    out << "\n[tolerances]\n";
    out << "series_tail = " << format_double(s.tolerances.series_tail) << "\n";
    out << "quadrature = " << format_double(s.tolerances.quadrature) << "\n";
    out << "fd_dt = " << format_double(s.tolerances.fd_dt) << "\n";
    out << "fd_dx = " << format_double(s.tolerances.fd_dx) << "\n";
    out << "feasibility = " << format_double(s.tolerances.feasibility) << "\n";
}

inline void save_scenario(const std::string& path, const Scenario& s) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scenario file: " + path);
    write_scenario(out, s);
}

}  // namespace akgrowth
