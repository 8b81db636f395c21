#include "gmcusp/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace gmcusp {
namespace {

struct Entry {
    std::string key;
    std::string value;
    std::string where;  // "line 3" or "override 'cfl=0.3'"
};

std::string_view trim(std::string_view s) noexcept {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

[[noreturn]] void fail(const Entry& e, const std::string& why) {
    throw ConfigError(e.where + ": key '" + e.key + "': " + why);
}

double to_double(const Entry& e) {
    const std::string v = lower(e.value);
    if (v == "inf" || v == "infinity") return std::numeric_limits<double>::infinity();
    double out = 0.0;
    const auto [end, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), out);
    if (ec != std::errc() || end != e.value.data() + e.value.size() || std::isnan(out))
        fail(e, "expected a number, got '" + e.value + "'");
    return out;
}

long to_long(const Entry& e) {
    long out = 0;
    const auto [end, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), out);
    if (ec != std::errc() || end != e.value.data() + e.value.size())
        fail(e, "expected an integer, got '" + e.value + "'");
    return out;
}

bool to_bool(const Entry& e) {
    const std::string v = lower(e.value);
    if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
    if (v == "false" || v == "no" || v == "off" || v == "0") return false;
    fail(e, "expected true or false, got '" + e.value + "'");
}

template <class Enum>
Enum to_enum(const Entry& e, std::initializer_list<std::pair<std::string_view, Enum>> options) {
    const std::string v = lower(e.value);
    std::string allowed;
    for (const auto& [name, value] : options) {
        if (v == name) return value;
        allowed += (allowed.empty() ? "" : ", ") + std::string(name);
    }
    fail(e, "expected one of {" + allowed + "}, got '" + e.value + "'");
}

std::vector<Entry> tokenize(std::string_view text) {
    std::vector<Entry> entries;
    std::map<std::string, int> seen;
    std::string section;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(where + ": unterminated section header");
            section = lower(trim(line.substr(1, line.size() - 2)));
            if (section.empty()) throw ConfigError(where + ": empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(where + ": expected 'key = value'");
        std::string key = lower(trim(line.substr(0, eq)));
        if (key.empty()) throw ConfigError(where + ": missing key");
        if (!section.empty()) key = section + "." + key;
        Entry e{key, std::string(trim(line.substr(eq + 1))), where};
        if (e.value.empty()) fail(e, "missing value");
        if (const auto it = seen.find(key); it != seen.end())
            fail(e, "duplicate of line " + std::to_string(it->second));
        seen.emplace(key, line_no);
        entries.push_back(std::move(e));
    }
    return entries;
}

Entry parse_override(const std::string& text) {
    const std::string where = "override '" + text + "'";
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key=value");
    Entry e{lower(trim(std::string_view(text).substr(0, eq))), std::string(trim(std::string_view(text).substr(eq + 1))),
            where};
    if (e.key.empty()) throw ConfigError(where + ": missing key");
    if (e.value.empty()) fail(e, "missing value");
    return e;
}

std::pair<int, int> parse_grid(const Entry& e) {
    const std::string v = lower(e.value);
    const auto x = v.find('x');
    if (x == std::string::npos) fail(e, "expected NXxNY, got '" + e.value + "'");
    Entry nx{e.key, v.substr(0, x), e.where};
    Entry ny{e.key, v.substr(x + 1), e.where};
    const long a = to_long(nx);
    const long b = to_long(ny);
    if (a < 4 || b < 4 || a > 100000 || b > 100000) fail(e, "grid dimensions must lie in [4, 100000]");
    return {static_cast<int>(a), static_cast<int>(b)};
}

std::vector<SnapshotFormat> parse_formats(const Entry& e) {
    std::vector<SnapshotFormat> out;
    std::istringstream in(e.value);
    for (std::string item; std::getline(in, item, ',');) {
        const Entry one{e.key, std::string(trim(item)), e.where};
        const SnapshotFormat f = to_enum<SnapshotFormat>(one, {{"csv", SnapshotFormat::Csv}, {"vtk", SnapshotFormat::Vtk}});
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    if (out.empty()) fail(e, "no formats given");
    return out;
}

using Handler = std::function<void(RunConfig&, const Entry&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
    static const std::map<std::string, Handler, std::less<>> table = {
        {"scheme",
         [](RunConfig& c, const Entry& e) {
             c.scheme.scheme = to_enum<Scheme>(
                 e, {{"gm", Scheme::GenuinelyMultidimensional}, {"two_state", Scheme::TwoState}});
         }},
        {"order",
         [](RunConfig& c, const Entry& e) {
             c.scheme.order = to_enum<Order>(e, {{"first", Order::First}, {"second", Order::Second}});
         }},
        {"limiter",
         [](RunConfig& c, const Entry& e) {
             c.scheme.limiter = to_enum<Limiter>(e, {{"minmod", Limiter::Minmod}, {"van_leer", Limiter::VanLeer}});
         }},
        {"cfl",
         [](RunConfig& c, const Entry& e) {
             const double v = to_double(e);
             if (!(v > 0.0 && v <= 1.0)) fail(e, "must lie in (0, 1], got " + e.value);
             c.scheme.cfl = v;
         }},
        {"cfl_rule",
         [](RunConfig& c, const Entry& e) {
             c.scheme.cfl_rule = to_enum<CflRule>(
                 e, {{"auto", CflRule::Auto}, {"per_axis", CflRule::PerAxis}, {"combined", CflRule::Combined}});
         }},
        {"gamma",
         [](RunConfig& c, const Entry& e) {
             const double v = to_double(e);
             if (!(v > 1.0) || std::isinf(v)) fail(e, "must exceed 1, got " + e.value);
             c.gamma = v;
         }},
        {"grid",
         [](RunConfig& c, const Entry& e) {
             const auto [nx, ny] = parse_grid(e);
             c.case_spec = with_resolution(c.case_spec, nx, ny);
         }},
        {"t_final",
         [](RunConfig& c, const Entry& e) {
             const double v = to_double(e);
             if (!(v >= 0.0)) fail(e, "must be non-negative");
             c.case_spec.t_final = v;
         }},
        {"max_steps",
         [](RunConfig& c, const Entry& e) {
             const long v = to_long(e);
             if (v < 0) fail(e, "must be non-negative");
             c.case_spec.max_steps = v;
         }},
        {"vortex_strength", [](RunConfig& c, const Entry& e) { c.case_spec.vortex_strength = to_double(e); }},
        {"shock_mach",
         [](RunConfig& c, const Entry& e) {
             const double v = to_double(e);
             if (!(v > 1.0) || std::isinf(v)) fail(e, "must exceed 1, got " + e.value);
             c.case_spec.shock_mach = v;
         }},
        {"perturbation",
         [](RunConfig& c, const Entry& e) {
             const double v = to_double(e);
             if (!(std::abs(v) < 1.0)) fail(e, "must lie in (-1, 1)");
             c.case_spec.perturbation = v;
         }},
        {"output.dir", [](RunConfig& c, const Entry& e) { c.output.directory = e.value; }},
        {"output.every_steps",
         [](RunConfig& c, const Entry& e) {
             const long v = to_long(e);
             if (v <= 0) fail(e, "cadence must be positive");
             c.output.every_steps = v;
         }},
        {"output.every_time",
         [](RunConfig& c, const Entry& e) {
             const double v = to_double(e);
             if (!(v > 0.0) || std::isinf(v)) fail(e, "cadence must be positive");
             c.output.every_time = v;
         }},
        {"output.formats", [](RunConfig& c, const Entry& e) { c.output.formats = parse_formats(e); }},
        {"diagnostics.refinements",
         [](RunConfig& c, const Entry& e) {
             const long v = to_long(e);
             if (v < 0 || v > 6) fail(e, "must lie in [0, 6]");
             c.diagnostics.refinements = static_cast<int>(v);
         }},
        {"diagnostics.instability_metrics",
         [](RunConfig& c, const Entry& e) { c.diagnostics.instability_metrics = to_bool(e); }},
        {"diagnostics.totals", [](RunConfig& c, const Entry& e) { c.diagnostics.totals = to_bool(e); }},
    };
    return table;
}

}  // namespace

std::string_view scheme_key(Scheme scheme) noexcept {
    return scheme == Scheme::TwoState ? "two_state" : "gm";
}

std::string_view order_key(Order order) noexcept { return order == Order::First ? "first" : "second"; }

std::string_view limiter_key(Limiter limiter) noexcept { return limiter == Limiter::Minmod ? "minmod" : "van_leer"; }

std::string_view cfl_rule_key(CflRule rule) noexcept {
    switch (rule) {
        case CflRule::Auto: return "auto";
        case CflRule::PerAxis: return "per_axis";
        case CflRule::Combined: return "combined";
    }
    return "auto";
}

void RunConfig::validate() const {
    if (!(gamma > 1.0)) throw ConfigError("gamma must exceed 1");
    scheme.validate();
    case_spec.validate();
    if (output.every_steps && *output.every_steps <= 0) throw ConfigError("output.every_steps must be positive");
    if (output.every_time && !(*output.every_time > 0.0)) throw ConfigError("output.every_time must be positive");
    if (output.formats.empty()) throw ConfigError("output.formats is empty");
    if (diagnostics.refinements < 0) throw ConfigError("diagnostics.refinements must be non-negative");
}

RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
    std::vector<Entry> entries = tokenize(text);
    for (const std::string& o : overrides) entries.push_back(parse_override(o));

    const Entry* case_entry = nullptr;
    for (const Entry& e : entries)
        if (e.key == "case") case_entry = &e;
    if (!case_entry) throw ConfigError("missing required key 'case'");
    const std::optional<CaseName> name = parse_case_name(lower(case_entry->value));
    if (!name) {
        std::string known;
        for (CaseName n : all_cases()) known += (known.empty() ? "" : ", ") + std::string(case_key(n));
        fail(*case_entry, "unknown case '" + case_entry->value + "' (known: " + known + ")");
    }

    RunConfig config;
    config.case_spec = default_case(*name);
    config.scheme.scheme = config.case_spec.scheme.value_or(Scheme::GenuinelyMultidimensional);
    config.scheme.order = config.case_spec.order.value_or(Order::Second);
    config.scheme.limiter = config.case_spec.limiter.value_or(Limiter::Minmod);
    config.scheme.cfl = config.case_spec.cfl;
    if (*name != CaseName::IsentropicVortex) config.diagnostics.refinements = 0;

    for (const Entry& e : entries) {
        if (e.key == "case") continue;
        const auto it = handlers().find(e.key);
        if (it == handlers().end()) fail(e, "unknown key");
        it->second(config, e);
    }
    config.case_spec.cfl = config.scheme.cfl;
    config.case_spec.scheme = config.scheme.scheme;
    config.case_spec.order = config.scheme.order;
    config.case_spec.limiter = config.scheme.limiter;
    config.validate();
    return config;
}

RunConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), overrides);
}

}  // namespace gmcusp
