#include "tfl/scenarios.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace tfl {

namespace {

double param_or(const ParamMap& p, const std::string& key, double fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

} // namespace

SymbolGrid make_symbol(const SymbolSpec& spec, long L, std::uint64_t seed) {
    if (L < 2) throw ScenarioError("make_symbol: L must be >= 2");
    SymbolGrid a = SymbolGrid::zeros(L);
    const double ck = param_or(spec.params, "ck", 0.0);
    const double cn = param_or(spec.params, "cn", 0.0);
    if (spec.kind == "gaussian2d") {
        const double s = param_or(spec.params, "s", static_cast<double>(L) / 6.0);
        if (!(s > 0.0)) throw ScenarioError("gaussian2d: width must be positive");
        for (long k = 0; k < L; ++k)
            for (long n = 0; n < L; ++n) {
                const double dk = centered_coord(k - std::lround(ck), L);
                const double dn = centered_coord(n - std::lround(cn), L);
                a.at(k, n) = std::exp(-M_PI * (dk * dk + dn * dn) / (s * s));
            }
    } else if (spec.kind == "disk-indicator") {
        const double radius = param_or(spec.params, "radius", static_cast<double>(L) / 5.0);
        if (!(radius > 0.0)) throw ScenarioError("disk-indicator: radius must be positive");
        for (long k = 0; k < L; ++k)
            for (long n = 0; n < L; ++n) {
                const double dk = centered_coord(k - std::lround(ck), L);
                const double dn = centered_coord(n - std::lround(cn), L);
                a.at(k, n) = (dk * dk + dn * dn <= radius * radius) ? 1.0 : 0.0;
            }
    } else if (spec.kind == "power-decay") {
        // |z~|^{-rho}, capped at 1 at the centered origin
        const double rho = param_or(spec.params, "rho", 4.0);
        if (!(rho > 0.0)) throw ScenarioError("power-decay: rho must be positive");
        for (long k = 0; k < L; ++k)
            for (long n = 0; n < L; ++n) {
                const double dk = centered_coord(k, L);
                const double dn = centered_coord(n, L);
                const double r2 = dk * dk + dn * dn;
                a.at(k, n) = r2 == 0.0 ? 1.0 : std::min(1.0, std::pow(r2, -0.5 * rho));
            }
    } else if (spec.kind == "random-complex") {
        GaussianRng rng(seed);
        for (long k = 0; k < L; ++k)
            for (long n = 0; n < L; ++n) {
                const double re = rng.next();
                const double im = rng.next();
                a.at(k, n) = cxd(re, im);
            }
    } else if (spec.kind == "constant") {
        const double value = param_or(spec.params, "value", 1.0);
        for (cxd& z : a.v) z = value;
    } else if (spec.kind == "delta") {
        a.at(mod_reduce(std::lround(ck), L), mod_reduce(std::lround(cn), L)) = 1.0;
    } else if (spec.kind == "file") {
        return read_symbol_file(spec.file, L);
    } else {
        throw ScenarioError("make_symbol: unknown symbol kind '" + spec.kind + "'");
    }
    return a;
}

namespace {

std::vector<cxd> read_complex_lines(const std::string& path, std::size_t count) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open file: " + path);
    std::vector<cxd> out;
    out.reserve(count);
    std::string line;
    while (out.size() < count && std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        double re = 0.0, im = 0.0;
        if (!(is >> re)) throw ScenarioError("bad complex line in " + path);
        is >> im;
        out.emplace_back(re, im);
    }
    if (out.size() != count)
        throw ScenarioError("file " + path + ": expected " + std::to_string(count) + " values");
    return out;
}

} // namespace

Signal read_signal_file(const std::string& path, long L) {
    return read_complex_lines(path, static_cast<std::size_t>(L));
}

SymbolGrid read_symbol_file(const std::string& path, long L) {
    SymbolGrid g;
    g.L = L;
    g.v = read_complex_lines(path, static_cast<std::size_t>(L) * static_cast<std::size_t>(L));
    return g;
}

namespace {

Signal build_window(const std::string& kind, const ParamMap& params, const std::string& file,
                    long L, bool normalize) {
    if (kind == "file") {
        Signal g = read_signal_file(file, L);
        if (normalize) {
            const double n = norm2(g);
            if (n == 0.0) throw ScenarioError("window file is all zero: " + file);
            for (cxd& z : g) z /= n;
        }
        return g;
    }
    return make_window(kind, L, param_or(params, "s", 0.0), normalize);
}

} // namespace

BuiltScenario build_scenario(const ScenarioSpec& spec) {
    if (spec.L < 2) throw ScenarioError("scenario: L must be >= 2");
    const LatticeSpec lat = spec.lattice();
    lat.validate();
    for (const std::string& a : spec.analysis)
        if (a != "decay" && a != "weighted")
            throw ScenarioError("scenario: unknown analysis '" + a + "'");

    BuiltScenario built;
    built.spec = spec;
    built.lat = lat;
    built.symbol = make_symbol(spec.symbol, spec.L, spec.seed);
    built.phi1 = build_window(spec.windows.kind, spec.windows.params, spec.windows.file, spec.L,
                              spec.windows.normalize);
    if (spec.windows.kind2.empty()) {
        built.phi2 = built.phi1;
    } else {
        built.phi2 = build_window(spec.windows.kind2, spec.windows.params2, spec.windows.file2,
                                  spec.L, spec.windows.normalize);
    }
    built.op = localization_build(built.symbol, built.phi1, built.phi2);
    return built;
}

namespace {

ScenarioSpec preset_antiwick_gauss_63() {
    ScenarioSpec s;
    s.name = "antiwick-gauss-63";
    s.L = 63;
    s.symbol.kind = "gaussian2d";
    s.symbol.params["s"] = 63.0 / 6.0;
    s.windows.kind = "gaussian";
    s.alpha = s.beta = 3;
    s.analysis = {"decay", "weighted"};
    s.seed = 1729;
    return s;
}

ScenarioSpec preset_powerdecay_63() {
    ScenarioSpec s;
    s.name = "powerdecay-63";
    s.L = 63;
    s.symbol.kind = "power-decay";
    s.symbol.params["rho"] = 4.0;
    s.windows.kind = "gaussian";
    s.alpha = s.beta = 3;
    s.analysis = {"decay", "weighted"};
    s.seed = 1729;
    return s;
}

ScenarioSpec preset_disk_33() {
    ScenarioSpec s;
    s.name = "disk-33";
    s.L = 33;
    s.symbol.kind = "disk-indicator";
    s.symbol.params["radius"] = 33.0 / 5.0;
    s.windows.kind = "gaussian";
    s.alpha = s.beta = 3;
    s.analysis = {"decay"};
    s.seed = 1729;
    return s;
}

ScenarioSpec preset_delta_33() {
    ScenarioSpec s;
    s.name = "delta-33";
    s.L = 33;
    s.symbol.kind = "delta";
    s.windows.kind = "gaussian";
    s.alpha = s.beta = 3;
    s.analysis = {"decay"};
    s.seed = 1729;
    return s;
}

ScenarioSpec preset_identity_33() {
    ScenarioSpec s;
    s.name = "identity-33";
    s.L = 33;
    s.symbol.kind = "constant";
    s.symbol.params["value"] = 1.0;
    s.windows.kind = "gaussian";
    s.alpha = s.beta = 3;
    s.analysis = {"decay"};
    s.seed = 1729;
    return s;
}

ScenarioSpec preset_complex_asym_33() {
    ScenarioSpec s;
    s.name = "complex-asym-33";
    s.L = 33;
    s.symbol.kind = "random-complex";
    s.windows.kind = "gaussian";
    s.windows.kind2 = "hann";
    s.alpha = s.beta = 3;
    s.analysis = {"decay"};
    s.seed = 1729;
    return s;
}

const std::vector<std::pair<ScenarioSpec (*)(), std::string>>& preset_table() {
    static const std::vector<std::pair<ScenarioSpec (*)(), std::string>> table = {
        {&preset_antiwick_gauss_63,
         "Anti-Wick operator: Gaussian symbol (width L/6), equal Gaussian windows, L=63, lattice 3x3"},
        {&preset_powerdecay_63,
         "power-decay symbol |z|^-4 (capped at 1), Gaussian windows, L=63, lattice 3x3"},
        {&preset_disk_33, "disk indicator symbol (radius L/5), Gaussian windows, L=33, lattice 3x3"},
        {&preset_delta_33, "delta symbol at the origin (rank-1 operator), L=33, lattice 3x3"},
        {&preset_identity_33, "constant symbol 1 (identity operator), L=33, lattice 3x3"},
        {&preset_complex_asym_33,
         "random complex symbol with distinct Gaussian/Hann windows (non-Hermitian), L=33"},
    };
    return table;
}

} // namespace

std::vector<PresetEntry> list_presets() {
    std::vector<PresetEntry> out;
    for (const auto& [fn, desc] : preset_table()) out.push_back({fn().name, desc});
    return out;
}

ScenarioSpec preset(const std::string& name) {
    for (const auto& [fn, desc] : preset_table()) {
        ScenarioSpec s = fn();
        if (s.name == name) return s;
    }
    throw ScenarioError("unknown preset '" + name + "'");
}

namespace {

ParamMap parse_params(const nlohmann::json& j) {
    ParamMap out;
    if (j.is_null()) return out;
    if (!j.is_object()) throw ScenarioError("scenario: params must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number()) throw ScenarioError("scenario: param values must be numbers");
        out[it.key()] = it.value().get<double>();
    }
    return out;
}

} // namespace

ScenarioSpec parse_scenario_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ScenarioError(std::string("scenario: JSON parse error: ") + e.what());
    }
    try {
        ScenarioSpec s;
        if (!j.contains("name") || !j.contains("L") || !j.contains("symbol") ||
            !j.contains("windows") || !j.contains("lattice"))
            throw ScenarioError("scenario: required keys: name, L, symbol, windows, lattice");
        s.name = j.at("name").get<std::string>();
        s.L = j.at("L").get<long>();
        const auto& sym = j.at("symbol");
        s.symbol.kind = sym.at("kind").get<std::string>();
        if (sym.contains("params")) s.symbol.params = parse_params(sym.at("params"));
        if (sym.contains("file")) s.symbol.file = sym.at("file").get<std::string>();
        const auto& win = j.at("windows");
        s.windows.kind = win.at("kind").get<std::string>();
        if (win.contains("params")) s.windows.params = parse_params(win.at("params"));
        if (win.contains("file")) s.windows.file = win.at("file").get<std::string>();
        if (win.contains("kind2")) s.windows.kind2 = win.at("kind2").get<std::string>();
        if (win.contains("params2")) s.windows.params2 = parse_params(win.at("params2"));
        if (win.contains("file2")) s.windows.file2 = win.at("file2").get<std::string>();
        if (win.contains("normalize")) s.windows.normalize = win.at("normalize").get<bool>();
        const auto& lattice = j.at("lattice");
        s.alpha = lattice.at("alpha").get<long>();
        s.beta = lattice.at("beta").get<long>();
        if (j.contains("analysis"))
            for (const auto& a : j.at("analysis")) s.analysis.push_back(a.get<std::string>());
        if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ScenarioError(std::string("scenario: schema error: ") + e.what());
    }
}

ScenarioSpec load_scenario(const std::string& path_or_preset) {
    if (std::filesystem::exists(path_or_preset)) {
        std::ifstream in(path_or_preset);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_scenario_json(buf.str());
    }
    return preset(path_or_preset);
}

} // namespace tfl
