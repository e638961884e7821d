// scenarios.hpp - symbol/window generators, named experiment presets and the
// scenario file schema.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tfl/gabor.hpp"
#include "tfl/quantize.hpp"

namespace tfl {

using ParamMap = std::map<std::string, double>;

struct SymbolSpec {
    std::string kind = "gaussian2d"; // gaussian2d | disk-indicator | power-decay |
                                     // random-complex | constant | delta | file
    ParamMap params;
    std::string file;
};

struct WindowSpec {
    std::string kind = "gaussian"; // gaussian | hann | delta | file
    ParamMap params;
    std::string file;
    std::string kind2;  // optional distinct synthesis window
    ParamMap params2;
    std::string file2;
    bool normalize = true;
};

struct ScenarioSpec {
    std::string name;
    long L = 0;
    SymbolSpec symbol;
    WindowSpec windows;
    long alpha = 1;
    long beta = 1;
    std::vector<std::string> analysis; // subset of {"decay", "weighted"}
    std::uint64_t seed = 0;

    LatticeSpec lattice() const { return LatticeSpec{alpha, beta, L}; }
};

// Symbol generators; centered coordinates, deterministic given the seed.
SymbolGrid make_symbol(const SymbolSpec& spec, long L, std::uint64_t seed);

// Load a signal or a symbol grid from text files ("re im" per line).
Signal read_signal_file(const std::string& path, long L);
SymbolGrid read_symbol_file(const std::string& path, long L);

struct BuiltScenario {
    ScenarioSpec spec;
    SymbolGrid symbol;
    Signal phi1;
    Signal phi2;
    Operator op;
    LatticeSpec lat;
};

BuiltScenario build_scenario(const ScenarioSpec& spec);

struct PresetEntry {
    std::string name;
    std::string description;
};

std::vector<PresetEntry> list_presets();

// Throws ScenarioError for unknown names.
ScenarioSpec preset(const std::string& name);

// JSON schema: {name, L, symbol:{kind, params}, windows:{kind, params,
// normalize}, lattice:{alpha, beta}, analysis:[...], seed}.
ScenarioSpec parse_scenario_json(const std::string& text);

// File path if it exists, otherwise a preset name.
ScenarioSpec load_scenario(const std::string& path_or_preset);

} // namespace tfl
