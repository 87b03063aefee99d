#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orthospec/fuchsian.hpp"
#include "orthospec/trace_formula.hpp"

namespace orthospec {

// Parsed form of the JSON configuration document accepted by every CLI
// subcommand.  Exactly one of `builtin` / `generators` must be present
// when a group is required; parameters irrelevant to a given subcommand
// are simply ignored by it.
struct GroupConfig {
    std::optional<std::string> builtin;
    std::vector<std::array<double, 4>> generators;

    std::vector<int> geodesic_word;
    std::vector<int> geodesic2_word;

    std::optional<CharacterPair> characters;

    // params block
    std::optional<double> t;
    std::vector<double> t_ladder;
    std::vector<double> z_ladder;
    std::vector<double> x_ladder;
    std::optional<double> cutoff_x;
    double tolerance = 0.0;  // 0 disables the truncation-tolerance gate
    std::size_t budget = 5'000'000;
    int threads = 0;
    std::optional<double> vol_x;
    std::optional<double> len_c;
    std::optional<double> lambda_max;
    std::optional<double> r;
    std::optional<double> z;
    std::optional<int> m;
    std::optional<int> n;
    std::optional<double> x;
    std::optional<std::string> spectral_csv;

    std::string echo;  // canonical compact re-serialization of the input
};

// Parses and schema-checks a config document.  Parse failures carry the
// line and column of the offending byte.
GroupConfig parse_config(const std::string& json_text);

// Builds the group named by the config (builtin or explicit generators).
FuchsianGroup load_group(const GroupConfig& config);

EnumerationParams enumeration_params(const GroupConfig& config);

// Reads a spectral CSV with header "lambda,p".
std::vector<SpectralDatum> read_spectral_csv(const std::string& path);

}  // namespace orthospec
