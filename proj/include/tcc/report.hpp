#pragma once

// Machine-readable reports emitted by the tcc CLI.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tcc/channel.hpp"
#include "tcc/code.hpp"
#include "tcc/comb.hpp"

namespace tcc {

/// Top-level object of `tcc build --json` and `tcc analyze --json`.
/// Keys that were not computed are omitted rather than written as null.
struct CodeSummary {
    std::uint32_t p = 0;
    std::size_t n = 0;
    std::optional<std::uint32_t> x;
    std::optional<std::uint32_t> y;
    std::uint32_t a = 0;
    std::size_t length = 0;
    std::size_t dimension = 0;
    std::optional<std::size_t> min_distance;
    std::optional<bool> mds;
    std::optional<std::size_t> detect;
    std::optional<std::size_t> correct;
    std::optional<Rate> rate;
    std::vector<std::vector<std::uint32_t>> generator;

    bool operator==(const CodeSummary&) const = default;
};

struct SpectrumSummary {
    std::uint32_t p = 0;
    std::size_t n = 0;
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    std::vector<std::pair<std::uint32_t, std::size_t>> spectrum;
    std::optional<std::vector<std::pair<std::uint32_t, std::size_t>>> scan;
    bool diagonalizable = false;

    bool operator==(const SpectrumSummary&) const = default;
};

struct SimulationSummary {
    std::uint32_t p = 0;
    std::size_t n = 0;
    std::optional<std::uint32_t> x;
    std::optional<std::uint32_t> y;
    std::uint32_t a = 0;
    std::size_t length = 0;
    std::size_t dimension = 0;
    std::size_t t = 0;
    std::string mode;  // "monte_carlo" or "exhaustive"
    std::uint64_t seed = 0;
    std::optional<ChannelStats> stats;
    std::optional<bool> correction_ok;
    std::optional<bool> detection_ok;
    std::optional<std::size_t> capacity;
    bool pass = false;

    bool operator==(const SimulationSummary&) const = default;
};

/// One tuple of the theorem sweep.
struct VerifyRow {
    std::uint32_t p = 0;
    std::size_t n = 0;
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    std::uint32_t a = 0;
    bool hypotheses_met = false;
    std::size_t dim = 0;
    std::optional<std::size_t> d;
    std::optional<bool> mds;
    /// Present only when hypotheses_met.
    std::optional<bool> matches_theorem;
    std::string note;

    bool operator==(const VerifyRow&) const = default;
};

void to_json(nlohmann::json& j, const Rate& r);
void from_json(const nlohmann::json& j, Rate& r);
void to_json(nlohmann::json& j, const ChannelStats& s);
void from_json(const nlohmann::json& j, ChannelStats& s);
void to_json(nlohmann::json& j, const CodeSummary& s);
void from_json(const nlohmann::json& j, CodeSummary& s);
void to_json(nlohmann::json& j, const SpectrumSummary& s);
void from_json(const nlohmann::json& j, SpectrumSummary& s);
void to_json(nlohmann::json& j, const SimulationSummary& s);
void from_json(const nlohmann::json& j, SimulationSummary& s);
void to_json(nlohmann::json& j, const VerifyRow& r);
void from_json(const nlohmann::json& j, VerifyRow& r);

}  // namespace tcc
