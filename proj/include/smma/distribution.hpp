#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smma/alphabet.hpp"

namespace smma {

struct LengthState {
    int length = 0;          ///< l_i, letters
    std::int64_t count = 0;  ///< n_i, distinct words of that length

    bool operator==(const LengthState&) const = default;
};

/// Histogram of distinct-word counts per length state, with totals
///   N = sum n_i   and   L = sum l_i * n_i
/// stored redundantly and re-checked on load.
struct LengthDistribution {
    std::vector<LengthState> states; ///< lengths strictly increasing, each >= 1
    std::string source_label;
    std::optional<AlphabetSpec> alphabet;
    std::int64_t total_distinct = 0; ///< N
    std::int64_t total_letters = 0;  ///< L

    void validate() const; ///< throws smma::Error on any violated invariant

    std::vector<int> lengths() const;
    std::vector<double> counts() const;
    int max_length() const; ///< largest observed length; 0 when empty

    /// Builds a distribution from states, computing N and L.
    static LengthDistribution from_states(std::vector<LengthState> states,
                                          std::string source_label = "",
                                          std::optional<AlphabetSpec> alphabet = {});

    bool operator==(const LengthDistribution&) const = default;
};

/// Parses the tab-separated distribution format:
///   # key=value          (source_label, alphabet, omega, letters,
///                          total_distinct, total_letters)
///   length<TAB>count     (header line, optional on input)
///   <int><TAB><int>      rows, lengths ascending
/// Throws ParseError naming the offending line; `origin` prefixes messages.
LengthDistribution parse_distribution(std::string_view text,
                                      std::string_view origin = "");

LengthDistribution load_distribution(const std::filesystem::path& path);

/// Inverse of parse_distribution; output is deterministic, byte for byte.
std::string format_distribution(const LengthDistribution& d);

void save_distribution(const LengthDistribution& d,
                       const std::filesystem::path& path);

} // namespace smma
