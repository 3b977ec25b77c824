#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smma {

/// What tokenize does with characters outside the alphabet.
enum class OovPolicy {
    Split,    ///< out-of-alphabet characters act as word separators (default)
    DropWord, ///< any whitespace-delimited token containing one is dropped whole
};

struct TokenPolicy {
    bool fold_case = true;
    OovPolicy out_of_alphabet = OovPolicy::Split;
};

/// A fixed letter inventory. `omega` is the structural degeneracy used by the
/// SMMA model: the size of the language's alphabet, supplied up front rather
/// than inferred from observed text.
struct AlphabetSpec {
    std::string name;
    int omega = 0;
    /// Case-folded letters in canonical order, one UTF-8 encoded letter per
    /// entry. May be empty when only `omega` is known (count-only alphabets).
    std::vector<std::string> letters;

    /// Throws smma::Error if omega < 1, letters disagree with omega, or the
    /// folded letters contain duplicates.
    void validate() const;

    bool contains(char32_t cp) const;

    /// Lower-case folding for this alphabet. Alphabets containing a dotless i
    /// fold 'I' to U+0131 and 'İ' to 'i'; everything else gets plain
    /// ASCII/Latin-1 lowering.
    char32_t fold(char32_t cp) const;

    bool operator==(const AlphabetSpec&) const = default;
};

/// 26-letter a..z alphabet ("en26").
AlphabetSpec english26();

/// 29-letter Turkish alphabet ("tr29").
AlphabetSpec turkish29();

/// Preset lookup by name; empty when unknown.
std::optional<AlphabetSpec> alphabet_preset(std::string_view name);

/// Builds a validated custom alphabet from a string of letters
/// (one letter per codepoint, folded before deduplication checks).
AlphabetSpec custom_alphabet(std::string_view name, std::string_view letters);

} // namespace smma
