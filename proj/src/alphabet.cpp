#include "smma/alphabet.hpp"

#include <unordered_set>

#include "smma/errors.hpp"
#include "smma/utf8.hpp"

namespace smma {

namespace {

constexpr char32_t kDotlessI = 0x0131; // ı
constexpr char32_t kDottedI = 0x0130;  // İ

char32_t latin_lower(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 32;
    // Latin-1 supplement uppercase block, excluding the multiplication sign
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
    // Latin Extended-A letters used by Turkish: Ğ, Ş
    if (cp == 0x011E) return 0x011F;
    if (cp == 0x015E) return 0x015F;
    return cp;
}

} // namespace

void AlphabetSpec::validate() const {
    if (omega < 1)
        throw Error("alphabet '" + name + "': omega must be a positive integer");
    if (letters.empty())
        return;
    if (static_cast<int>(letters.size()) != omega)
        throw Error("alphabet '" + name + "': omega=" + std::to_string(omega) +
                    " but " + std::to_string(letters.size()) + " letters given");
    std::unordered_set<char32_t> seen;
    for (const auto& letter : letters) {
        const auto cps = utf8::decode(letter);
        if (cps.size() != 1)
            throw Error("alphabet '" + name + "': letter '" + letter +
                        "' is not a single codepoint");
        if (!seen.insert(fold(cps[0])).second)
            throw Error("alphabet '" + name + "': duplicate letter '" + letter +
                        "' after case folding");
    }
}

bool AlphabetSpec::contains(char32_t cp) const {
    for (const auto& letter : letters) {
        std::size_t pos = 0;
        if (utf8::decode_next(letter, pos) == cp)
            return true;
    }
    return false;
}

char32_t AlphabetSpec::fold(char32_t cp) const {
    if (cp == U'I' && contains(kDotlessI)) return kDotlessI;
    if (cp == kDottedI) return U'i';
    return latin_lower(cp);
}

AlphabetSpec english26() {
    AlphabetSpec spec;
    spec.name = "en26";
    spec.omega = 26;
    for (char c = 'a'; c <= 'z'; ++c)
        spec.letters.push_back(std::string(1, c));
    return spec;
}

AlphabetSpec turkish29() {
    AlphabetSpec spec;
    spec.name = "tr29";
    spec.omega = 29;
    for (const char32_t cp : {U'a', U'b', U'c', U'ç', U'd', U'e', U'f', U'g',
                              U'ğ', U'h', char32_t{kDotlessI}, U'i', U'j',
                              U'k', U'l', U'm', U'n', U'o', U'ö', U'p', U'r',
                              U's', U'ş', U't', U'u', U'ü', U'v', U'y', U'z'})
        spec.letters.push_back(utf8::encode(cp));
    return spec;
}

std::optional<AlphabetSpec> alphabet_preset(std::string_view name) {
    if (name == "en26") return english26();
    if (name == "tr29") return turkish29();
    return std::nullopt;
}

AlphabetSpec custom_alphabet(std::string_view name, std::string_view letters) {
    AlphabetSpec spec;
    spec.name = std::string(name);
    for (const char32_t cp : utf8::decode(letters))
        spec.letters.push_back(utf8::encode(spec.fold(cp)));
    spec.omega = static_cast<int>(spec.letters.size());
    spec.validate();
    return spec;
}

} // namespace smma
