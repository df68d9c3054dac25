#pragma once

#include "asph/tristate.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace asph {

class CoefficientOracle;

// Letters are signed generator indices: +(i+1) is generator i, -(i+1) its inverse.
using Word = std::vector<int>;

constexpr int letter(int gen, bool inverted = false) { return inverted ? -(gen + 1) : gen + 1; }
constexpr int letter_gen(int l) { return (l > 0 ? l : -l) - 1; }

Word inverse(const Word& w);
Word free_reduce(const Word& w);
// Free reduction followed by removal of cancelling ends.
Word cyclic_free_reduce(const Word& w);
Word concat(const Word& a, const Word& b);
Word word_power(const Word& w, long long e);
// Exponent sum of generator gen in w.
long long exponent_sum(const Word& w, int gen);

// "g^2 h^-1"; the empty word prints as "1".
std::string format_word(const Word& w, const std::vector<std::string>& names);

struct CoefficientGroup {
    enum class Kind { Cyclic, General };

    std::vector<std::string> generators;
    std::vector<Word> relators;
    Kind kind = Kind::General;
    long long cyclic_order = 0;  // n when kind == Cyclic

    static CoefficientGroup cyclic(long long n, std::string name = "g");
    static CoefficientGroup free(std::vector<std::string> names);
    static CoefficientGroup presented(std::vector<std::string> names, std::vector<Word> relators);

    int generator_index(const std::string& name) const;
    std::string to_text() const;
};

struct Syllable {
    enum class Kind { Coefficient, Free };

    Kind kind = Kind::Coefficient;
    Word word;  // over coefficient generators, or over x-generators

    bool is_coefficient() const { return kind == Kind::Coefficient; }
    bool is_free() const { return kind == Kind::Free; }
    static Syllable coefficient(Word w) { return {Kind::Coefficient, std::move(w)}; }
    static Syllable free(Word w) { return {Kind::Free, std::move(w)}; }
    bool operator==(const Syllable&) const = default;
};

struct FreeProductWord {
    std::vector<Syllable> syllables;

    bool empty() const { return syllables.empty(); }
    bool operator==(const FreeProductWord&) const = default;
};

FreeProductWord inverse(const FreeProductWord& w);
FreeProductWord concat(const FreeProductWord& a, const FreeProductWord& b);

struct RelativePresentation {
    CoefficientGroup coeff;
    std::vector<std::string> x_gens;
    std::vector<FreeProductWord> relators;

    std::string format(const FreeProductWord& w) const;
    std::string to_text() const;
};

// Free reduction in G * F.  Coefficient syllables the oracle proves trivial are dropped;
// without an oracle only free cancellation is used.
FreeProductWord reduce(const FreeProductWord& w, const CoefficientOracle* oracle = nullptr);
FreeProductWord cyclically_reduce(const FreeProductWord& w, const CoefficientOracle* oracle = nullptr);
std::size_t free_product_length(const FreeProductWord& w);
std::size_t x_letter_count(const FreeProductWord& w);

// The x-letters of a cyclically reduced word each paired with the coefficient that follows it,
// starting from the first x-letter after rotating away a leading coefficient syllable.
std::vector<std::pair<int, Word>> letter_sequence(const FreeProductWord& w);

// Maximal-exponent root of a cyclically reduced word, when the exponent is at least 2.
// Coefficient syllables are compared with the oracle; undecided comparisons count as unequal.
std::optional<std::pair<FreeProductWord, int>> is_proper_power(const FreeProductWord& w,
                                                               const CoefficientOracle* oracle = nullptr);

// Conjugacy in G * F for cyclically reduced inputs.
TriState conjugate_in_free_product(const FreeProductWord& u, const FreeProductWord& v,
                                   const CoefficientOracle* oracle);

struct OrientabilityReport {
    TriState orientable = TriState::Yes;
    std::string witness;  // names the violated relator condition
};

OrientabilityReport is_orientable(const RelativePresentation& p, const CoefficientOracle* oracle);

// x^l g x^k h over the given coefficient group with a single x-generator named x.
RelativePresentation length_four_presentation(const CoefficientGroup& G, const Word& g, const Word& h,
                                              int l, int k, std::string x = "x");

}  // namespace asph
