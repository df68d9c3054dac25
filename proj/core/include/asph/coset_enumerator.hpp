#pragma once

#include "asph/tristate.hpp"
#include "asph/words.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace asph {

// An ordinary finite presentation; words use the letter convention of words.hpp.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    int rank() const { return static_cast<int>(generators.size()); }
};

enum class Strategy { HLT, Felsch };

constexpr long long kDefaultCosetCap = 10'000'000;

// kDefaultCosetCap unless ASPH_COSET_CAP holds a positive integer.
long long default_coset_cap();

struct EnumerationOptions {
    long long cap = default_coset_cap();  // maximum number of simultaneously live cosets
    Strategy strategy = Strategy::HLT;
};

struct EnumerationStats {
    long long total_defined = 0;
    long long max_live = 0;
    long long coincidences = 0;
    long long space_recoveries = 0;
};

class CosetTable {
public:
    enum class Status { Complete, BudgetExceeded };

    Status status = Status::BudgetExceeded;
    long long cap = 0;
    int columns = 0;              // two per generator: generator, inverse
    std::vector<std::int32_t> data;  // row-major, coset 0 is the subgroup coset
    EnumerationStats stats;

    bool complete() const { return status == Status::Complete; }
    long long index() const { return columns == 0 ? 1 : static_cast<long long>(data.size()) / columns; }
    int act(int coset, int letter) const;
    int act_word(int coset, const Word& w) const;
};

// Todd-Coxeter enumeration of the cosets of <subgroup> in the presented group.
// Deterministic for fixed options.  Running out of space is reported through the status.
CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                     const EnumerationOptions& options = {});

// Checks that a complete table is a permutation action satisfying every relator and fixing
// coset 0 under every subgroup generator.
bool verify_table(const Presentation& p, const std::vector<Word>& subgroup, const CosetTable& t);

struct OrderResult {
    enum class Kind { Finite, ExceedsBudget };

    Kind kind = Kind::ExceedsBudget;
    long long value = 0;  // the order, or the cap that was exhausted

    static OrderResult finite(long long n) { return {Kind::Finite, n}; }
    static OrderResult exceeds(long long cap) { return {Kind::ExceedsBudget, cap}; }
    bool is_finite() const { return kind == Kind::Finite; }
    std::string to_string() const;
    bool operator==(const OrderResult&) const = default;
};

OrderResult group_order(const Presentation& p, const EnumerationOptions& options = {});
OrderResult element_order(const Presentation& p, const Word& w, const EnumerationOptions& options = {});
TriState words_equal(const Presentation& p, const Word& u, const Word& v,
                     const EnumerationOptions& options = {});

// Ordinary presentation of G(P): coefficient generators followed by the x-generators.
Presentation lift(const RelativePresentation& p);
Presentation as_presentation(const CoefficientGroup& G);
// Coefficient word or relative word rewritten in the lifted alphabet.
Word lift_word(const RelativePresentation& p, const FreeProductWord& w);

}  // namespace asph
