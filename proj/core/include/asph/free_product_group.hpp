#pragma once

#include "asph/words.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace asph {

// A free product of cyclic groups, one factor per generator; order 0 means infinite cyclic.
// Covers cyclic groups, free groups and presentations such as <g, h | g^2, h^3>.
class FreeProductOfCyclics {
public:
    using NormalForm = std::vector<std::pair<int, long long>>;  // (generator, exponent)

    explicit FreeProductOfCyclics(std::vector<long long> factor_orders);

    // Recognises presentations whose relators are all powers of single generators.
    static std::optional<FreeProductOfCyclics> recognise(const CoefficientGroup& G);

    const std::vector<long long>& factor_orders() const { return orders_; }
    bool torsion_free() const;
    bool finite() const;
    std::optional<long long> group_order() const;

    // Exponents lie in [0, n) for finite factors; identity syllables are removed.
    NormalForm normal_form(const Word& w) const;
    Word to_word(const NormalForm& nf) const;
    bool is_trivial(const Word& w) const { return normal_form(w).empty(); }
    bool equal(const Word& u, const Word& v) const;
    // nullopt means infinite order.
    std::optional<long long> order(const Word& w) const;

private:
    std::vector<long long> orders_;
};

}  // namespace asph
