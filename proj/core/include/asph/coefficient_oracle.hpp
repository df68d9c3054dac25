#pragma once

#include "asph/coset_enumerator.hpp"
#include "asph/free_product_group.hpp"
#include "asph/rational.hpp"
#include "asph/tristate.hpp"
#include "asph/words.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace asph {

struct ElementOrder {
    enum class Kind { Finite, Infinite, Unknown };

    Kind kind = Kind::Unknown;
    long long value = 0;

    static ElementOrder finite(long long n) { return {Kind::Finite, n}; }
    static ElementOrder infinite() { return {Kind::Infinite, 0}; }
    static ElementOrder unknown() { return {Kind::Unknown, 0}; }
    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite; }
    bool is_unknown() const { return kind == Kind::Unknown; }
    // Finite n equals n, Infinite never equals, Unknown is undecided.
    TriState equals(long long n) const;
    // Yes when finite and greater than n, or infinite.
    TriState greater_than(long long n) const;
    std::string to_string() const;
    bool operator==(const ElementOrder&) const = default;
};

// A finite group given by its right regular action.  Element 0 is the identity and every
// element carries a shortlex-minimal representative word.
class FiniteGroupModel {
public:
    static std::optional<FiniteGroupModel> build(const CoefficientGroup& G, long long cap);

    long long order() const { return static_cast<long long>(reps_.size()); }
    int rank() const { return rank_; }
    int act(int element, int letter) const;
    int element_of(const Word& w) const;
    int multiply(int a, int b) const;
    int inverse(int a) const;
    long long element_order(int a) const;
    const Word& representative(int a) const { return reps_[a]; }
    bool abelian() const;

private:
    int rank_ = 0;
    std::vector<std::int32_t> table_;  // element * 2 * rank + column
    std::vector<Word> reps_;
    std::vector<int> inverse_;
};

struct MuValue {
    Rational value{0};
    bool lower_bound_only = false;  // some order was not established as finite
};

// Word-problem and order queries in a coefficient group.  Free products of cyclic groups are
// answered from normal forms; otherwise the group is enumerated once up to the cap.
class CoefficientOracle {
public:
    enum class Backend { FreeProductOfCyclics, Finite, Undecided };

    explicit CoefficientOracle(CoefficientGroup G, long long cap = default_coset_cap());

    const CoefficientGroup& group() const { return G_; }
    Backend backend() const { return backend_; }
    long long cap() const { return cap_; }
    const FreeProductOfCyclics* free_product() const { return fpc_ ? &*fpc_ : nullptr; }
    const FiniteGroupModel* finite_model() const { return model_ ? &*model_ : nullptr; }

    TriState is_trivial(const Word& w) const;
    TriState equal(const Word& u, const Word& v) const;
    TriState commute(const Word& u, const Word& v) const;
    ElementOrder order(const Word& w) const;
    // |G| when finite; Infinite for infinite free products; Unknown past the budget.
    ElementOrder group_order() const;
    TriState torsion_free() const;
    // Whether v lies in the cyclic subgroup generated by u.
    TriState in_cyclic_subgroup(const Word& v, const Word& u) const;

private:
    CoefficientGroup G_;
    long long cap_;
    Backend backend_ = Backend::Undecided;
    std::optional<FreeProductOfCyclics> fpc_;
    std::optional<FiniteGroupModel> model_;
};

// 1/|g| + 1/|h| + 1/|g h^-1| with 1/infinity = 0.
MuValue mu(const CoefficientOracle& oracle, const Word& g, const Word& h);

}  // namespace asph
