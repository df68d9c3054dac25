#pragma once

#include "asph/coefficient_oracle.hpp"
#include "asph/coset_enumerator.hpp"
#include "asph/words.hpp"

#include <optional>
#include <vector>

namespace asph {

// Invariant factors of the abelianisation; 0 entries are free summands, 1s are dropped.
std::vector<long long> abelian_invariants(const Presentation& p);

struct LiftedOrder {
    OrderResult order;
    // Set when a homomorphism G(P) -> G fixing G was found, so G embeds and the
    // enumeration ran over the cosets of the coefficient subgroup.
    bool used_retraction = false;
    long long coefficient_index = 0;  // index of G in G(P) when used_retraction
};

// |G(P)| by coset enumeration.  For finite G the images x -> t are searched for a retraction,
// which lets the enumeration run over cosets of G instead of the trivial subgroup.
LiftedOrder lifted_group_order(const RelativePresentation& p, const CoefficientOracle& oracle,
                               const EnumerationOptions& options = {});

// Whether the natural map G -> G(P) is an isomorphism, for finite G.  Differing abelian
// invariants prove No without enumeration.
TriState lift_isomorphism(const RelativePresentation& p, const CoefficientOracle& oracle,
                          const EnumerationOptions& options = {});

}  // namespace asph
