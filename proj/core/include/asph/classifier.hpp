#pragma once

#include "asph/coefficient_oracle.hpp"
#include "asph/coset_enumerator.hpp"
#include "asph/tristate.hpp"
#include "asph/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace asph {

// <G, x | x^l g x^k h> with g, h nontrivial, l > 0, k != 0.
struct LengthFourInstance {
    CoefficientGroup G;
    Word g;
    Word h;
    int l = 1;
    int k = 1;

    RelativePresentation presentation() const;
    // Cyclic ZMod n shorthand: g = t^a, h = t^b.
    static LengthFourInstance cyclic(long long n, long long a, long long b, int l, int k);
};

// Reads x^l g x^k h off a one-relator presentation with one x-generator, up to cyclic
// permutation and inversion.  Throws std::invalid_argument for any other shape.
LengthFourInstance length_four_instance(const RelativePresentation& p, const CoefficientOracle* oracle = nullptr);

// Equivalent instance with l >= |k|: cyclic permutation swaps (l, g) with (k, h), and
// x -> x^-1 followed by a cyclic permutation sends (l, k, g, h) to (-k, -l, h, g).
LengthFourInstance canonical(const LengthFourInstance& inst);

struct CaseFlags {
    TriState P = TriState::Unknown;
    TriState Z = TriState::Unknown;
    TriState M = TriState::Unknown;
    TriState J4 = TriState::Unknown;
    TriState J6 = TriState::Unknown;
    TriState K5 = TriState::Unknown;
    TriState K6_plus = TriState::Unknown;
    TriState K6_minus = TriState::Unknown;
    TriState L6 = TriState::Unknown;

    TriState BBP_E4 = TriState::Unknown;
    TriState BBP_E5 = TriState::Unknown;
    TriState HM_E = TriState::Unknown;
    TriState AEJ_E = TriState::Unknown;  // any of (i)-(iv) with the given l, k
    TriState E_E1 = TriState::Unknown;
    TriState E_E2 = TriState::Unknown;
    TriState E_E3 = TriState::Unknown;
    TriState AAE_E = TriState::Unknown;
    TriState AAE_E4 = TriState::Unknown;
    TriState D_E1 = TriState::Unknown;
    TriState D_E2 = TriState::Unknown;
    TriState D_E4 = TriState::Unknown;

    ElementOrder order_g, order_h, order_gh_inv;
    MuValue mu;

    // Disjunction of the nine listed cases.
    TriState any_listed() const;
    std::vector<std::string> holding() const;
};

CaseFlags case_flags(const LengthFourInstance& inst, const CoefficientOracle& oracle);

struct CaseVerdict {
    TriState dr = TriState::Unknown;
    TriState aspherical = TriState::Unknown;
    std::string tag;       // rule that decided the verdict
    std::string citation;  // literature key
    bool conjectural = false;
    std::optional<long long> claimed_order;  // |G(Q)| the justification relies on
    std::string blocking;                    // undecided query, for open cases
    std::vector<std::string> notes;          // other rules that also apply

    bool open() const { return is_unknown(aspherical); }
    std::string headline() const;  // e.g. "Aspherical (J4, BW1)"
};

struct ClassifyOptions {
    long long cap = default_coset_cap();
    // When positive, undecided instances with finite G fall back to enumerating G(Q).
    long long lift_cap = 0;
};

CaseVerdict classify(const LengthFourInstance& inst, const ClassifyOptions& options = {});

struct VerificationReport {
    enum class Status { Consistent, Inconsistent, Skipped };
    Status status = Status::Skipped;
    OrderResult order;
    ElementOrder coefficient_order;
    std::string message;

    bool fatal() const { return status == Status::Inconsistent; }
};

VerificationReport verify_verdict(const LengthFourInstance& inst, const CaseVerdict& verdict, long long cap);

const char* to_string(VerificationReport::Status s);

}  // namespace asph
