#pragma once

#include "asph/classifier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace asph {

// One cell or worked example with a known (or unknown) answer.
struct Table1Fixture {
    std::string id;      // e.g. "{2,1} K5"
    std::string row;     // "{2,1}", "example"
    std::string column;  // "K5", "K6+", "K6-", "L6", or the example name
    LengthFourInstance instance;
    std::optional<long long> order;  // |G(Q)| when finite and recorded
    bool open = false;               // a '?' cell
    bool extended = false;           // only with the long-running battery
    std::string reference;
};

// Table cells and examples in display order.
const std::vector<Table1Fixture>& table1_fixtures();

// Recorded |G(Q)| for <Z_n, x | x^l t^a x^k t^b>, up to automorphisms of Z_n and the
// relator symmetries that keep (l, k) fixed.
std::optional<long long> known_cyclic_order(long long n, int l, int k, long long a, long long b);

}  // namespace asph
