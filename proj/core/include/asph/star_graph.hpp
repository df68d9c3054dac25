#pragma once

#include "asph/coefficient_oracle.hpp"
#include "asph/rational.hpp"
#include "asph/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace asph {

// Vertex 2j is x_j, vertex 2j+1 is x_j^-1.
constexpr int letter_vertex(int l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }

struct StarEdge {
    int id = 0;
    int source = 0;
    int target = 0;
    Word label;        // over the coefficient generators
    int relator = 0;   // index into the presentation's relators
    int position = 0;  // x-letter position within the cyclically reduced relator
    int sign = 1;      // +1 or -1 for the two orientations of one pair
};

// Oriented edges come in pairs: edges[2p] and edges[2p+1] are mutually inverse, so the
// involution is e -> e ^ 1 and p is the unoriented pair id.
struct StarGraph {
    RelativePresentation presentation;  // with cyclically reduced relators
    std::vector<std::string> vertex_names;
    std::vector<StarEdge> edges;

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    int pair_count() const { return static_cast<int>(edges.size() / 2); }
    static int pair_of(int e) { return e ^ 1; }
    // Oriented edges leaving v, in id order.
    std::vector<int> out_edges(int v) const;
};

// Throws std::invalid_argument for a relator without x-letters.
StarGraph build_star_graph(const RelativePresentation& p, const CoefficientOracle* oracle = nullptr);

// Symmetric rational weights, stored per oriented edge.
class WeightFunction {
public:
    WeightFunction() = default;
    // Throws std::invalid_argument unless values[e] == values[e ^ 1].
    explicit WeightFunction(std::vector<Rational> per_edge);
    static WeightFunction from_pairs(const std::vector<Rational>& per_pair);
    static WeightFunction constant(const StarGraph& sg, Rational value);

    const Rational& operator()(int edge) const { return w_[edge]; }
    std::size_t size() const { return w_.size(); }
    std::vector<Rational> per_pair() const;

private:
    std::vector<Rational> w_;
};

struct AdmissibleCycle {
    enum class Status { Admissible, PossiblyAdmissible };

    std::vector<int> edges;  // oriented edge ids
    Word label;              // product of the edge labels, freely reduced
    Status status = Status::Admissible;
};

// Closed, cyclically reduced edge sequence check (no e followed by its pair, wrap included).
bool is_cyclically_reduced_cycle(const StarGraph& sg, const std::vector<int>& edges);
Word cycle_label(const StarGraph& sg, const std::vector<int>& edges);
Rational cycle_weight(const WeightFunction& theta, const std::vector<int>& edges);
// Minimal rotation of the cycle or of its inverse.
std::vector<int> canonical_cycle(const std::vector<int>& edges);

// All admissible cycles of length <= max_len up to rotation and inversion, in (length, canonical
// form) order.  Undecided labels are kept with PossiblyAdmissible status.
std::vector<AdmissibleCycle> admissible_cycles(const StarGraph& sg, const CoefficientOracle& oracle, int max_len);

struct MinCycleResult {
    enum class Kind { None, Finite, NegativeInfinity };

    Kind kind = Kind::None;
    Rational weight{0};        // the minimum when Finite, the witness weight otherwise
    std::vector<int> witness;  // an admissible cycle attaining the minimum, or of negative weight
};

// Exact minimum over all admissible cycles for finite G.  Throws std::invalid_argument when the
// oracle carries no finite model.
MinCycleResult min_admissible_cycle_weight(const StarGraph& sg, const WeightFunction& theta,
                                           const CoefficientOracle& oracle);

// Minimum over admissible cycles of length <= max_len, by dynamic programming over
// (length, edge, group element); finite G only.
MinCycleResult min_admissible_cycle_weight_bounded(const StarGraph& sg, const WeightFunction& theta,
                                                   const CoefficientOracle& oracle, int max_len);

// A cyclically reduced closed cycle of negative weight, by Bellman-Ford on the line graph.
std::optional<std::vector<int>> find_negative_cycle(const StarGraph& sg, const WeightFunction& theta);

std::string to_dot(const StarGraph& sg, const WeightFunction* theta = nullptr);
// Rebuilds the graph from the presentation attribute written by to_dot.
StarGraph star_graph_from_dot(const std::string& dot, const CoefficientOracle* oracle = nullptr);

}  // namespace asph
