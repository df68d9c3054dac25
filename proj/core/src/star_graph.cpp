#include "asph/star_graph.hpp"

#include "asph/parser.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace asph {

std::vector<int> StarGraph::out_edges(int v) const
{
    std::vector<int> out;
    for (const StarEdge& e : edges)
        if (e.source == v) out.push_back(e.id);
    return out;
}

StarGraph build_star_graph(const RelativePresentation& p, const CoefficientOracle* oracle)
{
    StarGraph sg;
    sg.presentation = p;
    for (const std::string& x : p.x_gens) {
        sg.vertex_names.push_back(x);
        sg.vertex_names.push_back(x + "_bar");
    }
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        FreeProductWord r = cyclically_reduce(p.relators[ri], oracle);
        sg.presentation.relators[ri] = r;
        if (x_letter_count(r) == 0)
            throw std::invalid_argument("relator " + std::to_string(ri + 1) +
                                        " has no x-letters; the presentation is not orientable");
        std::vector<int> letters;
        std::vector<Word> after;
        for (auto& [l, c] : letter_sequence(r)) {
            letters.push_back(l);
            after.push_back(c);
        }
        const int m = static_cast<int>(letters.size());
        for (int i = 0; i < m; ++i) {
            int prev = (i + m - 1) % m;
            const Word& c = after[prev];
            int id = static_cast<int>(sg.edges.size());
            sg.edges.push_back({id, letter_vertex(letters[i]), letter_vertex(letters[prev]) ^ 1, free_reduce(inverse(c)),
                                static_cast<int>(ri), i, 1});
            sg.edges.push_back({id + 1, letter_vertex(letters[prev]) ^ 1, letter_vertex(letters[i]), free_reduce(c),
                                static_cast<int>(ri), i, -1});
        }
    }
    return sg;
}

WeightFunction::WeightFunction(std::vector<Rational> per_edge) : w_(std::move(per_edge))
{
    if (w_.size() % 2) throw std::invalid_argument("weight function needs an even number of oriented edges");
    for (std::size_t e = 0; e < w_.size(); e += 2)
        if (w_[e] != w_[e + 1])
            throw std::invalid_argument("weight function is not symmetric on pair " + std::to_string(e / 2));
}

WeightFunction WeightFunction::from_pairs(const std::vector<Rational>& per_pair)
{
    std::vector<Rational> w;
    for (const Rational& q : per_pair) {
        w.push_back(q);
        w.push_back(q);
    }
    return WeightFunction(std::move(w));
}

WeightFunction WeightFunction::constant(const StarGraph& sg, Rational value)
{
    return WeightFunction(std::vector<Rational>(sg.edges.size(), value));
}

std::vector<Rational> WeightFunction::per_pair() const
{
    std::vector<Rational> out;
    for (std::size_t e = 0; e < w_.size(); e += 2) out.push_back(w_[e]);
    return out;
}

bool is_cyclically_reduced_cycle(const StarGraph& sg, const std::vector<int>& edges)
{
    if (edges.empty()) return false;
    const std::size_t n = edges.size();
    for (std::size_t i = 0; i < n; ++i) {
        int e = edges[i], f = edges[(i + 1) % n];
        if (sg.edges[e].target != sg.edges[f].source) return false;
        if (f == StarGraph::pair_of(e)) return false;
    }
    return true;
}

Word cycle_label(const StarGraph& sg, const std::vector<int>& edges)
{
    Word w;
    for (int e : edges) w.insert(w.end(), sg.edges[e].label.begin(), sg.edges[e].label.end());
    return free_reduce(w);
}

Rational cycle_weight(const WeightFunction& theta, const std::vector<int>& edges)
{
    Rational s(0);
    for (int e : edges) s += theta(e);
    return s;
}

std::vector<int> canonical_cycle(const std::vector<int>& edges)
{
    std::vector<int> inv_storage(edges.rbegin(), edges.rend());
    const std::vector<int>& inv = inv_storage;
    for (int& e : inv_storage) e = StarGraph::pair_of(e);
    std::vector<int> best = edges;
    for (const auto* seq : {&edges, &inv}) {
        for (std::size_t r = 0; r < seq->size(); ++r) {
            std::vector<int> rot(seq->begin() + r, seq->end());
            rot.insert(rot.end(), seq->begin(), seq->begin() + r);
            if (rot < best) best = std::move(rot);
        }
    }
    return best;
}

namespace {

// Group elements of the edge labels in a finite model.
std::vector<int> label_elements(const StarGraph& sg, const FiniteGroupModel& m)
{
    std::vector<int> out;
    for (const StarEdge& e : sg.edges) out.push_back(m.element_of(e.label));
    return out;
}

// Integer weights after scaling by the common denominator.
struct ScaledWeights {
    std::vector<long long> w;
    long long scale = 1;

    Rational unscale(long long v) const { return Rational(v, scale); }
};

ScaledWeights scale_weights(const WeightFunction& theta)
{
    ScaledWeights s;
    for (std::size_t e = 0; e < theta.size(); ++e) s.scale = std::lcm(s.scale, theta(static_cast<int>(e)).denominator());
    for (std::size_t e = 0; e < theta.size(); ++e) {
        const Rational& q = theta(static_cast<int>(e));
        s.w.push_back(q.numerator() * (s.scale / q.denominator()));
    }
    return s;
}

// successors[e] = edges f with target(e) == source(f) and f != pair(e)
std::vector<std::vector<int>> line_graph(const StarGraph& sg)
{
    std::vector<std::vector<int>> by_source(sg.vertex_count());
    for (const StarEdge& e : sg.edges) by_source[e.source].push_back(e.id);
    std::vector<std::vector<int>> succ(sg.edges.size());
    for (const StarEdge& e : sg.edges)
        for (int f : by_source[e.target])
            if (f != StarGraph::pair_of(e.id)) succ[e.id].push_back(f);
    return succ;
}

const FiniteGroupModel& require_model(const CoefficientOracle& oracle)
{
    const FiniteGroupModel* m = oracle.finite_model();
    if (!m) throw std::invalid_argument("exact cycle weights need a finite coefficient group");
    return *m;
}

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

}  // namespace

std::vector<AdmissibleCycle> admissible_cycles(const StarGraph& sg, const CoefficientOracle& oracle, int max_len)
{
    if (max_len < 1) throw std::invalid_argument("max_len must be positive");
    const auto succ = line_graph(sg);
    const FiniteGroupModel* m = oracle.finite_model();
    std::vector<int> elt;
    if (m) elt = label_elements(sg, *m);

    std::set<std::vector<int>> seen;
    std::vector<AdmissibleCycle> out;
    std::vector<int> path;

    auto consider = [&](int element) {
        int first = path.front(), last = path.back();
        if (sg.edges[last].target != sg.edges[first].source || first == StarGraph::pair_of(last)) return;
        TriState trivial = m ? tri(element == 0) : oracle.is_trivial(cycle_label(sg, path));
        if (is_no(trivial)) return;
        std::vector<int> canon = canonical_cycle(path);
        if (!seen.insert(canon).second) return;
        AdmissibleCycle c;
        c.label = cycle_label(sg, canon);
        c.edges = std::move(canon);
        c.status = is_yes(trivial) ? AdmissibleCycle::Status::Admissible : AdmissibleCycle::Status::PossiblyAdmissible;
        out.push_back(std::move(c));
    };

    // every cycle has a rotation starting at its smallest edge id
    auto dfs = [&](auto&& self, int element) -> void {
        consider(element);
        if (static_cast<int>(path.size()) == max_len) return;
        for (int f : succ[path.back()]) {
            if (f < path.front()) continue;
            path.push_back(f);
            self(self, m ? m->multiply(element, elt[f]) : 0);
            path.pop_back();
        }
    };
    for (const StarEdge& e : sg.edges) {
        path = {e.id};
        dfs(dfs, m ? elt[e.id] : 0);
    }
    std::sort(out.begin(), out.end(), [](const AdmissibleCycle& a, const AdmissibleCycle& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        return a.edges < b.edges;
    });
    return out;
}

std::optional<std::vector<int>> find_negative_cycle(const StarGraph& sg, const WeightFunction& theta)
{
    const auto succ = line_graph(sg);
    const ScaledWeights sw = scale_weights(theta);
    const int n = static_cast<int>(sg.edges.size());
    // virtual source at distance 0 to every edge, paying that edge's weight
    std::vector<long long> dist(sw.w.begin(), sw.w.end());
    std::vector<int> pred(n, -1);
    int updated = -1;
    for (int iter = 0; iter < n; ++iter) {
        updated = -1;
        for (int e = 0; e < n; ++e)
            for (int f : succ[e])
                if (dist[e] + sw.w[f] < dist[f]) {
                    dist[f] = dist[e] + sw.w[f];
                    pred[f] = e;
                    updated = f;
                }
        if (updated < 0) return std::nullopt;
    }
    int v = updated;
    for (int i = 0; i < n; ++i) v = pred[v];
    std::vector<int> cycle;
    int u = v;
    do {
        cycle.push_back(u);
        u = pred[u];
    } while (u != v);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

MinCycleResult min_admissible_cycle_weight(const StarGraph& sg, const WeightFunction& theta,
                                           const CoefficientOracle& oracle)
{
    const FiniteGroupModel& m = require_model(oracle);
    MinCycleResult res;
    if (auto neg = find_negative_cycle(sg, theta)) {
        // a power of the negative cycle has trivial label
        long long ord = m.element_order(m.element_of(cycle_label(sg, *neg)));
        res.kind = MinCycleResult::Kind::NegativeInfinity;
        for (long long i = 0; i < ord; ++i) res.witness.insert(res.witness.end(), neg->begin(), neg->end());
        res.weight = cycle_weight(theta, res.witness);
        return res;
    }
    const auto succ = line_graph(sg);
    const ScaledWeights sw = scale_weights(theta);
    const std::vector<int> elt = label_elements(sg, m);
    const int ne = static_cast<int>(sg.edges.size());
    const long long order = m.order();
    const std::size_t states = static_cast<std::size_t>(ne) * order;

    long long best = kInf;
    std::vector<int> best_path;
    std::vector<long long> dist(states);
    std::vector<long long> pred(states);
    std::vector<char> queued(states);
    for (int e0 = 0; e0 < ne; ++e0) {
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(pred.begin(), pred.end(), -1);
        std::fill(queued.begin(), queued.end(), 0);
        std::size_t start = static_cast<std::size_t>(e0) * order + elt[e0];
        dist[start] = sw.w[e0];
        std::deque<std::size_t> q{start};
        queued[start] = 1;
        while (!q.empty()) {
            std::size_t s = q.front();
            q.pop_front();
            queued[s] = 0;
            int e = static_cast<int>(s / order);
            int g = static_cast<int>(s % order);
            for (int f : succ[e]) {
                std::size_t t = static_cast<std::size_t>(f) * order + m.multiply(g, elt[f]);
                if (dist[s] + sw.w[f] < dist[t]) {
                    dist[t] = dist[s] + sw.w[f];
                    pred[t] = static_cast<long long>(s);
                    if (!queued[t]) {
                        queued[t] = 1;
                        q.push_back(t);
                    }
                }
            }
        }
        for (int e = 0; e < ne; ++e) {
            std::size_t goal = static_cast<std::size_t>(e) * order;
            if (dist[goal] >= best || sg.edges[e].target != sg.edges[e0].source || e0 == StarGraph::pair_of(e)) continue;
            best = dist[goal];
            best_path.clear();
            for (long long s = static_cast<long long>(goal); s >= 0; s = pred[s]) best_path.push_back(static_cast<int>(s / order));
            std::reverse(best_path.begin(), best_path.end());
        }
    }
    if (best == kInf) return res;
    res.kind = MinCycleResult::Kind::Finite;
    res.weight = sw.unscale(best);
    res.witness = std::move(best_path);
    return res;
}

MinCycleResult min_admissible_cycle_weight_bounded(const StarGraph& sg, const WeightFunction& theta,
                                                   const CoefficientOracle& oracle, int max_len)
{
    if (max_len < 1) throw std::invalid_argument("max_len must be positive");
    const FiniteGroupModel& m = require_model(oracle);
    const auto succ = line_graph(sg);
    const ScaledWeights sw = scale_weights(theta);
    const std::vector<int> elt = label_elements(sg, m);
    const int ne = static_cast<int>(sg.edges.size());
    const long long order = m.order();
    const std::size_t states = static_cast<std::size_t>(ne) * order;

    MinCycleResult res;
    long long best = kInf;
    std::vector<std::vector<long long>> layer(max_len, std::vector<long long>(states));
    std::vector<std::vector<long long>> parent(max_len, std::vector<long long>(states));
    for (int e0 = 0; e0 < ne; ++e0) {
        for (int len = 0; len < max_len; ++len) {
            std::fill(layer[len].begin(), layer[len].end(), kInf);
            std::fill(parent[len].begin(), parent[len].end(), -1);
        }
        layer[0][static_cast<std::size_t>(e0) * order + elt[e0]] = sw.w[e0];
        for (int len = 0; len < max_len; ++len) {
            for (std::size_t s = 0; s < states; ++s) {
                long long d = layer[len][s];
                if (d == kInf) continue;
                int e = static_cast<int>(s / order);
                int g = static_cast<int>(s % order);
                if (g == 0 && sg.edges[e].target == sg.edges[e0].source && e0 != StarGraph::pair_of(e) && d < best) {
                    best = d;
                    res.witness.assign(len + 1, 0);
                    long long cur = static_cast<long long>(s);
                    for (int j = len; j >= 0; --j) {
                        res.witness[j] = static_cast<int>(cur / order);
                        cur = parent[j][cur];
                    }
                }
                if (len + 1 == max_len) continue;
                for (int f : succ[e]) {
                    std::size_t t = static_cast<std::size_t>(f) * order + m.multiply(g, elt[f]);
                    if (d + sw.w[f] < layer[len + 1][t]) {
                        layer[len + 1][t] = d + sw.w[f];
                        parent[len + 1][t] = static_cast<long long>(s);
                    }
                }
            }
        }
    }
    if (best == kInf) {
        res.witness.clear();
        return res;
    }
    res.kind = MinCycleResult::Kind::Finite;
    res.weight = sw.unscale(best);
    return res;
}

std::string to_dot(const StarGraph& sg, const WeightFunction* theta)
{
    std::string out = "graph star {\n";
    out += "  presentation=\"" + sg.presentation.to_text() + "\";\n";
    for (const std::string& v : sg.vertex_names) out += "  " + v + ";\n";
    for (int p = 0; p < sg.pair_count(); ++p) {
        const StarEdge& e = sg.edges[2 * p];
        out += "  " + sg.vertex_names[e.source] + " -- " + sg.vertex_names[e.target] + " [id=" + std::to_string(p) +
               ", label=\"" + format_word(e.label, sg.presentation.coeff.generators) + "\"";
        if (theta) out += ", weight=\"" + to_string((*theta)(2 * p)) + "\"";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

StarGraph star_graph_from_dot(const std::string& dot, const CoefficientOracle* oracle)
{
    const std::string key = "presentation=\"";
    std::size_t a = dot.find(key);
    if (a == std::string::npos) throw std::invalid_argument("DOT input lacks a presentation attribute");
    a += key.size();
    std::size_t b = dot.find('"', a);
    if (b == std::string::npos) throw std::invalid_argument("unterminated presentation attribute");
    return build_star_graph(parse_presentation(dot.substr(a, b - a)), oracle);
}

}  // namespace asph
