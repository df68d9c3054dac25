#pragma once

#include "asph/coefficient_oracle.hpp"
#include "asph/parser.hpp"
#include "asph/pictures.hpp"
#include "asph/star_graph.hpp"
#include "asph/words.hpp"

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

// Independent reference computations shared by the unit and acceptance tests.
namespace oracle {

inline std::string read_fixture(const std::string& name)
{
    std::ifstream in(std::string(ASPH_FIXTURES) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Order of t^a in Z_n.
inline long long cyclic_order(long long n, long long a)
{
    a %= n;
    if (a < 0) a += n;
    return n / std::gcd(n, a == 0 ? n : a);
}

inline long long mod(long long a, long long n)
{
    a %= n;
    return a < 0 ? a + n : a;
}

// Exponent of a word over a cyclic group, read letter by letter.
inline long long cyclic_value(const asph::Word& w, long long n)
{
    long long e = 0;
    for (int l : w) e += l > 0 ? 1 : -1;
    return mod(e, n);
}

// Minimum weight over cyclically reduced closed edge sequences of length <= max_len with
// trivial label in Z_n, by enumerating every sequence.
inline std::optional<asph::Rational> brute_min_cycle(const asph::StarGraph& sg, const asph::WeightFunction& theta,
                                                     long long n, int max_len)
{
    std::optional<asph::Rational> best;
    std::vector<int> path;
    const int E = static_cast<int>(sg.edges.size());
    auto rec = [&](auto&& self, int len) -> void {
        if (len > 0 && sg.edges[path.back()].target == sg.edges[path.front()].source &&
            (path.back() ^ 1) != path.front()) {
            long long e = 0;
            asph::Rational w(0);
            for (int id : path) {
                e += cyclic_value(sg.edges[id].label, n);
                w += theta(id);
            }
            if (mod(e, n) == 0 && (!best || w < *best)) best = w;
        }
        if (len == max_len) return;
        for (int id = 0; id < E; ++id) {
            if (len > 0 && (sg.edges[path.back()].target != sg.edges[id].source || (path.back() ^ 1) == id)) continue;
            path.push_back(id);
            self(self, len + 1);
            path.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

// Whether every disc at a corner of the region also has a corner outside degree-2 regions,
// so standard angles give the region's corners 0.
inline bool has_open_corners(const asph::PictureMap& m, const asph::Region& reg)
{
    for (const asph::CornerRef& k : reg.corners) {
        if (k.disc < 0) return false;
        bool open = false;
        for (int r : m.region_of[k.disc]) open = open || m.regions[r].degree() != 2;
        if (!open) return false;
    }
    return true;
}

// Random relative word over generators {a, b} (coefficients) and {x}.
inline asph::FreeProductWord random_word(std::mt19937_64& rng, int syllables)
{
    asph::FreeProductWord w;
    std::uniform_int_distribution<int> coin(0, 1), len(1, 3), gen(0, 1);
    bool coeff = coin(rng);
    for (int i = 0; i < syllables; ++i, coeff = !coeff) {
        asph::Word s;
        int L = len(rng);
        for (int j = 0; j < L; ++j) s.push_back(coeff ? asph::letter(gen(rng), coin(rng)) : asph::letter(0, coin(rng)));
        w.syllables.push_back(coeff ? asph::Syllable::coefficient(s) : asph::Syllable::free(s));
    }
    return w;
}

}  // namespace oracle
