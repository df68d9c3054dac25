#pragma once

#include "asph/coefficient_oracle.hpp"
#include "asph/rational.hpp"
#include "asph/star_graph.hpp"
#include "asph/words.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace asph {

// Arc a crossed at end e reads x^(orient) at end 0 and x^(-orient) at end 1, where reading
// means traversing the disc boundary (or the picture boundary) clockwise.
struct ArcEnd {
    int arc = 0;
    int end = 0;
    bool operator==(const ArcEnd&) const = default;
};

// Clockwise boundary: arcs[i] is immediately followed by corners[i].
struct Disc {
    std::vector<ArcEnd> arcs;
    std::vector<Word> corners;

    int degree() const { return static_cast<int>(arcs.size()); }
};

struct Arc {
    int x = 0;       // x-generator index
    int orient = 1;  // reading at end 0
};

struct CornerRef {
    int disc = 0;
    int corner = 0;
    bool operator==(const CornerRef&) const = default;
    auto operator<=>(const CornerRef&) const = default;
};

struct Picture {
    std::vector<Disc> discs;
    std::vector<Arc> arcs;
    std::vector<ArcEnd> outer;           // arc-ends on the picture boundary, clockwise
    std::optional<CornerRef> annular;    // a corner of the region that meets the boundary

    int reading(ArcEnd e) const { return arcs[e.arc].orient * (e.end == 0 ? 1 : -1); }
    // Signed x-letter read when crossing the arc at this end.
    int letter_at(ArcEnd e) const { return reading(e) > 0 ? letter(arcs[e.arc].x) : letter(arcs[e.arc].x, true); }
};

// A corner of the boundary pseudo-vertex has disc == -1.
struct Region {
    std::vector<CornerRef> corners;  // anticlockwise traversal
    std::vector<int> arcs;           // arc crossed after each corner
    bool inner = true;
    bool annular = false;

    int degree() const { return static_cast<int>(arcs.size()); }
};

struct PictureMap {
    std::vector<Region> regions;
    std::vector<std::vector<int>> region_of;  // [disc][corner]
    int vertices = 0;
    int components = 0;
    bool planar = false;
};

// Structural checks; throws std::invalid_argument on malformed incidence data.
void check_structure(const Picture& pic, int x_count);
PictureMap build_map(const Picture& pic);

struct DiscCheck {
    TriState valid = TriState::No;
    int relator = -1;
    int sign = 0;       // +1 for r, -1 for r^-1
    int rotation = 0;   // relator x-letter position matching arcs[0]
    std::string message;
};

struct RegionCheck {
    TriState trivial = TriState::Yes;
    Word label;
    bool checked = false;  // inner regions only
};

struct PictureReport {
    TriState valid = TriState::Yes;
    bool planar = false;
    bool spherical = false;
    TriState strictly_spherical = TriState::Unknown;
    std::vector<DiscCheck> discs;
    std::vector<RegionCheck> regions;
    PictureMap map;
    std::vector<std::string> problems;
};

PictureReport validate_picture(const Picture& pic, const RelativePresentation& p, const CoefficientOracle& oracle);

// W(kappa) read from the arc after the corner, as (letter, following corner) pairs.
std::vector<std::pair<int, Word>> corner_word(const Picture& pic, CornerRef k);

struct Dipole {
    CornerRef first;
    CornerRef second;
    int arc = 0;
};

std::optional<Dipole> find_dipole(const Picture& pic, const CoefficientOracle& oracle);
Picture cancel_dipole(const Picture& pic, const Dipole& d);

// Angles in units of pi, indexed [disc][corner].
using AngleFunction = std::vector<std::vector<Rational>>;

AngleFunction standard_angles(const Picture& pic);
bool angles_sum_to_two(const Picture& pic, const AngleFunction& ang);

struct CurvatureReport {
    std::vector<Rational> regions;  // units of pi
    Rational total{0};
};

// Curvature 2 - sum(1 - theta) per region, with the picture boundary contracted to a point.
CurvatureReport curvature(const Picture& pic, const AngleFunction& ang);
// Curvature of a region whose corners sit at vertices of the given degrees, with angles 2/d.
Rational region_curvature(const std::vector<int>& vertex_degrees);

struct Transfer {
    int source = 0;
    int sink = 0;
    Rational amount{0};
};

struct TransferReport {
    std::vector<Rational> redistributed;
    Rational total{0};
    bool conserved = false;
};

TransferReport apply_transfers(const CurvatureReport& c, const std::vector<Transfer>& rules);

// Star-graph edge for the corner; the disc must be valid against p.
int corner_star_edge(const Picture& pic, const StarGraph& sg, const DiscCheck& disc, CornerRef k);

// A random spherical picture over relator `rel` of p: a random tree of discs doubled along its
// boundary with its mirror image.  Uses 2 * half_discs discs.
Picture random_spherical_picture(std::mt19937_64& rng, const RelativePresentation& p, int rel, int half_discs);
// Random positive angles summing to 2 at each disc.
AngleFunction random_angles(std::mt19937_64& rng, const Picture& pic);

}  // namespace asph
