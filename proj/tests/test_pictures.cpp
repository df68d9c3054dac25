#include "support.hpp"

#include "asph/picture_io.hpp"
#include "asph/pictures.hpp"

#include <doctest.h>

using namespace asph;

namespace {

PictureDocument load(const char* name) { return read_picture_json(oracle::read_fixture(name)); }

Rational total_angle(const AngleFunction& a)
{
    Rational s(0);
    for (const auto& disc : a)
        for (const Rational& q : disc) s += q;
    return s;
}

}  // namespace

TEST_SUITE("pictures")
{
    TEST_CASE("spherical picture over a Z2 coefficient")
    {
        PictureDocument doc = load("fig2.json");
        CoefficientOracle o(doc.presentation.coeff);
        PictureReport r = validate_picture(doc.picture, doc.presentation, o);
        CHECK(is_yes(r.valid));
        CHECK(r.planar);
        CHECK(r.spherical);
        CHECK(doc.picture.discs.size() == 4);
        CHECK(doc.picture.arcs.size() == 6);
        CHECK(r.map.regions.size() == 4);
        for (const DiscCheck& d : r.discs) {
            CHECK(is_yes(d.valid));
            CHECK(d.relator == 0);
        }
        for (const RegionCheck& rc : r.regions)
            if (rc.checked) CHECK(is_yes(rc.trivial));
        CHECK_FALSE(find_dipole(doc.picture, o));

        // Euler characteristic of the sphere: V - E + F = 2
        CHECK(r.map.vertices - static_cast<int>(doc.picture.arcs.size()) + static_cast<int>(r.map.regions.size()) == 2);

        CurvatureReport c = curvature(doc.picture, standard_angles(doc.picture));
        CHECK(c.total == Rational(4));
    }

    TEST_CASE("dipole detection and cancellation")
    {
        PictureDocument doc = load("fig1a.json");
        CoefficientOracle o(doc.presentation.coeff);
        PictureReport r = validate_picture(doc.picture, doc.presentation, o);
        REQUIRE(is_yes(r.valid));
        CHECK_FALSE(r.spherical);
        auto d = find_dipole(doc.picture, o);
        REQUIRE(d);
        CHECK(d->first == CornerRef{0, 1});
        CHECK(d->second == CornerRef{1, 2});
        CHECK(d->arc == 2);
        CHECK(is_yes(r.discs[0].valid));
        CHECK(r.discs[0].sign == -r.discs[1].sign);

        Picture reduced = cancel_dipole(doc.picture, *d);
        CHECK(reduced.discs.size() + 2 == doc.picture.discs.size());
        PictureReport after = validate_picture(reduced, doc.presentation, o);
        CHECK(is_yes(after.valid));
        CHECK(after.map.regions.size() == 4);
        CHECK(reduced.arcs.size() == 3);
        CHECK_FALSE(find_dipole(reduced, o));
    }

    TEST_CASE("empty picture")
    {
        RelativePresentation p = parse_presentation("group <g | >; x; rel x g");
        CoefficientOracle o(p.coeff);
        Picture empty;
        PictureReport r = validate_picture(empty, p, o);
        CHECK(is_yes(r.valid));
        CHECK_FALSE(r.spherical);
    }

    TEST_CASE("a disc that does not read a relator is invalid")
    {
        PictureDocument doc = load("fig2.json");
        CoefficientOracle o(doc.presentation.coeff);
        Picture bad = doc.picture;
        bad.discs[0].corners[2] = {2};  // h where the relator has 1
        PictureReport r = validate_picture(bad, doc.presentation, o);
        CHECK(is_no(r.valid));
        CHECK(is_no(r.discs[0].valid));
        CHECK_FALSE(r.problems.empty());

        Picture broken = doc.picture;
        broken.discs[0].arcs[0] = {99, 0};
        CHECK_THROWS_AS(check_structure(broken, 1), std::invalid_argument);
    }

    TEST_CASE("standard angles")
    {
        PictureDocument doc = load("fig2.json");
        PictureMap m = build_map(doc.picture);
        AngleFunction a = standard_angles(doc.picture);
        CHECK(angles_sum_to_two(doc.picture, a));
        int bigon_corners = 0;
        for (std::size_t v = 0; v < a.size(); ++v) {
            int open = 0;
            for (int j = 0; j < doc.picture.discs[v].degree(); ++j)
                if (m.regions[m.region_of[v][j]].degree() != 2) ++open;
            for (int j = 0; j < doc.picture.discs[v].degree(); ++j) {
                if (m.regions[m.region_of[v][j]].degree() == 2 && open > 0) {
                    CHECK(a[v][j] == Rational(0));
                    ++bigon_corners;
                } else {
                    CHECK(a[v][j] == Rational(2, open > 0 ? open : doc.picture.discs[v].degree()));
                }
            }
        }
        CHECK(total_angle(a) == Rational(2 * static_cast<int>(doc.picture.discs.size())));
        a[0][0] += Rational(1, 7);
        CHECK_FALSE(angles_sum_to_two(doc.picture, a));
    }

    TEST_CASE("region curvature")
    {
        CHECK(region_curvature({3, 3, 3, 3, 3, 3}) == Rational(0));
        CHECK(region_curvature({4, 4, 4, 4}) == Rational(0));
        CHECK(region_curvature({3, 3, 3}) == Rational(1));
        CHECK(region_curvature({3, 4, 4}) == Rational(2, 3));
        CHECK(region_curvature({4, 4, 4, 4, 4}) < 0);
    }

    TEST_CASE("degree-2 regions have zero curvature under standard angles")
    {
        std::mt19937_64 rng(9);
        RelativePresentation p = parse_presentation("group <g, h | >; x; rel x^2 g x^-1 h");
        int bigons = 0;
        for (int trial = 0; trial < 20; ++trial) {
            Picture pic = random_spherical_picture(rng, p, 0, 1 + trial % 4);
            PictureMap m = build_map(pic);
            CurvatureReport c = curvature(pic, standard_angles(pic));
            REQUIRE(c.regions.size() == m.regions.size());
            for (std::size_t i = 0; i < m.regions.size(); ++i)
                if (m.regions[i].inner && m.regions[i].degree() == 2 && oracle::has_open_corners(m, m.regions[i])) {
                    CHECK(c.regions[i] == Rational(0));
                    ++bigons;
                }
            CHECK(c.total == Rational(4));
        }
        CHECK(bigons > 0);
    }

    TEST_CASE("random spherical pictures have total curvature 4")
    {
        const char* texts[] = {
            "group <g, h | >; x; rel x^2 g x^-1 h",
            "group <t | t^6>; x; rel x^3 t^2 x t",
            "group <g | g^4>; x; rel x^4 g x^-3 g^2",
        };
        std::mt19937_64 rng(5);
        int n = 0;
        for (const char* text : texts) {
            RelativePresentation p = parse_presentation(text);
            CoefficientOracle o(p.coeff);
            for (int trial = 0; trial < 40; ++trial) {
                Picture pic = random_spherical_picture(rng, p, 0, 1 + trial % 5);
                PictureReport r = validate_picture(pic, p, o);
                REQUIRE(is_yes(r.valid));
                REQUIRE(r.spherical);
                AngleFunction a = random_angles(rng, pic);
                CHECK(angles_sum_to_two(pic, a));
                CurvatureReport c = curvature(pic, a);
                CHECK(c.total == Rational(4));
                Rational s(0);
                for (const Rational& q : c.regions) s += q;
                CHECK(s == c.total);
                // a doubled tree always contains a dipole
                CHECK(find_dipole(pic, o));
                ++n;
            }
        }
        CHECK(n >= 100);
    }

    TEST_CASE("curvature transfers conserve the total")
    {
        CurvatureReport c;
        c.regions = {Rational(1), Rational(-1, 2), Rational(0), Rational(7, 2)};
        c.total = Rational(4);
        TransferReport t = apply_transfers(c, {{0, 1, Rational(1, 2)}, {3, 2, Rational(1)}});
        CHECK(t.conserved);
        CHECK(t.total == Rational(4));
        CHECK(t.redistributed == std::vector<Rational>{Rational(1, 2), Rational(0), Rational(1), Rational(5, 2)});
    }

    TEST_CASE("corners map to star graph edges")
    {
        PictureDocument doc = load("fig2.json");
        CoefficientOracle o(doc.presentation.coeff);
        PictureReport r = validate_picture(doc.picture, doc.presentation, o);
        StarGraph sg = build_star_graph(doc.presentation);
        for (int v = 0; v < static_cast<int>(doc.picture.discs.size()); ++v) {
            const Disc& disc = doc.picture.discs[v];
            for (int c = 0; c < disc.degree(); ++c) {
                int e = corner_star_edge(doc.picture, sg, r.discs[v], {v, c});
                REQUIRE(e >= 0);
                REQUIRE(e < static_cast<int>(sg.edges.size()));
                // the corner label is the edge label or its inverse
                Word lab = disc.corners[c];
                CHECK((o.equal(sg.edges[e].label, lab) == TriState::Yes ||
                       o.equal(sg.edges[e].label, inverse(lab)) == TriState::Yes));
            }
        }
    }

    TEST_CASE("JSON round trip")
    {
        PictureDocument doc = load("fig1a.json");
        std::string text = write_picture_json(doc.presentation, doc.picture);
        PictureDocument back = read_picture_json(text);
        CHECK(back.picture.discs.size() == doc.picture.discs.size());
        CHECK(back.picture.outer == doc.picture.outer);
        for (std::size_t i = 0; i < doc.picture.discs.size(); ++i) {
            CHECK(back.picture.discs[i].arcs == doc.picture.discs[i].arcs);
            CHECK(back.picture.discs[i].corners == doc.picture.discs[i].corners);
        }
        CHECK(write_picture_json(back.presentation, back.picture) == text);
        CHECK_THROWS(read_picture_json("{\"discs\": 3}"));
    }
}
