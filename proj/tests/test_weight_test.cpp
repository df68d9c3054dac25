#include "support.hpp"

#include "asph/parser.hpp"
#include "asph/weight_test.hpp"

#include <doctest.h>

using namespace asph;

namespace {

// Weight -1 on the pair whose label is nontrivial, +1 on the others.
WeightFunction one_heavy_pair(const StarGraph& sg)
{
    std::vector<Rational> w;
    for (int p = 0; p < sg.pair_count(); ++p) w.push_back(sg.edges[2 * p].label.empty() ? Rational(1) : Rational(-1));
    return WeightFunction::from_pairs(w);
}

}  // namespace

TEST_SUITE("weight test")
{
    TEST_CASE("condition I is tight for y^-1 x^d")
    {
        for (int d = 2; d <= 6; ++d) {
            RelativePresentation p =
                parse_presentation("group <y | >; x; rel y^-1 x^" + std::to_string(d));
            StarGraph sg = build_star_graph(p);
            REQUIRE(sg.pair_count() == d);
            ConditionIResult r = check_condition_I(sg, one_heavy_pair(sg));
            CHECK(r.pass);
            REQUIRE(r.relators.size() == 1);
            CHECK(r.relators[0].sum == Rational(2));

            // one notch more weight on the heavy pair breaks it
            std::vector<Rational> w = one_heavy_pair(sg).per_pair();
            for (Rational& q : w)
                if (q == Rational(-1)) q = Rational(-1, 2) + Rational(1, 2 * d + 2);
            for (Rational& q : w)
                if (q == Rational(1)) q += Rational(1, 100);
            CHECK_FALSE(check_condition_I(sg, WeightFunction::from_pairs(w)).pass);
        }
    }

    TEST_CASE("constant weights")
    {
        for (int l = 1; l <= 4; ++l)
            for (int k : {-3, -2, -1, 1, 2, 3}) {
                if (l == -k) continue;
                RelativePresentation p = length_four_presentation(CoefficientGroup::cyclic(7, "t"), {1, 1}, {1}, l, k);
                StarGraph sg = build_star_graph(p);
                CHECK(check_condition_I(sg, WeightFunction::constant(sg, Rational(0))).pass);
                ConditionIResult one = check_condition_I(sg, WeightFunction::constant(sg, Rational(1)));
                CHECK_FALSE(one.pass);
                CHECK(one.offending == 0);
                CHECK(one.relators[0].sum == Rational(0));
            }
    }

    TEST_CASE("violated witness matches brute force")
    {
        RelativePresentation p = parse_presentation(oracle::read_fixture("x3g.txt"));
        CoefficientOracle o(p.coeff);
        StarGraph sg = build_star_graph(p, &o);
        WeightFunction theta = parse_weights(oracle::read_fixture("x3g_third.txt"), sg.pair_count());
        WeightReport r = check_weight_function(sg, theta, WeightMode::Weak, o, 6);
        CHECK(r.condition_I.pass);
        CHECK(r.condition_I.relators[0].sum == Rational(2));
        REQUIRE(r.condition_II.status == ConditionIIResult::Status::Violated);
        CHECK(r.condition_II.exact);
        CHECK(r.condition_II.witness_weight == Rational(2, 3));
        CHECK(r.condition_II.witness_weight == *oracle::brute_min_cycle(sg, theta, 2, 6));
        CHECK(cycle_weight(theta, r.condition_II.witness) == r.condition_II.witness_weight);
        CHECK_FALSE(r.weakly_aspherical());
        CHECK(report_text(sg, r).find("condition II: Violated") != std::string::npos);
    }

    TEST_CASE("infinite coefficient groups are checked up to the bound")
    {
        RelativePresentation p = parse_presentation("group <y | >; x; rel y^-1 x^3");
        CoefficientOracle o(p.coeff);
        StarGraph sg = build_star_graph(p, &o);
        WeightReport r = check_weight_function(sg, one_heavy_pair(sg), WeightMode::Weak, o, 6);
        CHECK(r.condition_I.pass);
        CHECK(r.condition_II.status == ConditionIIResult::Status::NotCertified);
        CHECK_FALSE(r.condition_II.exact);
        CHECK(r.condition_II.bound == 6);
        CHECK_FALSE(r.weakly_aspherical());

        // two label-1 edges form an admissible cycle of weight 2/3
        WeightReport c = check_weight_function(sg, WeightFunction::constant(sg, Rational(1, 3)), WeightMode::Weak, o, 6);
        CHECK(c.condition_II.status == ConditionIIResult::Status::Violated);
        CHECK(c.condition_II.witness_weight == Rational(2, 3));
    }

    TEST_CASE("full mode adds the negative cycle refinement")
    {
        RelativePresentation p = parse_presentation(oracle::read_fixture("x3g.txt"));
        CoefficientOracle o(p.coeff);
        StarGraph sg = build_star_graph(p, &o);
        WeightReport weak = check_weight_function(sg, WeightFunction::constant(sg, Rational(0)), WeightMode::Weak, o, 6);
        CHECK(weak.refinement == WeightReport::Refinement::NotChecked);
        WeightReport full = check_weight_function(sg, WeightFunction::constant(sg, Rational(0)), WeightMode::Full, o, 6);
        CHECK(full.refinement == WeightReport::Refinement::Pass);
        CHECK(full.aspherical() == full.weakly_aspherical());
    }

    TEST_CASE("search results are sound")
    {
        const char* texts[] = {
            "group <g | g^2>; x; rel x^3 g",
            "group <t | t^5>; x; rel x^2 t^2 x^-1 t",
            "group <t | t^7>; x; rel x^3 t^2 x t",
            "group <t | t^6>; x; rel x^2 t^3 x t^2",
        };
        for (const char* text : texts) {
            RelativePresentation p = parse_presentation(text);
            CoefficientOracle o(p.coeff);
            StarGraph sg = build_star_graph(p, &o);
            SearchResult s = search_weight_function(sg, o, 3, 6);
            CHECK(s.nodes > 0);
            if (s.found) {
                WeightReport r = check_weight_function(sg, *s.found, WeightMode::Weak, o, 6);
                CHECK(r.weakly_aspherical());
            }
        }
        // a finite G(Q) cannot be weakly aspherical
        RelativePresentation p = parse_presentation("group <t | t^5>; x; rel x^2 t^2 x^-1 t");
        CoefficientOracle o(p.coeff);
        StarGraph sg = build_star_graph(p, &o);
        SearchResult s = search_weight_function(sg, o, 3, 6);
        CHECK_FALSE(s.found);
        CHECK_FALSE(s.capped);
    }

    TEST_CASE("search candidates")
    {
        std::vector<Rational> c = search_candidates(3);
        REQUIRE(c.size() >= 7);
        CHECK(c[0] == Rational(-1));
        CHECK(c[6] == Rational(1));
        for (const Rational& q : c) {
            CHECK(q >= Rational(-1));
            CHECK(q <= Rational(1));
            CHECK(q.denominator() <= 3);
        }
        // -1, -2/3, -1/2, -1/3, 0, 1/3, 1/2, 2/3, 1
        CHECK(c.size() == 9);
    }

    TEST_CASE("weight files")
    {
        WeightFunction w = parse_weights("# comment\n0 1/3\n\n1 -1\n2 0\n", 3);
        CHECK(w.per_pair() == std::vector<Rational>{Rational(1, 3), Rational(-1), Rational(0)});
        CHECK_THROWS_AS(parse_weights("0 1\n", 2), std::invalid_argument);
        CHECK_THROWS_AS(parse_weights("0 1\n0 1\n", 1), std::invalid_argument);
        CHECK_THROWS_AS(parse_weights("0 x\n", 1), std::invalid_argument);
    }
}
