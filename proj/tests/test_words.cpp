#include "support.hpp"

#include "asph/coefficient_oracle.hpp"
#include "asph/parser.hpp"
#include "asph/words.hpp"

#include <doctest.h>

using namespace asph;

namespace {

FreeProductWord rel(const RelativePresentation& p, int i = 0) { return p.relators.at(i); }

}  // namespace

TEST_SUITE("words")
{
    TEST_CASE("parse keeps raw syllables")
    {
        RelativePresentation p = parse_presentation("group <g | g^4>; x; rel x^4 g x^-3 g^2");
        REQUIRE(p.relators.size() == 1);
        const auto& s = rel(p).syllables;
        REQUIRE(s.size() == 4);
        CHECK(s[0] == Syllable::free({1, 1, 1, 1}));
        CHECK(s[1] == Syllable::coefficient({1}));
        CHECK(s[2] == Syllable::free({-1, -1, -1}));
        CHECK(s[3] == Syllable::coefficient({1, 1}));
        CHECK(p.format(rel(p)) == "x^4 g x^-3 g^2");

        RelativePresentation q = parse_presentation("group <g | g^2>; x; rel x g");
        CHECK(q.relators[0].syllables.size() == 2);

        RelativePresentation raw = parse_presentation("group <g | >; x; rel g x g x");
        CHECK(raw.relators[0].syllables.size() == 4);
        CHECK(raw.relators[0].syllables[0].is_coefficient());
    }

    TEST_CASE("parse errors carry a position")
    {
        CHECK_THROWS_AS(parse_presentation("group <g | g^4; x; rel x g"), ParseError);
        CHECK_THROWS_AS(parse_presentation("group <g | >; g; rel g"), ParseError);
        try {
            parse_presentation("group <g | g^2>;\n x; rel x^ g");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }

    TEST_CASE("cyclic reduction")
    {
        RelativePresentation p = parse_presentation("group <g, h | >; x; rel x^2 g x^-1 h; rel g x h x^-1 g^-1");
        CHECK(cyclically_reduce(rel(p, 0)) == rel(p, 0));
        FreeProductWord collapsed = cyclically_reduce(rel(p, 1));
        REQUIRE(collapsed.syllables.size() == 1);
        CHECK(collapsed.syllables[0] == Syllable::coefficient({2}));

        RelativePresentation c = parse_presentation("group <g | g^4>; x; rel x^2 g x^-1 g^3");
        CoefficientOracle oracle(c.coeff);
        CHECK(cyclically_reduce(rel(c), &oracle) == rel(c));
        CHECK(free_product_length(cyclically_reduce(rel(c), &oracle)) == 4);

        // a coefficient that is trivial in G disappears only with the oracle
        RelativePresentation t = parse_presentation("group <g | g^2>; x; rel x g^2 x");
        CHECK(free_product_length(cyclically_reduce(rel(t))) == 2);
        CoefficientOracle ot(t.coeff);
        CHECK(free_product_length(cyclically_reduce(rel(t), &ot)) == 1);
    }

    TEST_CASE("free product length")
    {
        RelativePresentation p = parse_presentation("group <g, h | >; x; rel x^3 g x^2 h; rel x^3 g; rel 1");
        CHECK(free_product_length(cyclically_reduce(rel(p, 0))) == 4);
        CHECK(free_product_length(cyclically_reduce(rel(p, 1))) == 2);
        CHECK(free_product_length(cyclically_reduce(rel(p, 2))) == 0);
        CHECK(x_letter_count(rel(p, 0)) == 5);
    }

    TEST_CASE("proper powers")
    {
        RelativePresentation p =
            parse_presentation("group <g, h | >; x; rel x^2 g x^2 g; rel x^2 g x^-1 h; rel (x g x h)^3");
        auto a = is_proper_power(cyclically_reduce(rel(p, 0)));
        REQUIRE(a);
        CHECK(a->second == 2);
        CHECK(p.format(a->first) == "x^2 g");
        CHECK_FALSE(is_proper_power(cyclically_reduce(rel(p, 1))));
        auto c = is_proper_power(cyclically_reduce(rel(p, 2)));
        REQUIRE(c);
        CHECK(c->second == 3);
        CHECK(free_product_length(c->first) == 4);

        // equality of coefficients is decided in G
        RelativePresentation q = parse_presentation("group <g | g^3>; x; rel x g x g^-2");
        CoefficientOracle o(q.coeff);
        CHECK_FALSE(is_proper_power(cyclically_reduce(rel(q))));
        auto d = is_proper_power(cyclically_reduce(rel(q)), &o);
        REQUIRE(d);
        CHECK(d->second == 2);
    }

    TEST_CASE("orientability")
    {
        RelativePresentation ok = parse_presentation("group <g, h | >; x; rel x^2 g x^-1 h");
        CHECK(is_yes(is_orientable(ok, nullptr).orientable));

        RelativePresentation a = parse_presentation("group <g | g^5>; x; rel g");
        OrientabilityReport ra = is_orientable(a, nullptr);
        CHECK(is_no(ra.orientable));
        CHECK(ra.witness.find("(a)") != std::string::npos);

        RelativePresentation b = parse_presentation("group <g | g^5>; x; rel x g; rel g^-1 x^-1");
        OrientabilityReport rb = is_orientable(b, nullptr);
        CHECK(is_no(rb.orientable));
        CHECK(rb.witness.find("(b)") != std::string::npos);
    }

    TEST_CASE("mu")
    {
        // Z6 = <t>: t^3 has order 2, t^2 order 3, t^3 t^-2 = t order 6
        CoefficientOracle z6(CoefficientGroup::cyclic(6, "t"));
        CHECK(mu(z6, {1, 1, 1}, {1, 1}).value == Rational(1));

        CoefficientOracle s3(parse_presentation("group <g, h | g^2, h^3, (g h)^2 (g^-1 h^-1)^2>; x; rel x").coeff);
        CHECK(mu(s3, {1}, {2}).value == Rational(1));

        CoefficientOracle z3(parse_presentation("group <g, h | g^3, h^3, g h g^-1 h^-1>; x; rel x").coeff);
        CHECK(mu(z3, {1}, {2}).value == Rational(1));

        // A5 as a (2,3,5) triangle group: g h^-1 of order 5
        CoefficientOracle a5(parse_presentation("group <g, h | g^2, h^3, (g h^-1)^5>; x; rel x").coeff);
        MuValue m = mu(a5, {1}, {2});
        CHECK(m.value == Rational(31, 30));
        CHECK_FALSE(m.lower_bound_only);

        CoefficientOracle z(CoefficientGroup::free({"g"}));
        MuValue inf = mu(z, {1}, {1, 1});
        CHECK(inf.value == Rational(0));
    }

    TEST_CASE("mu over cyclic groups matches n/gcd arithmetic")
    {
        for (long long n = 2; n <= 12; ++n) {
            CoefficientOracle o(CoefficientGroup::cyclic(n, "t"));
            for (long long a = 1; a < n; ++a)
                for (long long b = 1; b < n; ++b) {
                    if (a == b) continue;
                    Rational expect = Rational(1, oracle::cyclic_order(n, a)) + Rational(1, oracle::cyclic_order(n, b)) +
                                      Rational(1, oracle::cyclic_order(n, a - b));
                    CHECK(mu(o, word_power({1}, a), word_power({1}, b)).value == expect);
                    // symmetric in g and h
                    CHECK(mu(o, word_power({1}, b), word_power({1}, a)).value == expect);
                }
        }
    }

    TEST_CASE("length-four relator shape")
    {
        RelativePresentation p = length_four_presentation(CoefficientGroup::cyclic(5, "t"), {1, 1}, {1}, 2, -1);
        CHECK(p.format(p.relators[0]) == "x^2 t^2 x^-1 t");
        auto seq = letter_sequence(p.relators[0]);
        REQUIRE(seq.size() == 3);
        CHECK(seq[0].first == 1);
        CHECK(seq[0].second.empty());
        CHECK(seq[1].second == Word{1, 1});
        CHECK(seq[2].first == -1);
    }
}

TEST_SUITE("words properties")
{
    TEST_CASE("cyclic reduction is idempotent and length is rotation invariant")
    {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 1000; ++trial) {
            FreeProductWord w = oracle::random_word(rng, 1 + trial % 9);
            FreeProductWord r = cyclically_reduce(w);
            CHECK(cyclically_reduce(r) == r);
            if (r.syllables.size() >= 2) {
                FreeProductWord rot = r;
                std::rotate(rot.syllables.begin(), rot.syllables.begin() + 1, rot.syllables.end());
                CHECK(free_product_length(cyclically_reduce(rot)) == free_product_length(r));
            }
        }
    }

    TEST_CASE("proper power round trip")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 1000; ++trial) {
            FreeProductWord root = cyclically_reduce(oracle::random_word(rng, 2 + 2 * (trial % 3)));
            if (root.syllables.size() < 2) continue;
            int e = 2 + trial % 3;
            FreeProductWord w;
            for (int i = 0; i < e; ++i) w = concat(w, root);
            w = cyclically_reduce(w);
            auto pp = is_proper_power(w);
            REQUIRE(pp);
            CHECK(pp->second % e == 0);
            FreeProductWord back;
            for (int i = 0; i < pp->second; ++i) back = concat(back, pp->first);
            CHECK(cyclically_reduce(back) == w);
            CHECK(free_product_length(w) == pp->second * free_product_length(pp->first));
        }
    }
}
