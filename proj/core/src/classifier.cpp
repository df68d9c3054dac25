#include "asph/classifier.hpp"

#include "asph/lifted.hpp"
#include "asph/table1.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace asph {

RelativePresentation LengthFourInstance::presentation() const
{
    return length_four_presentation(G, g, h, l, k);
}

LengthFourInstance LengthFourInstance::cyclic(long long n, long long a, long long b, int l, int k)
{
    LengthFourInstance inst;
    inst.G = CoefficientGroup::cyclic(n, "t");
    auto power = [n](long long e) {
        e %= n;
        if (e < 0) e += n;
        return word_power(Word{letter(0)}, e);
    };
    inst.g = power(a);
    inst.h = power(b);
    inst.l = l;
    inst.k = k;
    return inst;
}

LengthFourInstance length_four_instance(const RelativePresentation& p, const CoefficientOracle* oracle)
{
    if (p.x_gens.size() != 1 || p.relators.size() != 1)
        throw std::invalid_argument("expected one x-generator and one relator");
    std::vector<std::pair<int, Word>> seq = letter_sequence(cyclically_reduce(p.relators[0], oracle));
    struct Block {
        int exponent = 0;
        Word after;
    };
    std::vector<Block> blocks;
    bool open_block = false;
    for (const auto& [x, w] : seq) {
        int s = x > 0 ? 1 : -1;
        if (!open_block) blocks.push_back({});
        Block& b = blocks.back();
        if (b.exponent != 0 && (b.exponent > 0) != (s > 0)) throw std::invalid_argument("relator is not x^l g x^k h");
        b.exponent += s;
        b.after = w;
        open_block = w.empty();
    }
    if (blocks.size() != 2 || blocks[0].after.empty() || blocks[1].after.empty())
        throw std::invalid_argument("relator is not of free product length four");
    LengthFourInstance inst;
    inst.G = p.coeff;
    int l = blocks[0].exponent, k = blocks[1].exponent;
    Word g = blocks[0].after, h = blocks[1].after;
    if (l < 0 && k > 0) {
        std::swap(l, k);
        std::swap(g, h);
    } else if (l < 0) {
        // inverse relator, rotated
        int nl = -k, nk = -l;
        l = nl;
        k = nk;
        Word ng = inverse(g), nh = inverse(h);
        g = ng;
        h = nh;
    }
    inst.g = g;
    inst.h = h;
    inst.l = l;
    inst.k = k;
    return inst;
}

LengthFourInstance canonical(const LengthFourInstance& inst)
{
    if (inst.l <= 0 || inst.k == 0) throw std::invalid_argument("length-four instance needs l > 0 and k != 0");
    LengthFourInstance c = inst;
    if (c.k > c.l) {
        std::swap(c.l, c.k);
        std::swap(c.g, c.h);
    } else if (c.k < 0 && -c.k > c.l) {
        int l = -c.k, k = -c.l;
        c.l = l;
        c.k = k;
        std::swap(c.g, c.h);
    }
    return c;
}

TriState CaseFlags::any_listed() const
{
    return P || Z || M || J4 || J6 || K5 || K6_plus || K6_minus || L6;
}

std::vector<std::string> CaseFlags::holding() const
{
    std::vector<std::string> out;
    const std::pair<const char*, TriState> all[] = {
        {"P", P},         {"Z", Z},           {"M", M},           {"J4", J4},         {"J6", J6},
        {"K5", K5},       {"K6+", K6_plus},   {"K6-", K6_minus},  {"L6", L6},         {"BBP-E4", BBP_E4},
        {"BBP-E5", BBP_E5}, {"HM-E", HM_E},   {"AEJ-E", AEJ_E},   {"E-E1", E_E1},     {"E-E2", E_E2},
        {"E-E3", E_E3},   {"AAE-E", AAE_E},   {"AAE-E4", AAE_E4}, {"D-E1", D_E1},     {"D-E2", D_E2},
        {"D-E4", D_E4},
    };
    for (const auto& [name, t] : all) {
        if (is_yes(t)) out.push_back(name);
        if (is_unknown(t)) out.push_back(std::string(name) + "?");
    }
    return out;
}

namespace {

Word pw(const Word& w, long long e)
{
    return free_reduce(word_power(w, e));
}

TriState finite(const ElementOrder& o)
{
    if (o.is_finite()) return TriState::Yes;
    if (o.is_infinite()) return TriState::No;
    return TriState::Unknown;
}

// 3 < |w| < oo style bounds
TriState strictly_between(const ElementOrder& o, long long lo)
{
    return o.greater_than(lo) && finite(o);
}

TriState at_least(const ElementOrder& o, long long n)
{
    return o.greater_than(n - 1);
}

// gp{g, h} isomorphic to Z2 + Z4.
TriState generates_z2_z4(const CoefficientOracle& o, const Word& g, const Word& h)
{
    if (const FiniteGroupModel* m = o.finite_model()) {
        std::set<int> sub = {0};
        std::vector<int> frontier = {0};
        const int gens[2] = {m->element_of(g), m->element_of(h)};
        while (!frontier.empty()) {
            int e = frontier.back();
            frontier.pop_back();
            for (int s : gens) {
                int f = m->multiply(e, s);
                if (sub.insert(f).second) frontier.push_back(f);
            }
        }
        if (sub.size() != 8 || m->multiply(gens[0], gens[1]) != m->multiply(gens[1], gens[0])) return TriState::No;
        long long exponent = 1;
        for (int e : sub) exponent = std::lcm(exponent, m->element_order(e));
        return tri(exponent == 4);
    }
    // finite subgroups of a free product of cyclic groups are cyclic
    if (o.free_product()) return TriState::No;
    return TriState::Unknown;
}

struct Blocked {
    std::string query;
};

bool decide(TriState t, const std::string& query)
{
    if (is_unknown(t)) throw Blocked{query};
    return is_yes(t);
}

CaseVerdict verdict(TriState dr, TriState asph, std::string tag, std::string cite)
{
    CaseVerdict v;
    v.dr = dr;
    v.aspherical = asph;
    v.tag = std::move(tag);
    v.citation = std::move(cite);
    return v;
}

CaseVerdict open_case(std::string tag, std::string cite, std::string blocking = "")
{
    CaseVerdict v = verdict(TriState::Unknown, TriState::Unknown, std::move(tag), std::move(cite));
    v.blocking = std::move(blocking);
    return v;
}

std::string pair_name(int l, int k)
{
    return "{" + std::to_string(l) + "," + std::to_string(k) + "}";
}

std::optional<long long> cyclic_known_order(const LengthFourInstance& c)
{
    if (c.G.kind != CoefficientGroup::Kind::Cyclic || c.G.generators.size() != 1) return std::nullopt;
    return known_cyclic_order(c.G.cyclic_order, c.l, c.k, exponent_sum(c.g, 0), exponent_sum(c.h, 0));
}

class Classifier {
public:
    Classifier(const LengthFourInstance& c, const CoefficientOracle& o, const ClassifyOptions& opt)
        : c_(c), o_(o), opt_(opt), f_(case_flags(c, o))
    {
    }

    CaseVerdict run()
    {
        CaseVerdict v;
        try {
            v = decide_all();
        } catch (const Blocked& b) {
            v = open_case("undecided", "", b.query);
        }
        if (v.open()) v = fallbacks(std::move(v));
        if (is_no(v.aspherical) && orientable_ && !proper_power_ && is_unknown(v.dr)) {
            // DR, orientable and no proper power would force asphericity
            v.dr = TriState::No;
        }
        return v;
    }

private:
    const LengthFourInstance& c_;
    const CoefficientOracle& o_;
    const ClassifyOptions& opt_;
    CaseFlags f_;
    bool orientable_ = false;
    bool proper_power_ = false;

    TriState eq(const Word& a, const Word& b) const { return o_.equal(a, b); }
    ElementOrder ord(const Word& w) const { return o_.order(w); }

    CaseVerdict decide_all()
    {
        const int l = c_.l, k = c_.k;
        const Word &g = c_.g, &h = c_.h;
        if (is_yes(o_.is_trivial(g)) || is_yes(o_.is_trivial(h)))
            throw std::invalid_argument("g and h must be nontrivial in G");

        // (0) relator sanity
        if (l == k && decide(eq(g, h), "g = h")) {
            proper_power_ = true;
            CaseVerdict v = verdict(TriState::Yes, TriState::No, "proper power", "relator conditions");
            v.notes.push_back("DR since g = h (AEJ17, l = k)");
            return v;
        }
        RelativePresentation p = c_.presentation();
        OrientabilityReport orient = is_orientable(p, &o_);
        if (!decide(orient.orientable, "orientability")) {
            CaseVerdict v = verdict(TriState::Unknown, TriState::No, "non-orientable", "relator conditions");
            v.notes.push_back(orient.witness);
            return v;
        }
        orientable_ = true;

        // (1) l = k
        if (l == k) {
            bool inf = !decide(finite(ord(concat(inverse(g), h))), "|g^-1 h|");
            return verdict(tri(inf), tri(inf), "l=k", "AEJ17");
        }
        // (2) l = -k
        if (l == -k) {
            bool inf = !decide(finite(f_.order_g), "|g|") && !decide(finite(f_.order_h), "|h|");
            return verdict(inf ? TriState::Yes : TriState::Unknown, tri(inf), "l=-k", "finite subgroups");
        }
        // (3) torsion-free coefficients
        if (is_yes(o_.torsion_free())) return verdict(TriState::Yes, TriState::Yes, "torsion-free", "SKK6");

        // (4) J4 / J6
        for (auto [name, flag, n] : {std::tuple{"J4", f_.J4, 4}, std::tuple{"J6", f_.J6, 6}}) {
            if (!decide(flag, name)) continue;
            bool asph = std::abs(l + k) == 1 && (l % n == 0 || k % n == 0);
            CaseVerdict v = verdict(TriState::No, tri(asph), name, "BW1");
            if (asph) v.notes.push_back("G -> G(Q) is an isomorphism; L(Q) does not collapse, so not DR");
            v.claimed_order = cyclic_known_order(c_);
            return v;
        }
        // (5) Z / M
        for (auto [name, flag] : {std::pair{"Z", f_.Z}, std::pair{"M", f_.M}})
            if (decide(flag, name)) return verdict(TriState::No, TriState::No, name, "BW2, McD17");

        // (6) Platonic case
        if (decide(f_.P, "P")) return platonic();

        // (7) families
        const bool K5 = decide(f_.K5, "K5"), K6p = decide(f_.K6_plus, "K6+"), K6m = decide(f_.K6_minus, "K6-"),
                   L6 = decide(f_.L6, "L6");
        const bool listed = K5 || K6p || K6m || L6;
        const std::string column = K5 ? "K5" : K6p ? "K6+" : K6m ? "K6-" : L6 ? "L6" : "";
        if (k > 0) return positive_family(listed, column);
        return negative_family(listed, column);
    }

    CaseVerdict platonic()
    {
        const int l = c_.l, k = c_.k;
        std::string cite = "AEJ17";
        if (l == 2 && k == 1) cite = "BP";
        else if (l == 3 && k == 1) cite = "BBP";
        else if ((l == 3 && k == 2) || (l == 4 && k == 1)) cite = "HM";
        else if (k == 1) cite = "AE14";
        else if (l == 2 && k == -1) cite = "ECap";
        else if (l == 3 && k == -1) cite = "Ahmad";
        const bool covered = k > 0 || (k == -1 && (l == 2 || l == 3));
        bool nonasph = (k == 1 && (l == 2 || l == 3)) || (k == -1 && (l == 2 || l == 3));
        if (!nonasph && k == -1 && l >= 2 &&
            decide(at_least(f_.order_g, 3) && at_least(f_.order_h, 3), "|g|, |h| >= 3")) {
            nonasph = true;
            cite = "Davidson09";
        }
        if (nonasph) return verdict(TriState::No, TriState::No, "P", cite);
        CaseVerdict v = verdict(covered ? TriState::No : TriState::Unknown, TriState::Unknown, "P",
                                "Platonic conjecture");
        v.conjectural = true;
        if (covered) v.notes.push_back("spherical Platonic pictures (" + cite + ")");
        return v;
    }

    CaseVerdict table_cell(const std::string& row, const std::string& column, const std::string& cite,
                           const std::set<std::string>& known)
    {
        if (known.count(column)) {
            CaseVerdict v = verdict(TriState::No, TriState::No, "table " + row + " " + column, cite);
            v.claimed_order = cyclic_known_order(c_);
            return v;
        }
        return open_case("table " + row + " " + column + " ?", cite);
    }

    CaseVerdict positive_family(bool listed, const std::string& column)
    {
        const int l = c_.l, k = c_.k;
        const Word &g = c_.g, &h = c_.h;
        if (l == 2 && k == 1) {
            if (listed) return table_cell("{2,1}", column, "BP", {"K5", "K6+", "K6-", "L6"});
            bool square = decide(finite(f_.order_g) && (eq(g, pw(h, 2)) || eq(h, pw(g, 2))), "g = h^2 or h = g^2");
            if (square) return verdict(TriState::No, TriState::Unknown, "{2,1} square", "BP");
            return verdict(TriState::Yes, TriState::Yes, "{2,1}", "BP");
        }
        if (l == 3 && k == 1 && listed) return table_cell("{3,1}", column, "BBP", {"K5", "L6"});
        if (l == 4 && k == 1 && listed) return table_cell("{4,1}", column, "HM", {"K5"});
        if (l == 3 && k == 2 && listed) return table_cell("{3,2}", column, "HM", {"K5"});
        if (listed) return open_case("table " + std::string(k == 1 ? "{n,1}" : "{l,k}") + " " + column + " ?",
                                     k == 1 ? "AE14" : "AEJ17");
        if (k == 1) {
            CaseVerdict v = verdict(TriState::Yes, TriState::Yes, "{n,1}", l == 4 ? "HM" : "AE14");
            if (l == 3 && !is_yes(f_.BBP_E4) && !is_yes(f_.BBP_E5)) v.notes.push_back("also BBP {3,1}");
            if (l == 3 && (is_yes(f_.BBP_E4) || is_yes(f_.BBP_E5)))
                v.notes.push_back("BBP exceptional case settled by AE14");
            return v;
        }
        if (l == 3 && k == 2) {
            if (decide(f_.HM_E, "HM-E")) return open_case("HM-E", "HM");
            return verdict(TriState::Yes, TriState::Yes, "{3,2}", "HM");
        }
        if (decide(f_.AEJ_E, "AEJ-E")) {
            CaseVerdict v = open_case("AEJ-E", "AEJ17 conjecture");
            v.conjectural = true;
            return v;
        }
        return verdict(TriState::Yes, TriState::Yes, "l,k>0", "AEJ17");
    }

    CaseVerdict negative_family(bool listed, const std::string& column)
    {
        const int l = c_.l, k = c_.k;
        const Word &g = c_.g, &h = c_.h;
        const ElementOrder &og = f_.order_g, &oh = f_.order_h;
        std::optional<CaseVerdict> best;
        auto consider = [&](CaseVerdict v) {
            if (!best) best = std::move(v);
            else if (best->open() && !v.open()) {
                v.notes.push_back("more specific rule open: " + best->tag);
                best = std::move(v);
            } else if (!v.open()) {
                best->notes.push_back("also " + v.tag + " (" + v.citation + ")");
            }
        };

        if (l == 2 && k == -1) {
            if (decide(f_.E_E1 || f_.E_E2, "E-E1/E-E2")) {
                consider(open_case(is_yes(f_.E_E1) ? "E-E1" : "E-E2", "ECap"));
            } else if (listed) {
                CaseVerdict v = verdict(TriState::No, TriState::No,
                                        column == "K6-" ? "K6- three-manifold" : "table {2,-1} " + column, "ECap");
                v.claimed_order = cyclic_known_order(c_);
                consider(v);
            } else {
                const TriState commute = o_.commute(g, h);
                const TriState cases[6] = {
                    finite(og) && (eq(g, pw(h, -2)) || eq(h, pw(g, -2))),
                    commute && (og.equals(2) || oh.equals(2)),
                    ((og.equals(2) && oh.equals(3)) || (og.equals(3) && oh.equals(2))) &&
                        o_.is_trivial(concat(pw(concat(g, h), 2), pw(concat(inverse(g), inverse(h)), 2))),
                    og.equals(3) && oh.equals(3) && commute,
                    og.equals(7) && oh.equals(7) && (eq(g, pw(h, 2)) || eq(h, pw(g, 2))),
                    og.equals(9) && oh.equals(9) && (eq(g, pw(h, 2)) || eq(h, pw(g, 2))),
                };
                static const char* names[6] = {"(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)"};
                std::optional<CaseVerdict> hit;
                for (int i = 0; i < 6 && !hit; ++i)
                    if (decide(cases[i], std::string("ECap ") + names[i]))
                        hit = verdict(TriState::No, TriState::No, std::string("{2,-1} ") + names[i], "ECap");
                if (!hit && decide(f_.E_E3, "E-E3")) hit = verdict(TriState::No, TriState::No, "E-E3", "ECap");
                if (hit) {
                    hit->claimed_order = cyclic_known_order(c_);
                    consider(*hit);
                } else {
                    consider(verdict(TriState::Yes, TriState::Yes, "{2,-1}", "ECap"));
                }
            }
        }
        if (l == 3 && k == -1) {
            if (listed) {
                consider(table_cell("{3,-1}", column, "AAE14", {"K5", "L6"}));
            } else if (decide(f_.AAE_E || f_.AAE_E4, "AAE-E/AAE-E4")) {
                consider(open_case(is_yes(f_.AAE_E) ? "AAE-E" : "AAE-E4", "AAE14"));
            } else {
                consider(verdict(TriState::Yes, TriState::Yes, "{3,-1}", "AAE14"));
            }
        }
        if (k == -1 && l >= 7 && is_yes(f_.K5)) consider(verdict(TriState::Yes, TriState::Yes, "K5 l>=7", "EdjJuh14"));
        if (k == -1 && l >= 4 && !is_yes(f_.K5)) {
            bool hyp = !decide(o_.is_trivial(pw(g, 2)), "g^2 = 1") && !decide(o_.is_trivial(pw(h, 2)), "h^2 = 1");
            if (hyp && !decide(f_.D_E1 || f_.D_E2 || f_.D_E4, "D-E1/D-E2/D-E4"))
                consider(verdict(TriState::Yes, TriState::Yes, "{n,-1}", "Davidson09"));
        }
        if (l > 2 * -k) {
            auto ne = [&](const Word& a, const Word& b) { return !eq(a, b); };
            TriState i = at_least(og, 6) && at_least(oh, 3) && ne(h, pw(g, 2)) && ne(h, pw(g, -2)) &&
                         ne(h, pw(g, -3)) && ne(g, pw(h, -2));
            TriState ii = at_least(og, 3) && at_least(oh, 6) && ne(g, pw(h, 2)) && ne(g, pw(h, -2)) &&
                          ne(g, pw(h, -3)) && ne(h, pw(g, -2));
            TriState iii = at_least(og, 4) && at_least(oh, 4) && ne(g, pw(h, -2)) && ne(h, pw(g, -2));
            if (!best || best->open()) {
                if (decide(i || ii || iii, "P95 (i)-(iii)"))
                    consider(verdict(TriState::Unknown, TriState::Yes, "l>2|k|", "P95"));
            }
        }
        if (best) return *best;
        if (listed) return open_case("listed case " + column + " " + pair_name(l, k), "");
        return open_case("no rule for " + pair_name(l, k), "");
    }

    CaseVerdict fallbacks(CaseVerdict v)
    {
        const int d = std::gcd(c_.l, std::abs(c_.k));
        if (d >= 2) {
            LengthFourInstance w = c_;
            w.l /= d;
            w.k /= d;
            ClassifyOptions sub = opt_;
            CaseVerdict inner = classify(w, sub);
            if (is_no(inner.aspherical)) {
                CaseVerdict out = verdict(TriState::Unknown, TriState::No, "exponent gcd", "root adjunction");
                out.notes.push_back("reduced instance " + pair_name(w.l, w.k) + ": " + inner.headline());
                out.notes.push_back("open rule: " + v.tag);
                return out;
            }
            if (is_yes(inner.aspherical) && std::abs(w.l + w.k) != 1) {
                CaseVerdict out = verdict(TriState::Unknown, TriState::Yes, "exponent gcd", "root adjunction");
                out.notes.push_back("reduced instance " + pair_name(w.l, w.k) + ": " + inner.headline());
                return out;
            }
            if (is_yes(inner.aspherical) && v.blocking.empty())
                v.blocking = "order of x in the reduced group";
        }
        if (opt_.lift_cap > 0 && o_.group_order().is_finite()) {
            EnumerationOptions eo;
            eo.cap = opt_.lift_cap;
            RelativePresentation p = c_.presentation();
            TriState iso = lift_isomorphism(p, o_, eo);
            if (is_yes(iso)) {
                CaseVerdict out = verdict(TriState::Unknown, TriState::Yes, "G = G(Q)", "balanced isomorphism");
                out.notes.push_back("open rule: " + v.tag);
                return out;
            }
            LiftedOrder n = lifted_group_order(p, o_, eo);
            if (n.order.is_finite() && n.order.value != o_.group_order().value) {
                CaseVerdict out = verdict(TriState::Unknown, TriState::No, "finite order", "finite subgroups");
                out.claimed_order = n.order.value;
                out.notes.push_back("open rule: " + v.tag);
                return out;
            }
        }
        return v;
    }
};

}  // namespace

CaseFlags case_flags(const LengthFourInstance& inst, const CoefficientOracle& o)
{
    CaseFlags f;
    const Word &g = inst.g, &h = inst.h;
    auto eq = [&](const Word& a, const Word& b) { return o.equal(a, b); };
    const ElementOrder og = o.order(g), oh = o.order(h);
    f.order_g = og;
    f.order_h = oh;
    f.order_gh_inv = o.order(concat(g, inverse(h)));
    f.mu = mu(o, g, h);

    const TriState g_eq_h = eq(g, h);
    const TriState mu_big = f.mu.value > 1 ? TriState::Yes : f.mu.lower_bound_only ? TriState::Unknown : TriState::No;
    const TriState commute = o.commute(g, h);
    const TriState g_h2 = eq(g, pw(h, 2)), h_g2 = eq(h, pw(g, 2));
    const TriState g_hm2 = eq(g, pw(h, -2)), h_gm2 = eq(h, pw(g, -2));
    const TriState g_h3 = eq(g, pw(h, 3)), h_g3 = eq(h, pw(g, 3));

    f.P = mu_big && !g_eq_h;
    f.Z = g_eq_h && finite(og);
    f.M = eq(g, inverse(h)) && finite(og);
    f.J4 = (g_h2 && oh.equals(4)) || (h_g2 && og.equals(4));
    f.J6 = (og.equals(2) && oh.equals(3) && commute) || (og.equals(3) && oh.equals(2) && commute);
    f.K5 = (g_h2 && oh.equals(5)) || (h_g2 && og.equals(5));
    f.K6_plus = (g_h2 && oh.equals(6)) || (h_g2 && og.equals(6));
    f.K6_minus = (g_hm2 && oh.equals(6)) || (h_gm2 && og.equals(6));
    f.L6 = (g_h3 && oh.equals(6)) || (h_g3 && og.equals(6));

    f.BBP_E4 = ((og.equals(2) && oh.equals(4) && !g_h2) || (og.equals(4) && oh.equals(2) && !h_g2)) && commute;
    f.BBP_E5 = ((og.equals(2) && oh.equals(5)) || (og.equals(5) && oh.equals(2))) && commute;
    f.HM_E = (g_h2 && strictly_between(oh, 6)) || (h_g2 && strictly_between(og, 6));
    if (inst.l > 0 && inst.k > 0) {
        const int l = inst.l, k = inst.k;
        const TriState r1 = tri(l < k && k < 2 * l), r2 = tri(k < l && l < 2 * k);
        f.AEJ_E = (g_h2 && strictly_between(oh, 6) && r1) || (h_g2 && strictly_between(og, 6) && r2) ||
                  (h_g2 && strictly_between(og, 6) && r1) || (g_h2 && strictly_between(oh, 6) && r2);
    } else {
        f.AEJ_E = TriState::No;
    }
    f.E_E1 = (og.equals(9) && oh.equals(3) && h_g3) || (oh.equals(9) && og.equals(3) && g_h3);
    f.E_E2 = (og.equals(9) && oh.equals(3) && eq(h, pw(g, -3))) || (oh.equals(9) && og.equals(3) && eq(g, pw(h, -3)));
    f.E_E3 = (og.equals(8) && oh.equals(4) && h_g2) || (oh.equals(8) && og.equals(4) && g_h2);
    f.AAE_E = generates_z2_z4(o, g, h);
    f.AAE_E4 = (oh.equals(8) && eq(g, pw(h, 4))) || (og.equals(8) && eq(h, pw(g, 4)));
    f.D_E1 = (g_h2 && strictly_between(oh, 3)) || (h_g2 && strictly_between(og, 3));
    f.D_E2 = (g_hm2 && strictly_between(oh, 3)) || (h_gm2 && strictly_between(og, 3));
    f.D_E4 = (g_h3 && oh.equals(9)) || (h_g3 && og.equals(9));
    return f;
}

std::string CaseVerdict::headline() const
{
    std::string what = is_yes(aspherical) ? "Aspherical" : is_no(aspherical) ? "NonAspherical" : "OpenCase";
    std::string out = what + " (" + tag;
    if (!citation.empty()) out += ", " + citation;
    out += ")";
    if (open() && !blocking.empty()) out += " blocked on " + blocking;
    return out;
}

CaseVerdict classify(const LengthFourInstance& inst, const ClassifyOptions& options)
{
    LengthFourInstance c = canonical(inst);
    CoefficientOracle oracle(c.G, options.cap);
    Classifier cl(c, oracle, options);
    return cl.run();
}

const char* to_string(VerificationReport::Status s)
{
    switch (s) {
    case VerificationReport::Status::Consistent: return "consistent";
    case VerificationReport::Status::Inconsistent: return "INCONSISTENT";
    default: return "skipped";
    }
}

VerificationReport verify_verdict(const LengthFourInstance& inst, const CaseVerdict& v, long long cap)
{
    using Status = VerificationReport::Status;
    VerificationReport rep;
    CoefficientOracle oracle(inst.G, cap);
    rep.coefficient_order = oracle.group_order();
    if (!rep.coefficient_order.is_finite()) {
        rep.message = "coefficient group not known to be finite; no order check";
        return rep;
    }
    const long long nG = rep.coefficient_order.value;
    RelativePresentation p = inst.presentation();
    EnumerationOptions eo;
    eo.cap = cap;
    LiftedOrder lo = lifted_group_order(p, oracle, eo);
    rep.order = lo.order;
    if (!lo.order.is_finite()) {
        rep.message = "enumeration of G(Q) exceeded the cap of " + std::to_string(cap) + "; check skipped";
        return rep;
    }
    const long long N = lo.order.value;
    const std::string orders = "|G(Q)| = " + std::to_string(N) + ", |G| = " + std::to_string(nG);
    if (v.claimed_order && *v.claimed_order != N) {
        rep.status = Status::Inconsistent;
        rep.message = orders + " but the justification claims " + std::to_string(*v.claimed_order);
        return rep;
    }
    if (is_yes(v.aspherical)) {
        rep.status = N == nG ? Status::Consistent : Status::Inconsistent;
        rep.message = orders + (N == nG ? "" : ": a finite G(Q) larger than G contradicts asphericity");
        return rep;
    }
    if (N == nG && is_yes(lift_isomorphism(p, oracle, eo))) {
        rep.status = is_no(v.aspherical) ? Status::Inconsistent : Status::Consistent;
        rep.message = orders + ": G -> G(Q) is an isomorphism, so Q is aspherical";
        return rep;
    }
    rep.status = Status::Consistent;
    rep.message = orders;
    return rep;
}

}  // namespace asph
