#include "asph/pictures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace asph {

namespace {

struct Location {
    int vertex = -1;  // disc index, or discs.size() for the boundary pseudo-vertex
    int pos = -1;
};

// Rotation system: discs first, then the boundary with its list reversed.
struct Rotation {
    std::vector<std::vector<ArcEnd>> arcs;
    std::vector<std::array<Location, 2>> where;  // [arc][end]
    int boundary = -1;                           // pseudo-vertex index or -1
};

Rotation rotation_of(const Picture& pic)
{
    Rotation r;
    for (const Disc& d : pic.discs) r.arcs.push_back(d.arcs);
    if (!pic.outer.empty()) {
        r.boundary = static_cast<int>(r.arcs.size());
        r.arcs.emplace_back(pic.outer.rbegin(), pic.outer.rend());
    }
    r.where.assign(pic.arcs.size(), {Location{}, Location{}});
    for (int v = 0; v < static_cast<int>(r.arcs.size()); ++v)
        for (int i = 0; i < static_cast<int>(r.arcs[v].size()); ++i) {
            ArcEnd e = r.arcs[v][i];
            r.where[e.arc][e.end] = {v, i};
        }
    return r;
}

int find_root(std::vector<int>& parent, int a)
{
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
}

Word region_label(const Picture& pic, const Region& reg)
{
    Word w;
    for (const CornerRef& c : reg.corners)
        if (c.disc >= 0) w = concat(w, pic.discs[c.disc].corners[c.corner]);
    return free_reduce(w);
}

std::vector<std::pair<int, Word>> disc_sequence(const Picture& pic, int d)
{
    const Disc& D = pic.discs[d];
    std::vector<std::pair<int, Word>> out;
    for (int i = 0; i < D.degree(); ++i) out.emplace_back(pic.letter_at(D.arcs[i]), D.corners[i]);
    return out;
}

std::string sequence_text(const RelativePresentation& p, const std::vector<std::pair<int, Word>>& seq)
{
    FreeProductWord w;
    for (const auto& [l, c] : seq) {
        w = concat(w, FreeProductWord{{{Syllable::Kind::Free, {l}}}});
        if (!c.empty()) w = concat(w, FreeProductWord{{{Syllable::Kind::Coefficient, c}}});
    }
    return p.format(w);
}

DiscCheck check_disc(const Picture& pic, int d, const std::vector<FreeProductWord>& relators,
                     const RelativePresentation& p, const CoefficientOracle& oracle)
{
    DiscCheck best;
    const auto seq = disc_sequence(pic, d);
    const int n = static_cast<int>(seq.size());
    bool undecided = false;
    for (int ri = 0; ri < static_cast<int>(relators.size()) && !is_yes(best.valid); ++ri) {
        for (int sign : {1, -1}) {
            auto rel = letter_sequence(sign > 0 ? relators[ri] : inverse(relators[ri]));
            if (static_cast<int>(rel.size()) != n) continue;
            for (int s = 0; s < n; ++s) {
                TriState ok = TriState::Yes;
                for (int i = 0; i < n && !is_no(ok); ++i) {
                    const auto& [l, c] = rel[(i + s) % n];
                    if (seq[i].first != l) {
                        ok = TriState::No;
                        break;
                    }
                    ok = ok && oracle.equal(seq[i].second, c);
                }
                if (is_yes(ok)) {
                    best = {TriState::Yes, ri, sign, s, ""};
                    break;
                }
                if (is_unknown(ok) && !undecided) {
                    undecided = true;
                    best = {TriState::Unknown, ri, sign, s, ""};
                }
            }
            if (is_yes(best.valid)) break;
        }
    }
    if (!is_yes(best.valid))
        best.message = "disc " + std::to_string(d) + " reads " + sequence_text(p, seq) +
                       (undecided ? ", which could not be matched against a relator"
                                  : ", which is not a cyclic permutation of a relator or its inverse");
    return best;
}

}  // namespace

void check_structure(const Picture& pic, int x_count)
{
    const int na = static_cast<int>(pic.arcs.size());
    for (int a = 0; a < na; ++a) {
        const Arc& arc = pic.arcs[a];
        if (arc.x < 0 || arc.x >= x_count)
            throw std::invalid_argument("arc " + std::to_string(a) + " has an unknown x-generator");
        if (arc.orient != 1 && arc.orient != -1)
            throw std::invalid_argument("arc " + std::to_string(a) + " orientation must be +1 or -1");
    }
    std::vector<std::array<int, 2>> seen(na, {0, 0});
    auto note = [&](ArcEnd e, const std::string& where) {
        if (e.arc < 0 || e.arc >= na || (e.end != 0 && e.end != 1))
            throw std::invalid_argument(where + " refers to a missing arc end");
        if (seen[e.arc][e.end]++)
            throw std::invalid_argument("end " + std::to_string(e.end) + " of arc " + std::to_string(e.arc) +
                                        " is used twice");
    };
    for (std::size_t d = 0; d < pic.discs.size(); ++d) {
        const Disc& D = pic.discs[d];
        if (D.arcs.empty()) throw std::invalid_argument("disc " + std::to_string(d) + " has no arcs");
        if (D.arcs.size() != D.corners.size())
            throw std::invalid_argument("disc " + std::to_string(d) + " must alternate arcs and corners");
        for (ArcEnd e : D.arcs) note(e, "disc " + std::to_string(d));
    }
    for (ArcEnd e : pic.outer) note(e, "boundary");
    for (int a = 0; a < na; ++a)
        for (int e = 0; e < 2; ++e)
            if (!seen[a][e])
                throw std::invalid_argument("end " + std::to_string(e) + " of arc " + std::to_string(a) +
                                            " is not attached");
    if (pic.annular) {
        const CornerRef& k = *pic.annular;
        if (k.disc < 0 || k.disc >= static_cast<int>(pic.discs.size()) || k.corner < 0 ||
            k.corner >= pic.discs[k.disc].degree())
            throw std::invalid_argument("annular corner does not exist");
    }
}

PictureMap build_map(const Picture& pic)
{
    PictureMap m;
    Rotation rot = rotation_of(pic);
    const int V = static_cast<int>(rot.arcs.size());
    m.vertices = V;
    m.region_of.resize(pic.discs.size());
    for (std::size_t d = 0; d < pic.discs.size(); ++d) m.region_of[d].assign(pic.discs[d].degree(), -1);
    std::vector<std::vector<int>> seen(V);
    for (int v = 0; v < V; ++v) seen[v].assign(rot.arcs[v].size(), -1);

    for (int v = 0; v < V; ++v)
        for (int j = 0; j < static_cast<int>(rot.arcs[v].size()); ++j) {
            if (seen[v][j] >= 0) continue;
            Region reg;
            const int id = static_cast<int>(m.regions.size());
            int cv = v, cj = j;
            while (seen[cv][cj] < 0) {
                seen[cv][cj] = id;
                bool pseudo = cv == rot.boundary;
                reg.corners.push_back({pseudo ? -1 : cv, cj});
                if (pseudo) reg.inner = false;
                const int deg = static_cast<int>(rot.arcs[cv].size());
                ArcEnd next = rot.arcs[cv][(cj + 1) % deg];
                reg.arcs.push_back(next.arc);
                Location other = rot.where[next.arc][1 - next.end];
                cv = other.vertex;
                cj = other.pos;
            }
            m.regions.push_back(std::move(reg));
        }
    for (std::size_t r = 0; r < m.regions.size(); ++r)
        for (const CornerRef& c : m.regions[r].corners)
            if (c.disc >= 0) m.region_of[c.disc][c.corner] = static_cast<int>(r);
    if (pic.annular) {
        Region& reg = m.regions[m.region_of[pic.annular->disc][pic.annular->corner]];
        reg.annular = true;
        reg.inner = false;
    }

    std::vector<int> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& ends : rot.where) {
        int a = find_root(parent, ends[0].vertex), b = find_root(parent, ends[1].vertex);
        if (a != b) parent[a] = b;
    }
    for (int v = 0; v < V; ++v)
        if (find_root(parent, v) == v) ++m.components;
    // each component is counted with its own faces, so a planar union has Euler sum 2 per component
    long long euler = static_cast<long long>(V) - static_cast<long long>(pic.arcs.size()) +
                      static_cast<long long>(m.regions.size());
    m.planar = euler == 2LL * m.components;
    return m;
}

PictureReport validate_picture(const Picture& pic, const RelativePresentation& p, const CoefficientOracle& oracle)
{
    PictureReport rep;
    try {
        check_structure(pic, static_cast<int>(p.x_gens.size()));
    } catch (const std::invalid_argument& e) {
        rep.valid = TriState::No;
        rep.problems.push_back(e.what());
        return rep;
    }
    rep.map = build_map(pic);
    rep.planar = rep.map.planar;
    if (!rep.planar) {
        rep.valid = TriState::No;
        rep.problems.push_back("incidence data does not embed in the sphere");
    }
    if (rep.map.components > 1) rep.problems.push_back("picture is not connected; region labels are per component");

    // discs read the relators as written: coefficients trivial in G are not cancelled
    std::vector<FreeProductWord> relators;
    for (const FreeProductWord& r : p.relators) relators.push_back(cyclically_reduce(r));
    for (int d = 0; d < static_cast<int>(pic.discs.size()); ++d) {
        rep.discs.push_back(check_disc(pic, d, relators, p, oracle));
        rep.valid = rep.valid && rep.discs.back().valid;
        if (!is_yes(rep.discs.back().valid)) rep.problems.push_back(rep.discs.back().message);
    }
    for (std::size_t r = 0; r < rep.map.regions.size(); ++r) {
        const Region& reg = rep.map.regions[r];
        RegionCheck rc;
        rc.label = region_label(pic, reg);
        if (reg.inner) {
            rc.checked = true;
            rc.trivial = oracle.is_trivial(rc.label);
            rep.valid = rep.valid && rc.trivial;
            if (!is_yes(rc.trivial))
                rep.problems.push_back("region " + std::to_string(r) + " label " +
                                       format_word(rc.label, p.coeff.generators) +
                                       (is_no(rc.trivial) ? " is not trivial in G" : " could not be decided in G"));
        }
        rep.regions.push_back(std::move(rc));
    }
    rep.spherical = !pic.discs.empty() && pic.outer.empty();
    if (!rep.spherical) {
        rep.strictly_spherical = TriState::No;
    } else if (pic.annular) {
        int r = rep.map.region_of[pic.annular->disc][pic.annular->corner];
        rep.strictly_spherical = oracle.is_trivial(inverse(rep.regions[r].label));
    } else {
        rep.strictly_spherical = rep.valid;
    }
    return rep;
}

std::vector<std::pair<int, Word>> corner_word(const Picture& pic, CornerRef k)
{
    const Disc& D = pic.discs.at(k.disc);
    const int n = D.degree();
    std::vector<std::pair<int, Word>> out;
    for (int t = 1; t <= n; ++t) {
        int i = (k.corner + t) % n;
        out.emplace_back(pic.letter_at(D.arcs[i]), D.corners[i]);
    }
    return out;
}

namespace {

TriState is_mirror_pair(const Picture& pic, CornerRef k1, CornerRef k2, const CoefficientOracle& oracle)
{
    auto a = corner_word(pic, k1), b = corner_word(pic, k2);
    if (a.size() != b.size()) return TriState::No;
    const std::size_t n = a.size();
    TriState ok = TriState::Yes;
    for (std::size_t i = 0; i < n && !is_no(ok); ++i) {
        // pair i of W(k2) is (l_{n-i}^-1, c_{n-i-1}^-1) in terms of W(k1), with c_0 = c_n
        const auto& [l, c] = b[i];
        if (l != -a[n - 1 - i].first) return TriState::No;
        const Word& cc = a[(2 * n - 2 - i) % n].second;
        ok = ok && oracle.equal(c, inverse(cc));
    }
    return ok;
}

}  // namespace

std::optional<Dipole> find_dipole(const Picture& pic, const CoefficientOracle& oracle)
{
    Rotation rot = rotation_of(pic);
    const int nd = static_cast<int>(pic.discs.size());
    for (int a = 0; a < static_cast<int>(pic.arcs.size()); ++a) {
        Location u = rot.where[a][0], v = rot.where[a][1];
        if (u.vertex >= nd || v.vertex >= nd || u.vertex == v.vertex) continue;
        const int du = pic.discs[u.vertex].degree(), dv = pic.discs[v.vertex].degree();
        CornerRef sides[2][2] = {
            {{u.vertex, (u.pos + du - 1) % du}, {v.vertex, v.pos}},
            {{v.vertex, (v.pos + dv - 1) % dv}, {u.vertex, u.pos}},
        };
        for (auto& side : sides)
            if (is_yes(is_mirror_pair(pic, side[0], side[1], oracle))) return Dipole{side[0], side[1], a};
    }
    return std::nullopt;
}

Picture cancel_dipole(const Picture& pic, const Dipole& d)
{
    const int D1 = d.first.disc, D2 = d.second.disc;
    if (D1 == D2) throw std::invalid_argument("a dipole needs two distinct discs");
    const Disc& A = pic.discs.at(D1);
    const Disc& B = pic.discs.at(D2);
    const int n = A.degree();
    if (B.degree() != n) throw std::invalid_argument("dipole discs have different degrees");
    auto pos_in = [&](const Disc& X, int arc) {
        for (int i = 0; i < X.degree(); ++i)
            if (X.arcs[i].arc == arc) return i;
        throw std::invalid_argument("dipole arc does not meet the disc");
    };
    const int i = pos_in(A, d.arc), j = pos_in(B, d.arc);

    // arc ends on the two discs are identified in pairs
    std::map<std::pair<int, int>, ArcEnd> partner;
    auto key = [](ArcEnd e) { return std::make_pair(e.arc, e.end); };
    for (int k = 1; k < n; ++k) {
        ArcEnd e = A.arcs[(i + k) % n], f = B.arcs[(j - k + n) % n];
        partner[key(e)] = f;
        partner[key(f)] = e;
    }
    auto internal = [&](ArcEnd e) { return partner.count(key(e)) > 0 || e.arc == d.arc; };

    Picture out;
    std::map<std::pair<int, int>, ArcEnd> renamed;
    std::vector<bool> used(pic.arcs.size(), false);
    used[d.arc] = true;
    auto external_ends = [&](auto&& fn) {
        for (std::size_t q = 0; q < pic.discs.size(); ++q)
            if (static_cast<int>(q) != D1 && static_cast<int>(q) != D2)
                for (ArcEnd e : pic.discs[q].arcs) fn(e);
        for (ArcEnd e : pic.outer) fn(e);
    };
    external_ends([&](ArcEnd start) {
        if (used[start.arc]) return;
        ArcEnd cur = {start.arc, 1 - start.end};
        used[start.arc] = true;
        while (internal(cur)) {
            ArcEnd next = partner.at(key(cur));
            used[next.arc] = true;
            cur = {next.arc, 1 - next.end};
        }
        const int id = static_cast<int>(out.arcs.size());
        out.arcs.push_back({pic.arcs[start.arc].x, pic.reading(start)});
        renamed[key(start)] = {id, 0};
        renamed[key(cur)] = {id, 1};
    });
    // arcs never reached from outside form closed curves and are discarded

    std::vector<int> disc_index(pic.discs.size(), -1);
    for (std::size_t q = 0; q < pic.discs.size(); ++q) {
        if (static_cast<int>(q) == D1 || static_cast<int>(q) == D2) continue;
        disc_index[q] = static_cast<int>(out.discs.size());
        Disc nd;
        for (std::size_t t = 0; t < pic.discs[q].arcs.size(); ++t) {
            nd.arcs.push_back(renamed.at(key(pic.discs[q].arcs[t])));
            nd.corners.push_back(pic.discs[q].corners[t]);
        }
        out.discs.push_back(std::move(nd));
    }
    for (ArcEnd e : pic.outer) out.outer.push_back(renamed.at(key(e)));

    if (pic.annular) {
        if (disc_index[pic.annular->disc] >= 0) {
            out.annular = CornerRef{disc_index[pic.annular->disc], pic.annular->corner};
        } else {
            PictureMap m = build_map(pic);
            const Region& reg = m.regions[m.region_of[pic.annular->disc][pic.annular->corner]];
            for (const CornerRef& c : reg.corners)
                if (c.disc >= 0 && disc_index[c.disc] >= 0) {
                    out.annular = CornerRef{disc_index[c.disc], c.corner};
                    break;
                }
        }
    }
    return out;
}

AngleFunction standard_angles(const Picture& pic)
{
    PictureMap m = build_map(pic);
    AngleFunction ang(pic.discs.size());
    for (std::size_t v = 0; v < pic.discs.size(); ++v) {
        const int deg = pic.discs[v].degree();
        int open = 0;
        for (int j = 0; j < deg; ++j)
            if (m.regions[m.region_of[v][j]].degree() != 2) ++open;
        ang[v].assign(deg, Rational(0));
        for (int j = 0; j < deg; ++j) {
            bool bigon = m.regions[m.region_of[v][j]].degree() == 2;
            if (open == 0)
                ang[v][j] = Rational(2, deg);
            else if (!bigon)
                ang[v][j] = Rational(2, open);
        }
    }
    return ang;
}

bool angles_sum_to_two(const Picture& pic, const AngleFunction& ang)
{
    if (ang.size() != pic.discs.size()) return false;
    for (std::size_t v = 0; v < pic.discs.size(); ++v) {
        if (static_cast<int>(ang[v].size()) != pic.discs[v].degree()) return false;
        Rational s(0);
        for (const Rational& t : ang[v]) s += t;
        if (s != 2) return false;
    }
    return true;
}

CurvatureReport curvature(const Picture& pic, const AngleFunction& ang)
{
    if (!angles_sum_to_two(pic, ang)) throw std::invalid_argument("angles must sum to 2 at every disc");
    PictureMap m = build_map(pic);
    const Rational boundary_angle = pic.outer.empty() ? Rational(0) : Rational(2, static_cast<long long>(pic.outer.size()));
    CurvatureReport rep;
    for (const Region& reg : m.regions) {
        Rational c(2);
        for (const CornerRef& k : reg.corners)
            c -= Rational(1) - (k.disc >= 0 ? ang[k.disc][k.corner] : boundary_angle);
        rep.regions.push_back(c);
        rep.total += c;
    }
    return rep;
}

Rational region_curvature(const std::vector<int>& vertex_degrees)
{
    Rational c(2);
    for (int d : vertex_degrees) {
        if (d < 1) throw std::invalid_argument("vertex degree must be positive");
        c -= Rational(1) - Rational(2, d);
    }
    return c;
}

TransferReport apply_transfers(const CurvatureReport& c, const std::vector<Transfer>& rules)
{
    TransferReport rep;
    rep.redistributed = c.regions;
    const int n = static_cast<int>(c.regions.size());
    for (const Transfer& t : rules) {
        if (t.source < 0 || t.source >= n || t.sink < 0 || t.sink >= n)
            throw std::invalid_argument("transfer refers to a missing region");
        rep.redistributed[t.source] -= t.amount;
        rep.redistributed[t.sink] += t.amount;
    }
    for (const Rational& v : rep.redistributed) rep.total += v;
    rep.conserved = rep.total == c.total;
    return rep;
}

int corner_star_edge(const Picture& pic, const StarGraph& sg, const DiscCheck& disc, CornerRef k)
{
    if (!is_yes(disc.valid)) throw std::invalid_argument("corner_star_edge needs a valid disc");
    const int n = pic.discs.at(k.disc).degree();
    int base = 0;
    for (const StarEdge& e : sg.edges)
        if (e.relator < disc.relator) ++base;
    // W(k) starts at relator letter position q of r^sign
    const int q = (k.corner + 1 + disc.rotation) % n;
    if (disc.sign > 0) return base + 2 * q;
    return base + 2 * ((n - q) % n) + 1;
}

namespace {

int random_below(std::mt19937_64& rng, int n)
{
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

}  // namespace

Picture random_spherical_picture(std::mt19937_64& rng, const RelativePresentation& p, int rel, int half_discs)
{
    if (half_discs < 1) throw std::invalid_argument("need at least one disc");
    const FreeProductWord r = p.relators.at(rel);
    const auto seq_pos = letter_sequence(r);
    const auto seq_neg = letter_sequence(inverse(r));
    const int n = static_cast<int>(seq_pos.size());
    if (n == 0) throw std::invalid_argument("relator has no x-letters");

    for (int attempt = 0; attempt < 1000; ++attempt) {
        // tree half: slot[d][i] is the arc at position i, or -1
        std::vector<int> sign(half_discs);
        std::vector<std::vector<int>> slot(half_discs, std::vector<int>(n, -1));
        std::vector<Arc> arcs;
        std::vector<std::array<std::pair<int, int>, 2>> ends;  // (disc, pos) per arc end
        auto letters = [&](int d) -> const std::vector<std::pair<int, Word>>& { return sign[d] > 0 ? seq_pos : seq_neg; };
        bool ok = true;
        for (int d = 0; d < half_discs && ok; ++d) {
            sign[d] = random_below(rng, 2) ? 1 : -1;
            if (d == 0) continue;
            std::vector<std::array<int, 3>> options;  // (other disc, my pos, other pos)
            for (int e = 0; e < d; ++e)
                for (int s = 0; s < n; ++s)
                    for (int t = 0; t < n; ++t)
                        if (slot[e][t] < 0 && letters(d)[s].first == -letters(e)[t].first)
                            options.push_back({e, s, t});
            if (options.empty()) {
                ok = false;
                break;
            }
            auto [e, s, t] = options[random_below(rng, static_cast<int>(options.size()))];
            const int id = static_cast<int>(arcs.size());
            int l = letters(d)[s].first;
            arcs.push_back({letter_gen(l), l > 0 ? 1 : -1});
            ends.push_back({std::make_pair(d, s), std::make_pair(e, t)});
            slot[d][s] = id;
            slot[e][t] = id;
        }
        if (!ok) continue;
        const int tree_arcs = static_cast<int>(arcs.size());
        for (int d = 0; d < half_discs; ++d)
            for (int s = 0; s < n; ++s)
                if (slot[d][s] < 0) {
                    int l = letters(d)[s].first;
                    slot[d][s] = static_cast<int>(arcs.size());
                    arcs.push_back({letter_gen(l), l > 0 ? 1 : -1});
                    ends.push_back({std::make_pair(d, s), std::make_pair(-1, -1)});
                }

        // mirror image glued along the dangling arcs: the reflection fixes the boundary circle
        {
            Picture pic;
            const int H = half_discs;
            pic.discs.resize(2 * H);
            // half copy and mirror copy of each arc; dangling arcs are glued instead
            std::vector<int> copy_id(arcs.size()), mirror_id(arcs.size());
            for (std::size_t a = 0; a < arcs.size(); ++a) {
                copy_id[a] = static_cast<int>(pic.arcs.size());
                pic.arcs.push_back(arcs[a]);
                if (static_cast<int>(a) < tree_arcs) {
                    mirror_id[a] = static_cast<int>(pic.arcs.size());
                    pic.arcs.push_back({arcs[a].x, -arcs[a].orient});
                } else {
                    mirror_id[a] = copy_id[a];
                }
            }
            for (int d = 0; d < H; ++d) {
                Disc& X = pic.discs[d];
                Disc& M = pic.discs[H + d];
                for (int s = 0; s < n; ++s) {
                    int a = slot[d][s];
                    int end = ends[a][0] == std::make_pair(d, s) ? 0 : 1;
                    X.arcs.push_back({copy_id[a], end});
                    X.corners.push_back(letters(d)[s].second);
                }
                for (int s = 0; s < n; ++s) {
                    // mirror: arcs'[s] = arcs[-s], corners'[s] = corners[-s-1]^-1
                    int src = (n - s) % n;
                    int a = slot[d][src];
                    int end = ends[a][0] == std::make_pair(d, src) ? 0 : 1;
                    if (a >= tree_arcs) end = 1;
                    M.arcs.push_back({mirror_id[a], end});
                    M.corners.push_back(free_reduce(inverse(letters(d)[(2 * n - s - 1) % n].second)));
                }
            }
            if (build_map(pic).planar) return pic;
        }
    }
    throw std::runtime_error("could not build a random spherical picture for this relator");
}

AngleFunction random_angles(std::mt19937_64& rng, const Picture& pic)
{
    AngleFunction ang(pic.discs.size());
    for (std::size_t v = 0; v < pic.discs.size(); ++v) {
        std::vector<long long> w(pic.discs[v].degree());
        for (long long& x : w) x = random_below(rng, 10) + 1;
        long long total = std::accumulate(w.begin(), w.end(), 0LL);
        for (long long x : w) ang[v].push_back(Rational(2 * x, total));
    }
    return ang;
}

}  // namespace asph
