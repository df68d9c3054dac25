#include "asph/words.hpp"

#include "asph/coefficient_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace asph {

Word inverse(const Word& w)
{
    Word out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

Word free_reduce(const Word& w)
{
    Word out;
    out.reserve(w.size());
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_free_reduce(const Word& w)
{
    Word r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
        ++i;
        --j;
    }
    return Word(r.begin() + i, r.begin() + j);
}

Word concat(const Word& a, const Word& b)
{
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word word_power(const Word& w, long long e)
{
    Word base = e < 0 ? inverse(w) : w;
    Word out;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
}

long long exponent_sum(const Word& w, int gen)
{
    long long s = 0;
    for (int l : w)
        if (letter_gen(l) == gen) s += l > 0 ? 1 : -1;
    return s;
}

std::string format_word(const Word& w, const std::vector<std::string>& names)
{
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        long long e = static_cast<long long>(j - i) * (w[i] > 0 ? 1 : -1);
        int gen = letter_gen(w[i]);
        if (!out.empty()) out += ' ';
        out += gen < static_cast<int>(names.size()) ? names[gen] : "?" + std::to_string(gen);
        if (e != 1) out += "^" + std::to_string(e);
        i = j;
    }
    return out;
}

CoefficientGroup CoefficientGroup::cyclic(long long n, std::string name)
{
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    CoefficientGroup G;
    G.generators = {std::move(name)};
    G.relators = {word_power(Word{letter(0)}, n)};
    G.kind = Kind::Cyclic;
    G.cyclic_order = n;
    return G;
}

CoefficientGroup CoefficientGroup::free(std::vector<std::string> names)
{
    CoefficientGroup G;
    G.generators = std::move(names);
    return G;
}

CoefficientGroup CoefficientGroup::presented(std::vector<std::string> names, std::vector<Word> relators)
{
    CoefficientGroup G;
    G.generators = std::move(names);
    for (const Word& r : relators) {
        Word c = cyclic_free_reduce(r);
        for (int l : c)
            if (letter_gen(l) >= static_cast<int>(G.generators.size()))
                throw std::invalid_argument("relator letter outside the generator list");
        if (!c.empty()) G.relators.push_back(std::move(c));
    }
    if (G.generators.size() == 1 && G.relators.size() == 1) {
        const Word& r = G.relators.front();
        if (std::all_of(r.begin(), r.end(), [&](int l) { return l == r.front(); })) {
            G.kind = Kind::Cyclic;
            G.cyclic_order = static_cast<long long>(r.size());
            G.relators = {word_power(Word{letter(0)}, G.cyclic_order)};
        }
    }
    return G;
}

int CoefficientGroup::generator_index(const std::string& name) const
{
    auto it = std::find(generators.begin(), generators.end(), name);
    return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

std::string CoefficientGroup::to_text() const
{
    std::string out = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
    out += " |";
    for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : " ") + format_word(relators[i], generators);
    out += ">";
    return out;
}

FreeProductWord inverse(const FreeProductWord& w)
{
    FreeProductWord out;
    for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
        out.syllables.push_back({it->kind, inverse(it->word)});
    return out;
}

FreeProductWord concat(const FreeProductWord& a, const FreeProductWord& b)
{
    FreeProductWord out = a;
    for (const Syllable& s : b.syllables) {
        if (!out.syllables.empty() && out.syllables.back().kind == s.kind)
            out.syllables.back().word = concat(out.syllables.back().word, s.word);
        else
            out.syllables.push_back(s);
    }
    return out;
}

std::string RelativePresentation::format(const FreeProductWord& w) const
{
    if (w.empty()) return "1";
    std::string out;
    for (const Syllable& s : w.syllables) {
        if (!out.empty()) out += ' ';
        out += format_word(s.word, s.is_coefficient() ? coeff.generators : x_gens);
    }
    return out;
}

std::string RelativePresentation::to_text() const
{
    std::string out = "group " + coeff.to_text() + "; ";
    for (std::size_t i = 0; i < x_gens.size(); ++i) out += (i ? ", " : "") + x_gens[i];
    for (const FreeProductWord& r : relators) out += "; rel " + format(r);
    return out;
}

namespace {

bool trivial_syllable(const Syllable& s, const CoefficientOracle* oracle)
{
    if (s.word.empty()) return true;
    return s.is_coefficient() && oracle && is_yes(oracle->is_trivial(s.word));
}

// Appends s to the reduced stack, merging with the top syllable of the same kind.
void push_reduced(std::vector<Syllable>& st, Syllable s, const CoefficientOracle* oracle)
{
    s.word = free_reduce(s.word);
    if (trivial_syllable(s, oracle)) return;
    if (!st.empty() && st.back().kind == s.kind) {
        Syllable merged{s.kind, free_reduce(concat(st.back().word, s.word))};
        st.pop_back();
        if (!trivial_syllable(merged, oracle)) st.push_back(std::move(merged));
        return;
    }
    st.push_back(std::move(s));
}

TriState syllable_equal(const Syllable& a, const Syllable& b, const CoefficientOracle* oracle)
{
    if (a.kind != b.kind) return TriState::No;
    if (a.is_free()) return tri(free_reduce(a.word) == free_reduce(b.word));
    if (free_reduce(a.word) == free_reduce(b.word)) return TriState::Yes;
    if (!oracle) return TriState::Unknown;
    return oracle->equal(a.word, b.word);
}

// Conjugacy of two elements of the coefficient group.
TriState conjugate_in_coefficients(const Word& u, const Word& v, const CoefficientOracle* oracle)
{
    if (free_reduce(u) == free_reduce(v)) return TriState::Yes;
    if (!oracle) return TriState::Unknown;
    if (const FiniteGroupModel* m = oracle->finite_model()) {
        int a = m->element_of(u), b = m->element_of(v);
        for (int c = 0; c < m->order(); ++c)
            if (m->multiply(m->multiply(m->inverse(c), a), c) == b) return TriState::Yes;
        return TriState::No;
    }
    if (const FreeProductOfCyclics* f = oracle->free_product()) {
        auto cyc = [&](const Word& w) {
            auto nf = f->normal_form(w);
            while (nf.size() >= 2 && nf.front().first == nf.back().first) {
                Word merged = f->to_word({nf.back(), nf.front()});
                auto m = f->normal_form(merged);
                nf.pop_back();
                nf.erase(nf.begin());
                nf.insert(nf.begin(), m.begin(), m.end());
            }
            return nf;
        };
        auto a = cyc(u), b = cyc(v);
        if (a.size() != b.size()) return TriState::No;
        if (a.empty()) return TriState::Yes;
        for (std::size_t r = 0; r < a.size(); ++r) {
            bool same = true;
            for (std::size_t i = 0; i < a.size() && same; ++i) same = a[i] == b[(i + r) % b.size()];
            if (same) return TriState::Yes;
        }
        return TriState::No;
    }
    return oracle->equal(u, v) == TriState::Yes ? TriState::Yes : TriState::Unknown;
}

}  // namespace

FreeProductWord reduce(const FreeProductWord& w, const CoefficientOracle* oracle)
{
    std::vector<Syllable> st;
    for (const Syllable& s : w.syllables) push_reduced(st, s, oracle);
    return FreeProductWord{std::move(st)};
}

FreeProductWord cyclically_reduce(const FreeProductWord& w, const CoefficientOracle* oracle)
{
    std::vector<Syllable> s = reduce(w, oracle).syllables;
    while (s.size() >= 2 && s.front().kind == s.back().kind) {
        Syllable merged{s.front().kind, free_reduce(concat(s.back().word, s.front().word))};
        s.pop_back();
        if (trivial_syllable(merged, oracle))
            s.erase(s.begin());
        else
            s.front() = std::move(merged);
    }
    if (s.size() == 1 && s.front().is_free()) {
        s.front().word = cyclic_free_reduce(s.front().word);
        if (s.front().word.empty()) s.clear();
    }
    return FreeProductWord{std::move(s)};
}

std::size_t free_product_length(const FreeProductWord& w) { return w.syllables.size(); }

std::size_t x_letter_count(const FreeProductWord& w)
{
    std::size_t n = 0;
    for (const Syllable& s : w.syllables)
        if (s.is_free()) n += s.word.size();
    return n;
}

std::vector<std::pair<int, Word>> letter_sequence(const FreeProductWord& w)
{
    std::vector<Syllable> syl = w.syllables;
    if (!syl.empty() && syl.front().is_coefficient()) std::rotate(syl.begin(), syl.begin() + 1, syl.end());
    std::vector<std::pair<int, Word>> out;
    for (const Syllable& s : syl) {
        if (s.is_free()) {
            for (int l : s.word) out.emplace_back(l, Word{});
        } else if (!out.empty()) {
            out.back().second = concat(out.back().second, s.word);
        }
    }
    return out;
}

std::optional<std::pair<FreeProductWord, int>> is_proper_power(const FreeProductWord& w,
                                                               const CoefficientOracle* oracle)
{
    const auto& s = w.syllables;
    const std::size_t n = s.size();
    if (n == 0) return std::nullopt;
    if (n == 1) {
        if (s.front().is_coefficient()) return std::nullopt;
        const Word& x = s.front().word;
        for (std::size_t p = 1; p < x.size(); ++p) {
            if (x.size() % p) continue;
            bool periodic = true;
            for (std::size_t i = p; i < x.size() && periodic; ++i) periodic = x[i] == x[i - p];
            if (periodic)
                return std::make_pair(FreeProductWord{{Syllable::free(Word(x.begin(), x.begin() + p))}},
                                      static_cast<int>(x.size() / p));
        }
        return std::nullopt;
    }
    for (std::size_t p = 2; p < n; p += 2) {
        if (n % p) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) periodic = is_yes(syllable_equal(s[i], s[i - p], oracle));
        if (periodic)
            return std::make_pair(FreeProductWord{std::vector<Syllable>(s.begin(), s.begin() + p)},
                                  static_cast<int>(n / p));
    }
    return std::nullopt;
}

TriState conjugate_in_free_product(const FreeProductWord& u, const FreeProductWord& v,
                                   const CoefficientOracle* oracle)
{
    const auto& a = u.syllables;
    const auto& b = v.syllables;
    if (a.size() != b.size()) return TriState::No;
    if (a.empty()) return TriState::Yes;
    if (a.size() == 1) {
        if (a[0].kind != b[0].kind) return TriState::No;
        if (a[0].is_coefficient()) return conjugate_in_coefficients(a[0].word, b[0].word, oracle);
        Word x = cyclic_free_reduce(a[0].word), y = cyclic_free_reduce(b[0].word);
        if (x.size() != y.size()) return TriState::No;
        for (std::size_t r = 0; r < x.size(); ++r)
            if (std::equal(x.begin(), x.end() - r, y.begin() + r) && std::equal(x.end() - r, x.end(), y.begin()))
                return TriState::Yes;
        return tri(x.empty());
    }
    TriState result = TriState::No;
    for (std::size_t r = 0; r < a.size(); r += 2) {
        TriState all = TriState::Yes;
        for (std::size_t i = 0; i < a.size() && !is_no(all); ++i)
            all = all && syllable_equal(a[i], b[(i + r) % b.size()], oracle);
        result = result || all;
        if (is_yes(result)) break;
    }
    return result;
}

OrientabilityReport is_orientable(const RelativePresentation& p, const CoefficientOracle* oracle)
{
    OrientabilityReport rep;
    std::vector<FreeProductWord> rs;
    for (const FreeProductWord& r : p.relators) rs.push_back(cyclically_reduce(r, oracle));
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (x_letter_count(rs[i]) == 0) {
            rep.orientable = TriState::No;
            rep.witness = "condition (a): relator " + std::to_string(i + 1) + " is conjugate into the coefficient group";
            return rep;
        }
    }
    TriState undecided = TriState::Yes;
    std::string pending;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        FreeProductWord inv = cyclically_reduce(inverse(rs[i]), oracle);
        TriState self = conjugate_in_free_product(rs[i], inv, oracle);
        if (is_yes(self)) {
            rep.orientable = TriState::No;
            rep.witness = "condition (b): relator " + std::to_string(i + 1) + " is conjugate to its inverse";
            return rep;
        }
        if (is_unknown(self)) {
            undecided = TriState::Unknown;
            pending = "relator " + std::to_string(i + 1) + " against its inverse";
        }
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
            FreeProductWord invj = cyclically_reduce(inverse(rs[j]), oracle);
            for (int eps : {1, -1}) {
                TriState c = conjugate_in_free_product(rs[i], eps == 1 ? rs[j] : invj, oracle);
                if (is_yes(c)) {
                    rep.orientable = TriState::No;
                    rep.witness = "condition (b): relators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " are conjugate with exponent " + (eps == 1 ? "+1" : "-1");
                    return rep;
                }
                if (is_unknown(c)) {
                    undecided = TriState::Unknown;
                    pending = "relators " + std::to_string(i + 1) + " and " + std::to_string(j + 1);
                }
            }
        }
    }
    rep.orientable = undecided;
    if (is_unknown(undecided)) rep.witness = "undecided: coefficient word problem for " + pending;
    return rep;
}

RelativePresentation length_four_presentation(const CoefficientGroup& G, const Word& g, const Word& h, int l, int k,
                                              std::string x)
{
    if (l == 0 || k == 0) throw std::invalid_argument("exponents must be nonzero");
    RelativePresentation p;
    p.coeff = G;
    p.x_gens = {std::move(x)};
    FreeProductWord r;
    r.syllables = {Syllable::free(word_power(Word{letter(0)}, l)), Syllable::coefficient(g),
                   Syllable::free(word_power(Word{letter(0)}, k)), Syllable::coefficient(h)};
    p.relators = {std::move(r)};
    return p;
}

}  // namespace asph
