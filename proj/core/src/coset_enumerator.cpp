#include "asph/coset_enumerator.hpp"

#include "asph/free_product_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace asph {

long long default_coset_cap()
{
    if (const char* env = std::getenv("ASPH_COSET_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultCosetCap;
}

std::string OrderResult::to_string() const
{
    return (kind == Kind::Finite ? "Finite(" : "ExceedsBudget(") + std::to_string(value) + ")";
}

int CosetTable::act(int coset, int l) const
{
    int col = l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1;
    return data[static_cast<std::size_t>(coset) * columns + col];
}

int CosetTable::act_word(int coset, const Word& w) const
{
    for (int l : w) {
        coset = act(coset, l);
        if (coset < 0) return -1;
    }
    return coset;
}

namespace {

using Row = std::int32_t;
constexpr Row kUndef = -1;

int column_of(int l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }

std::vector<int> to_columns(const Word& w)
{
    std::vector<int> cols;
    cols.reserve(w.size());
    for (int l : w) cols.push_back(column_of(l));
    return cols;
}

// Coset enumeration over a table stored row-major with two columns per generator.
// Coincidences use forwarding with path compression; dead rows are reclaimed by
// order-preserving compaction, so the first-defined ordering of live cosets is stable.
class Enumerator {
public:
    Enumerator(const Presentation& p, const std::vector<Word>& subgroup, const EnumerationOptions& opt)
        : ncols_(2 * p.rank()), felsch_(opt.strategy == Strategy::Felsch)
    {
        if (opt.cap < 1) throw std::invalid_argument("coset cap must be positive");
        if (opt.cap > 2'000'000'000LL) throw std::invalid_argument("coset cap too large");
        maxrows_ = static_cast<Row>(opt.cap);
        cap_ = opt.cap;
        reserve_slack_ = std::max<Row>(1, maxrows_ / 128);
        for (const Word& r : p.relators) {
            Word c = cyclic_free_reduce(r);
            if (!c.empty()) rels_.push_back(to_columns(c));
        }
        for (const Word& s : subgroup) {
            Word c = free_reduce(s);
            if (!c.empty()) subgens_.push_back(to_columns(c));
        }
        if (felsch_) {
            conj_.assign(ncols_, {});
            for (const auto& r : rels_) {
                for (int sgn = 0; sgn < 2; ++sgn) {
                    std::vector<int> w = r;
                    if (sgn) {
                        std::reverse(w.begin(), w.end());
                        for (int& c : w) c ^= 1;
                    }
                    for (std::size_t s = 0; s < w.size(); ++s) {
                        std::vector<int> rot(w.begin() + s, w.end());
                        rot.insert(rot.end(), w.begin(), w.begin() + s);
                        auto& bucket = conj_[rot.front()];
                        if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end())
                            bucket.push_back(std::move(rot));
                    }
                }
            }
        }
    }

    CosetTable run()
    {
        CosetTable out;
        out.cap = cap_;
        out.columns = ncols_;
        new_row();
        bool ok = felsch_ ? run_felsch() : run_hlt();
        out.stats = stats_;
        if (!ok) {
            out.status = CosetTable::Status::BudgetExceeded;
            return out;
        }
        compact(nullptr);
        out.status = CosetTable::Status::Complete;
        tab_.resize(static_cast<std::size_t>(nrows_) * ncols_);
        out.data = std::move(tab_);
        return out;
    }

private:
    Row& at(Row c, int col) { return tab_[static_cast<std::size_t>(c) * ncols_ + col]; }
    bool alive(Row c) const { return fwd_[c] == c; }

    Row rep(Row c)
    {
        Row r = c;
        while (fwd_[r] != r) r = fwd_[r];
        while (fwd_[c] != r) {
            Row n = fwd_[c];
            fwd_[c] = r;
            c = n;
        }
        return r;
    }

    Row new_row()
    {
        Row c = nrows_++;
        std::size_t need = static_cast<std::size_t>(nrows_) * ncols_;
        if (tab_.size() < need) {
            std::size_t grow = std::min<std::size_t>(std::max(need, tab_.size() * 2),
                                                     static_cast<std::size_t>(maxrows_) * ncols_);
            tab_.resize(std::max(grow, need), kUndef);
        }
        if (fwd_.size() < static_cast<std::size_t>(nrows_))
            fwd_.resize(std::max<std::size_t>(nrows_, fwd_.size() * 2));
        std::fill_n(tab_.begin() + static_cast<std::ptrdiff_t>(c) * ncols_, ncols_, kUndef);
        fwd_[c] = c;
        ++live_;
        ++stats_.total_defined;
        stats_.max_live = std::max(stats_.max_live, live_);
        return c;
    }

    enum class DefResult { Ok, NoSpace };

    DefResult define(Row c, int col, Row& out)
    {
        if (nrows_ >= maxrows_) return DefResult::NoSpace;
        Row d = new_row();
        at(c, col) = d;
        at(d, col ^ 1) = c;
        if (felsch_) deductions_.push_back({c, col});
        out = d;
        return DefResult::Ok;
    }

    void set_pair(Row a, int col, Row b)
    {
        at(a, col) = b;
        at(b, col ^ 1) = a;
        if (felsch_) deductions_.push_back({a, col});
    }

    void merge(Row k, Row l)
    {
        Row a = rep(k), b = rep(l);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        fwd_[b] = a;
        --live_;
        queue_.push_back(b);
    }

    void coincidence(Row a, Row b)
    {
        ++stats_.coincidences;
        merge(a, b);
        for (std::size_t i = 0; i < queue_.size(); ++i) {
            Row g = queue_[i];
            for (int x = 0; x < ncols_; ++x) {
                Row d = at(g, x);
                if (d == kUndef) continue;
                if (at(d, x ^ 1) == g) at(d, x ^ 1) = kUndef;
                Row mu = rep(g), nu = rep(d);
                if (at(mu, x) != kUndef)
                    merge(nu, at(mu, x));
                else if (at(nu, x ^ 1) != kUndef)
                    merge(mu, at(nu, x ^ 1));
                else
                    set_pair(mu, x, nu);
            }
        }
        queue_.clear();
    }

    // Scan w at c without defining; closes one-gap scans with a deduction.
    void scan_and_close(Row c, const std::vector<int>& w)
    {
        Row f = c, b = c;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        while (i <= j && at(f, w[i]) != kUndef) f = at(f, w[i++]);
        if (i > j) {
            if (f != c) coincidence(f, c);
            return;
        }
        while (j >= i && at(b, w[j] ^ 1) != kUndef) b = at(b, w[j--] ^ 1);
        if (j < i)
            coincidence(f, b);
        else if (i == j)
            set_pair(f, w[i], b);
    }

    // Returns false when a definition is needed but the table is full.
    bool scan_and_fill(Row c, const std::vector<int>& w)
    {
        Row f = c, b = c;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        for (;;) {
            while (i <= j && at(f, w[i]) != kUndef) f = at(f, w[i++]);
            if (i > j) {
                if (f != b) coincidence(f, b);
                return true;
            }
            while (j >= i && at(b, w[j] ^ 1) != kUndef) b = at(b, w[j--] ^ 1);
            if (j < i) {
                coincidence(f, b);
                return true;
            }
            if (i == j) {
                set_pair(f, w[i], b);
                return true;
            }
            Row d;
            if (define(f, w[i], d) == DefResult::NoSpace) return false;
        }
    }

    // Renumbers live rows 0..live-1 in order.  *cursor is moved to the first live row at or
    // after its old position.
    void compact(Row* cursor)
    {
        std::vector<Row> newidx(nrows_, kUndef);
        Row n = 0;
        for (Row c = 0; c < nrows_; ++c)
            if (alive(c)) newidx[c] = n++;
        if (cursor) {
            Row c = *cursor;
            while (c < nrows_ && !alive(c)) ++c;
            *cursor = c < nrows_ ? newidx[c] : n;
        }
        for (Row c = 0; c < nrows_; ++c) {
            if (!alive(c)) continue;
            Row dst = newidx[c];
            for (int x = 0; x < ncols_; ++x) {
                Row e = at(c, x);
                at(dst, x) = e == kUndef ? kUndef : newidx[rep(e)];
            }
        }
        for (auto& d : deductions_) d.first = alive(d.first) ? newidx[d.first] : kUndef;
        std::erase_if(deductions_, [](const auto& d) { return d.first == kUndef; });
        nrows_ = n;
        for (Row c = 0; c < n; ++c) fwd_[c] = c;
        live_ = n;
    }

    void lookahead()
    {
        for (Row c = 0; c < nrows_; ++c) {
            for (const auto& r : rels_) {
                if (!alive(c)) break;
                scan_and_close(c, r);
            }
        }
    }

    // Frees table space; false when the budget is exhausted.
    bool recover(Row& cursor)
    {
        ++stats_.space_recoveries;
        if (!felsch_) lookahead();
        if (felsch_) process_deductions();
        compact(&cursor);
        return maxrows_ - nrows_ >= reserve_slack_;
    }

    bool fill_subgroup()
    {
        for (const auto& s : subgens_) {
            // coset 0 never dies and keeps index 0 through compaction
            while (!scan_and_fill(0, s)) {
                Row cur = 0;
                if (!recover(cur)) return false;
            }
            if (felsch_) process_deductions();
        }
        return true;
    }

    bool run_hlt()
    {
        if (!fill_subgroup()) return false;
        Row c = 0;
        while (c < nrows_) {
            if (!alive(c)) {
                ++c;
                continue;
            }
            bool restart = false;
            for (const auto& r : rels_) {
                if (!alive(c)) break;
                if (!scan_and_fill(c, r)) {
                    if (!recover(c)) return false;
                    restart = true;
                    break;
                }
            }
            if (restart) continue;
            if (!alive(c)) {
                ++c;
                continue;
            }
            for (int x = 0; x < ncols_ && !restart; ++x) {
                if (at(c, x) != kUndef) continue;
                Row d;
                if (define(c, x, d) == DefResult::NoSpace) {
                    if (!recover(c)) return false;
                    restart = true;
                }
            }
            if (restart) continue;
            ++c;
        }
        return final_check_hlt();
    }

    // After the sweep every live row is complete and closed; rescan once to be certain.
    bool final_check_hlt()
    {
        for (;;) {
            bool changed = false;
            for (Row c = 0; c < nrows_; ++c) {
                if (!alive(c)) continue;
                for (int x = 0; x < ncols_; ++x)
                    if (at(c, x) == kUndef) return run_hlt();
                for (const auto& r : rels_) {
                    if (!alive(c)) break;
                    long long before = stats_.coincidences;
                    scan_and_close(c, r);
                    if (stats_.coincidences != before) changed = true;
                }
            }
            if (!changed) return true;
        }
    }


    void process_deductions()
    {
        while (!deductions_.empty()) {
            auto [c, x] = deductions_.back();
            deductions_.pop_back();
            if (!alive(c)) continue;
            Row d = at(c, x);
            if (d == kUndef) continue;
            for (const auto& w : conj_[x]) {
                if (!alive(c)) break;
                scan_and_close(c, w);
            }
            if (!alive(d)) d = rep(d);
            for (const auto& w : conj_[x ^ 1]) {
                if (!alive(d)) break;
                scan_and_close(d, w);
            }
        }
    }

    bool run_felsch()
    {
        if (!fill_subgroup()) return false;
        process_deductions();
        Row c = 0;
        int x = 0;
        for (;;) {
            while (c < nrows_ && (!alive(c) || at(c, x) != kUndef)) {
                if (!alive(c) || ++x == ncols_) {
                    x = 0;
                    ++c;
                }
            }
            if (c >= nrows_) {
                // rows behind the cursor can reopen during coincidence processing
                Row g = first_gap();
                if (g < 0) return true;
                c = g;
                x = 0;
                continue;
            }
            Row d;
            if (define(c, x, d) == DefResult::NoSpace) {
                if (!recover(c)) return false;
                x = 0;
                continue;
            }
            process_deductions();
        }
    }

    Row first_gap()
    {
        for (Row c = 0; c < nrows_; ++c) {
            if (!alive(c)) continue;
            for (int x = 0; x < ncols_; ++x)
                if (at(c, x) == kUndef) return c;
        }
        return -1;
    }

    int ncols_;
    bool felsch_;
    Row maxrows_ = 0;
    long long cap_ = 0;
    Row reserve_slack_ = 1;
    std::vector<std::vector<int>> rels_;
    std::vector<std::vector<int>> subgens_;
    std::vector<std::vector<std::vector<int>>> conj_;
    std::vector<Row> tab_;
    std::vector<Row> fwd_;
    std::vector<Row> queue_;
    std::vector<std::pair<Row, int>> deductions_;
    Row nrows_ = 0;
    long long live_ = 0;
    EnumerationStats stats_;
};

}  // namespace

CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgroup, const EnumerationOptions& options)
{
    if (p.rank() == 0) {
        CosetTable t;
        t.status = CosetTable::Status::Complete;
        t.cap = options.cap;
        t.columns = 0;
        return t;
    }
    for (const Word& w : p.relators)
        for (int l : w)
            if (letter_gen(l) >= p.rank()) throw std::out_of_range("relator letter outside the alphabet");
    for (const Word& w : subgroup)
        for (int l : w)
            if (letter_gen(l) >= p.rank()) throw std::out_of_range("subgroup letter outside the alphabet");
    return Enumerator(p, subgroup, options).run();
}

bool verify_table(const Presentation& p, const std::vector<Word>& subgroup, const CosetTable& t)
{
    if (!t.complete()) return false;
    if (t.columns == 0) return true;
    long long n = t.index();
    for (long long c = 0; c < n; ++c)
        for (int x = 0; x < t.columns; ++x) {
            int d = t.data[c * t.columns + x];
            if (d < 0 || d >= n) return false;
            if (t.data[static_cast<long long>(d) * t.columns + (x ^ 1)] != c) return false;
        }
    for (const Word& r : p.relators)
        for (long long c = 0; c < n; ++c)
            if (t.act_word(static_cast<int>(c), r) != c) return false;
    for (const Word& s : subgroup)
        if (t.act_word(0, s) != 0) return false;
    return true;
}

OrderResult group_order(const Presentation& p, const EnumerationOptions& options)
{
    CosetTable t = enumerate(p, {}, options);
    if (!t.complete()) return OrderResult::exceeds(options.cap);
    return OrderResult::finite(t.index());
}

OrderResult element_order(const Presentation& p, const Word& w, const EnumerationOptions& options)
{
    CosetTable t = enumerate(p, {}, options);
    if (!t.complete()) return OrderResult::exceeds(options.cap);
    if (t.columns == 0) return OrderResult::finite(1);
    // the regular action is free, so the cycle through coset 0 has the order's length
    long long n = 1;
    int c = t.act_word(0, w);
    while (c != 0) {
        c = t.act_word(c, w);
        ++n;
    }
    return OrderResult::finite(n);
}

TriState words_equal(const Presentation& p, const Word& u, const Word& v, const EnumerationOptions& options)
{
    Word d = free_reduce(concat(u, inverse(v)));
    if (d.empty()) return TriState::Yes;
    CoefficientGroup as_group = CoefficientGroup::presented(p.generators, p.relators);
    if (auto fpc = FreeProductOfCyclics::recognise(as_group)) return tri(fpc->is_trivial(d));
    CosetTable t = enumerate(p, {}, options);
    if (!t.complete()) return TriState::Unknown;
    return tri(t.act_word(0, d) == 0);
}

Presentation as_presentation(const CoefficientGroup& G)
{
    return Presentation{G.generators, G.relators};
}

Word lift_word(const RelativePresentation& p, const FreeProductWord& w)
{
    int offset = static_cast<int>(p.coeff.generators.size());
    Word out;
    for (const Syllable& s : w.syllables) {
        for (int l : s.word) {
            if (s.is_coefficient())
                out.push_back(l);
            else
                out.push_back(l > 0 ? l + offset : l - offset);
        }
    }
    return out;
}

Presentation lift(const RelativePresentation& p)
{
    Presentation out;
    out.generators = p.coeff.generators;
    out.generators.insert(out.generators.end(), p.x_gens.begin(), p.x_gens.end());
    out.relators = p.coeff.relators;
    for (const FreeProductWord& r : p.relators) out.relators.push_back(lift_word(p, r));
    return out;
}

}  // namespace asph
