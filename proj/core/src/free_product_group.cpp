#include "asph/free_product_group.hpp"

#include <numeric>
#include <stdexcept>

namespace asph {

FreeProductOfCyclics::FreeProductOfCyclics(std::vector<long long> factor_orders)
    : orders_(std::move(factor_orders))
{
    for (long long n : orders_)
        if (n < 0) throw std::invalid_argument("negative factor order");
}

std::optional<FreeProductOfCyclics> FreeProductOfCyclics::recognise(const CoefficientGroup& G)
{
    std::vector<long long> orders(G.generators.size(), 0);
    for (const Word& raw : G.relators) {
        Word r = cyclic_free_reduce(raw);
        if (r.empty()) continue;
        int gen = letter_gen(r.front());
        for (int l : r)
            if (letter_gen(l) != gen) return std::nullopt;
        long long e = exponent_sum(r, gen);
        orders[gen] = std::gcd(orders[gen], e < 0 ? -e : e);
    }
    return FreeProductOfCyclics(std::move(orders));
}

bool FreeProductOfCyclics::torsion_free() const
{
    for (long long n : orders_)
        if (n > 1) return false;
    return true;
}

bool FreeProductOfCyclics::finite() const
{
    int nontrivial = 0;
    for (long long n : orders_) {
        if (n == 0) return false;
        if (n > 1) ++nontrivial;
    }
    return nontrivial <= 1;
}

std::optional<long long> FreeProductOfCyclics::group_order() const
{
    if (!finite()) return std::nullopt;
    long long order = 1;
    for (long long n : orders_)
        if (n > 1) order = n;
    return order;
}

namespace {

long long normalise(long long e, long long n)
{
    if (n == 0) return e;
    e %= n;
    if (e < 0) e += n;
    return e;
}

}  // namespace

FreeProductOfCyclics::NormalForm FreeProductOfCyclics::normal_form(const Word& w) const
{
    NormalForm nf;
    for (int l : w) {
        int gen = letter_gen(l);
        if (gen < 0 || gen >= static_cast<int>(orders_.size()))
            throw std::out_of_range("letter outside the coefficient alphabet");
        long long n = orders_[gen];
        if (n == 1) continue;
        long long step = l > 0 ? 1 : -1;
        if (!nf.empty() && nf.back().first == gen) {
            long long e = normalise(nf.back().second + step, n);
            if (e == 0)
                nf.pop_back();
            else
                nf.back().second = e;
        } else {
            nf.emplace_back(gen, normalise(step, n));
        }
    }
    return nf;
}

Word FreeProductOfCyclics::to_word(const NormalForm& nf) const
{
    Word w;
    for (auto [gen, e] : nf) {
        Word p = word_power(Word{letter(gen)}, e);
        w.insert(w.end(), p.begin(), p.end());
    }
    return w;
}

bool FreeProductOfCyclics::equal(const Word& u, const Word& v) const
{
    return is_trivial(concat(u, inverse(v)));
}

std::optional<long long> FreeProductOfCyclics::order(const Word& w) const
{
    NormalForm nf = normal_form(w);
    while (nf.size() >= 2 && nf.front().first == nf.back().first) {
        int gen = nf.front().first;
        long long e = normalise(nf.front().second + nf.back().second, orders_[gen]);
        nf.pop_back();
        if (e == 0)
            nf.erase(nf.begin());
        else
            nf.front().second = e;
    }
    if (nf.empty()) return 1;
    if (nf.size() > 1) return std::nullopt;
    long long n = orders_[nf.front().first];
    if (n == 0) return std::nullopt;
    return n / std::gcd(n, nf.front().second);
}

}  // namespace asph
