#include "asph/coefficient_oracle.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace asph {

TriState ElementOrder::equals(long long n) const
{
    switch (kind) {
    case Kind::Finite: return tri(value == n);
    case Kind::Infinite: return TriState::No;
    default: return TriState::Unknown;
    }
}

TriState ElementOrder::greater_than(long long n) const
{
    switch (kind) {
    case Kind::Finite: return tri(value > n);
    case Kind::Infinite: return TriState::Yes;
    default: return TriState::Unknown;
    }
}

std::string ElementOrder::to_string() const
{
    switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::Infinite: return "infinite";
    default: return "unknown";
    }
}

std::optional<FiniteGroupModel> FiniteGroupModel::build(const CoefficientGroup& G, long long cap)
{
    FiniteGroupModel m;
    m.rank_ = static_cast<int>(G.generators.size());
    if (m.rank_ == 0) {
        m.reps_.push_back({});
        m.inverse_.push_back(0);
        return m;
    }
    EnumerationOptions opt;
    opt.cap = cap;
    CosetTable t = enumerate(as_presentation(G), {}, opt);
    if (!t.complete()) return std::nullopt;

    // relabel in breadth-first order so representatives are shortlex minimal
    const int cols = t.columns;
    const long long n = t.index();
    std::vector<int> label(n, -1);
    std::vector<int> order;
    order.reserve(n);
    std::vector<Word> reps(n);
    label[0] = 0;
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int c = order[i];
        for (int col = 0; col < cols; ++col) {
            int d = t.data[static_cast<std::size_t>(c) * cols + col];
            if (label[d] >= 0) continue;
            label[d] = static_cast<int>(order.size());
            order.push_back(d);
            reps[d] = reps[c];
            reps[d].push_back(col % 2 == 0 ? letter(col / 2) : letter(col / 2, true));
        }
    }
    m.table_.assign(static_cast<std::size_t>(n) * cols, 0);
    m.reps_.resize(n);
    for (long long c = 0; c < n; ++c) {
        int e = label[c];
        m.reps_[e] = std::move(reps[c]);
        for (int col = 0; col < cols; ++col)
            m.table_[static_cast<std::size_t>(e) * cols + col] = label[t.data[static_cast<std::size_t>(c) * cols + col]];
    }
    m.inverse_.resize(n);
    for (long long e = 0; e < n; ++e) m.inverse_[e] = m.element_of(asph::inverse(m.reps_[e]));
    return m;
}

int FiniteGroupModel::act(int element, int l) const
{
    int col = l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1;
    if (col >= 2 * rank_) throw std::out_of_range("letter outside the coefficient alphabet");
    return table_[static_cast<std::size_t>(element) * 2 * rank_ + col];
}

int FiniteGroupModel::element_of(const Word& w) const
{
    int e = 0;
    for (int l : w) e = act(e, l);
    return e;
}

int FiniteGroupModel::multiply(int a, int b) const
{
    for (int l : reps_[b]) a = act(a, l);
    return a;
}

int FiniteGroupModel::inverse(int a) const { return inverse_[a]; }

long long FiniteGroupModel::element_order(int a) const
{
    long long n = 1;
    for (int e = a; e != 0; e = multiply(e, a)) ++n;
    return n;
}

bool FiniteGroupModel::abelian() const
{
    for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j)
            if (element_of({letter(i), letter(j)}) != element_of({letter(j), letter(i)})) return false;
    return true;
}

CoefficientOracle::CoefficientOracle(CoefficientGroup G, long long cap) : G_(std::move(G)), cap_(cap)
{
    fpc_ = FreeProductOfCyclics::recognise(G_);
    if (fpc_) {
        backend_ = Backend::FreeProductOfCyclics;
        if (auto n = fpc_->group_order(); n && *n <= cap_) model_ = FiniteGroupModel::build(G_, cap_);
        return;
    }
    model_ = FiniteGroupModel::build(G_, cap_);
    backend_ = model_ ? Backend::Finite : Backend::Undecided;
}

TriState CoefficientOracle::is_trivial(const Word& w) const
{
    if (fpc_) return tri(fpc_->is_trivial(w));
    if (model_) return tri(model_->element_of(w) == 0);
    if (free_reduce(w).empty()) return TriState::Yes;
    return TriState::Unknown;
}

TriState CoefficientOracle::equal(const Word& u, const Word& v) const
{
    return is_trivial(concat(u, asph::inverse(v)));
}

TriState CoefficientOracle::commute(const Word& u, const Word& v) const
{
    return equal(concat(u, v), concat(v, u));
}

ElementOrder CoefficientOracle::order(const Word& w) const
{
    if (fpc_) {
        auto n = fpc_->order(w);
        return n ? ElementOrder::finite(*n) : ElementOrder::infinite();
    }
    if (model_) return ElementOrder::finite(model_->element_order(model_->element_of(w)));
    if (free_reduce(w).empty()) return ElementOrder::finite(1);
    return ElementOrder::unknown();
}

ElementOrder CoefficientOracle::group_order() const
{
    if (model_) return ElementOrder::finite(model_->order());
    if (fpc_) {
        auto n = fpc_->group_order();
        return n ? ElementOrder::finite(*n) : ElementOrder::infinite();
    }
    return ElementOrder::unknown();
}

TriState CoefficientOracle::torsion_free() const
{
    if (fpc_) return tri(fpc_->torsion_free());
    if (model_) return tri(model_->order() == 1);
    return TriState::Unknown;
}

TriState CoefficientOracle::in_cyclic_subgroup(const Word& v, const Word& u) const
{
    ElementOrder ou = order(u);
    if (ou.is_unknown()) return TriState::Unknown;
    long long bound;
    if (ou.is_finite()) {
        bound = ou.value;
    } else {
        // in a free product |nf(u^k)| grows at least linearly in |k|
        long long weight = 1;
        for (auto [gen, e] : fpc_->normal_form(v)) weight += 1 + std::llabs(e);
        bound = weight;
    }
    Word p;
    Word pinv;
    for (long long k = 0; k <= bound; ++k) {
        if (is_yes(equal(v, p)) || (ou.is_infinite() && is_yes(equal(v, pinv)))) return TriState::Yes;
        p = concat(p, u);
        pinv = concat(pinv, asph::inverse(u));
    }
    return TriState::No;
}

MuValue mu(const CoefficientOracle& oracle, const Word& g, const Word& h)
{
    MuValue out;
    for (const Word& w : {g, h, concat(g, inverse(h))}) {
        ElementOrder o = oracle.order(w);
        if (o.is_finite())
            out.value += Rational(1, o.value);
        else if (o.is_unknown())
            out.lower_bound_only = true;
    }
    return out;
}

}  // namespace asph
