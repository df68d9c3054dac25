#include "asph/lifted.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace asph {

namespace {

using Matrix = std::vector<std::vector<long long>>;

void swap_cols(Matrix& a, std::size_t i, std::size_t j)
{
    for (auto& row : a) std::swap(row[i], row[j]);
}

// Integer row/column reduction to diagonal form; the diagonal is then normalised by gcd/lcm.
std::vector<long long> smith_diagonal(Matrix a, std::size_t cols)
{
    std::vector<long long> diag;
    std::size_t rows = a.size();
    std::size_t t = 0;
    for (; t < rows && t < cols; ++t) {
        // pivot: smallest nonzero absolute value in the remaining block
        for (;;) {
            std::size_t pr = rows, pc = cols;
            long long best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                        best = std::llabs(a[i][j]);
                        pr = i;
                        pc = j;
                    }
            if (best == 0) goto done;
            std::swap(a[t], a[pr]);
            swap_cols(a, t, pc);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                long long q = a[i][t] / a[t][t];
                if (q)
                    for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t]) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                long long q = a[t][j] / a[t][t];
                if (q)
                    for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j]) clean = false;
            }
            if (clean) break;
        }
        diag.push_back(std::llabs(a[t][t]));
    }
done:
    for (std::size_t i = diag.size(); i < cols; ++i) diag.push_back(0);
    // enforce the divisibility chain
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            long long a0 = diag[i], b0 = diag[j];
            long long g = std::gcd(a0, b0);
            long long l = (a0 == 0 || b0 == 0) ? 0 : a0 / g * b0;
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

// Element of G obtained by sending x-generators to the given elements.
int evaluate(const FiniteGroupModel& m, const FreeProductWord& r, const std::vector<int>& images)
{
    int e = 0;
    for (const Syllable& s : r.syllables) {
        if (s.is_coefficient()) {
            for (int l : s.word) e = m.act(e, l);
        } else {
            for (int l : s.word) {
                int img = images[letter_gen(l)];
                e = m.multiply(e, l > 0 ? img : m.inverse(img));
            }
        }
    }
    return e;
}

std::optional<std::vector<int>> find_retraction(const FiniteGroupModel& m, const RelativePresentation& p)
{
    const std::size_t nx = p.x_gens.size();
    long long combos = 1;
    for (std::size_t i = 0; i < nx; ++i) {
        combos *= m.order();
        if (combos > 1'000'000) return std::nullopt;
    }
    std::vector<int> images(nx, 0);
    for (long long c = 0; c < combos; ++c) {
        long long v = c;
        for (std::size_t i = 0; i < nx; ++i) {
            images[i] = static_cast<int>(v % m.order());
            v /= m.order();
        }
        bool ok = true;
        for (const FreeProductWord& r : p.relators)
            if (evaluate(m, r, images) != 0) {
                ok = false;
                break;
            }
        if (ok) return images;
    }
    return std::nullopt;
}

}  // namespace

std::vector<long long> abelian_invariants(const Presentation& p)
{
    const std::size_t cols = p.generators.size();
    Matrix a;
    for (const Word& r : p.relators) {
        std::vector<long long> row(cols, 0);
        for (int l : r) row[letter_gen(l)] += l > 0 ? 1 : -1;
        if (std::any_of(row.begin(), row.end(), [](long long v) { return v != 0; })) a.push_back(std::move(row));
    }
    std::vector<long long> d = smith_diagonal(std::move(a), cols);
    std::vector<long long> out;
    for (long long v : d)
        if (v != 1) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

LiftedOrder lifted_group_order(const RelativePresentation& p, const CoefficientOracle& oracle,
                               const EnumerationOptions& options)
{
    LiftedOrder out;
    Presentation lifted = lift(p);
    if (const FiniteGroupModel* m = oracle.finite_model()) {
        if (find_retraction(*m, p)) {
            std::vector<Word> sub;
            for (std::size_t i = 0; i < p.coeff.generators.size(); ++i) sub.push_back({letter(static_cast<int>(i))});
            CosetTable t = enumerate(lifted, sub, options);
            out.used_retraction = true;
            if (!t.complete()) {
                out.order = OrderResult::exceeds(options.cap);
                return out;
            }
            out.coefficient_index = t.index();
            out.order = OrderResult::finite(t.index() * m->order());
            return out;
        }
    }
    out.order = group_order(lifted, options);
    return out;
}

TriState lift_isomorphism(const RelativePresentation& p, const CoefficientOracle& oracle,
                          const EnumerationOptions& options)
{
    if (abelian_invariants(lift(p)) != abelian_invariants(as_presentation(p.coeff))) return TriState::No;
    ElementOrder n = oracle.group_order();
    if (!n.is_finite()) return TriState::Unknown;
    std::vector<Word> sub;
    for (std::size_t i = 0; i < p.coeff.generators.size(); ++i) sub.push_back({letter(static_cast<int>(i))});
    Presentation lifted = lift(p);
    CosetTable t = enumerate(lifted, sub, options);
    if (!t.complete()) return TriState::Unknown;
    if (t.index() != 1) return TriState::No;
    // G maps onto G(P); equal orders make the surjection injective
    OrderResult N = lifted_group_order(p, oracle, options).order;
    if (!N.is_finite()) return TriState::Unknown;
    return tri(N.value == n.value);
}

}  // namespace asph
