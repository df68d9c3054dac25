#include "asph/table1.hpp"

#include "asph/parser.hpp"

#include <numeric>

namespace asph {

namespace {

long long mod(long long a, long long n)
{
    a %= n;
    return a < 0 ? a + n : a;
}

LengthFourInstance presented(const std::string& text, const std::string& g, const std::string& h, int l, int k)
{
    // text is a coefficient group "<...>"; reuse the relative parser with a dummy relator
    RelativePresentation p = parse_presentation("group " + text + "; x; rel x");
    LengthFourInstance inst;
    inst.G = p.coeff;
    inst.g = parse_coefficient_word(p.coeff, g);
    inst.h = parse_coefficient_word(p.coeff, h);
    inst.l = l;
    inst.k = k;
    return inst;
}

std::vector<Table1Fixture> build()
{
    std::vector<Table1Fixture> out;
    auto cell = [&](std::string row, std::string col, long long n, long long a, long long b, int l, int k,
                    std::optional<long long> order, std::string ref, bool open = false, bool extended = false) {
        Table1Fixture f;
        f.id = row + " " + col;
        f.row = std::move(row);
        f.column = std::move(col);
        f.instance = LengthFourInstance::cyclic(n, a, b, l, k);
        f.order = order;
        f.open = open;
        f.extended = extended;
        f.reference = std::move(ref);
        out.push_back(std::move(f));
    };
    // column conventions over Z_n = <t>, h = t:  K5 g = t^2 (n = 5), K6+ g = t^2, K6- g = t^-2, L6 g = t^3
    cell("{2,1}", "K5", 5, 2, 1, 2, 1, 165, "BP");
    cell("{2,1}", "K6+", 6, 2, 1, 2, 1, 378, "BP");
    cell("{2,1}", "K6-", 6, 4, 1, 2, 1, 342, "BP");
    cell("{2,1}", "L6", 6, 3, 1, 2, 1, 342, "BP");
    cell("{3,1}", "K5", 5, 2, 1, 3, 1, 1100, "BBP");
    cell("{3,1}", "K6+", 6, 2, 1, 3, 1, std::nullopt, "BBP", true);
    cell("{3,1}", "K6-", 6, 4, 1, 3, 1, std::nullopt, "BBP", true);
    cell("{3,1}", "L6", 6, 3, 1, 3, 1, 24530688, "BBP", false, true);
    cell("{4,1}", "K5", 5, 2, 1, 4, 1, 3775, "HM");
    cell("{4,1}", "K6+", 6, 2, 1, 4, 1, std::nullopt, "HM", true);
    cell("{4,1}", "K6-", 6, 4, 1, 4, 1, std::nullopt, "HM", true);
    cell("{4,1}", "L6", 6, 3, 1, 4, 1, std::nullopt, "HM", true);
    cell("{3,2}", "K5", 5, 2, 1, 3, 2, 2525, "HM");
    cell("{3,2}", "K6+", 6, 2, 1, 3, 2, std::nullopt, "HM", true);
    cell("{3,2}", "K6-", 6, 4, 1, 3, 2, std::nullopt, "HM", true);
    cell("{3,2}", "L6", 6, 3, 1, 3, 2, std::nullopt, "HM", true);
    for (const char* col : {"K5", "K6+", "K6-", "L6"}) {
        std::string c = col;
        long long n = c == "K5" ? 5 : 6;
        long long a = c == "K6-" ? 4 : c == "L6" ? 3 : 2;
        cell("{n,1}", c, n, a, 1, 5, 1, std::nullopt, "AE14", true);
        cell("{l,k}", c, n, a, 1, 5, 2, std::nullopt, "AEJ17", true);
    }
    cell("{2,-1}", "K5", 5, 2, 1, 2, -1, 55, "ECap");
    cell("{2,-1}", "K6+", 6, 2, 1, 2, -1, 336, "ECap");
    // infinite: a virtual three-manifold group
    cell("{2,-1}", "K6-", 6, 4, 1, 2, -1, std::nullopt, "ECap");
    cell("{2,-1}", "L6", 6, 3, 1, 2, -1, 54, "ECap");
    cell("{3,-1}", "K5", 5, 2, 1, 3, -1, 110, "AAE14");
    cell("{3,-1}", "K6+", 6, 2, 1, 3, -1, std::nullopt, "AAE14", true);
    cell("{3,-1}", "K6-", 6, 4, 1, 3, -1, std::nullopt, "AAE14", true);
    cell("{3,-1}", "L6", 6, 3, 1, 3, -1, 9072, "AAE14");

    Table1Fixture a;
    a.id = "example (a)";
    a.row = "example";
    a.column = "S3xZ3";
    a.instance = presented("<g, h | g^2, h^3, (g h)^2 (g^-1 h^-1)^2>", "g", "h", 2, -1);
    a.order = 27216;
    a.reference = "finite groups outside the listed cases";
    out.push_back(a);

    Table1Fixture b;
    b.id = "example (b)";
    b.row = "example";
    b.column = "Z3xZ3";
    b.instance = presented("<g, h | g^3, h^3, g h g^-1 h^-1>", "g", "h", 2, -1);
    b.order = 13608;
    b.reference = a.reference;
    out.push_back(b);

    cell("example", "Z8", 8, 2, 1, 2, -1, 2361960, "finite groups outside the listed cases");
    out.back().id = "example (c)";
    cell("example", "J4", 4, 1, 2, 4, -3, 4, "BW1");
    out.back().id = "example J4(1,-3)";
    return out;
}

}  // namespace

const std::vector<Table1Fixture>& table1_fixtures()
{
    static const std::vector<Table1Fixture> fixtures = build();
    return fixtures;
}

std::optional<long long> known_cyclic_order(long long n, int l, int k, long long a, long long b)
{
    a = mod(a, n);
    b = mod(b, n);
    for (const Table1Fixture& f : table1_fixtures()) {
        const LengthFourInstance& fi = f.instance;
        if (!f.order || fi.G.kind != CoefficientGroup::Kind::Cyclic || fi.G.cyclic_order != n || fi.l != l ||
            fi.k != k)
            continue;
        long long fa = mod(exponent_sum(fi.g, 0), n), fb = mod(exponent_sum(fi.h, 0), n);
        for (long long u = 1; u < n; ++u) {
            if (std::gcd(u, n) != 1) continue;
            if (mod(u * fa, n) == a && mod(u * fb, n) == b) return f.order;
            // for k > 0 the pair (g, h) is equivalent to (h^-1, g^-1)
            if (k > 0 && mod(-u * fb, n) == a && mod(-u * fa, n) == b) return f.order;
        }
    }
    return std::nullopt;
}

}  // namespace asph
