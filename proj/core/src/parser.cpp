#include "asph/parser.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace asph {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{}

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view text) : s_(text) {}

    void skip_space()
    {
        for (;;) {
            while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
            if (pos_ < s_.size() && s_[pos_] == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') advance();
                continue;
            }
            return;
        }
    }

    bool at_end()
    {
        skip_space();
        return pos_ >= s_.size();
    }

    char peek()
    {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    // Next character without skipping whitespace; exponents must be attached to their base.
    char peek_raw() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    bool accept(char c)
    {
        if (peek() != c) return false;
        advance();
        return true;
    }

    void expect(char c, const char* what)
    {
        if (!accept(c)) fail(std::string("expected ") + what);
    }

    bool peek_name()
    {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string name()
    {
        if (!peek_name()) fail("expected a name");
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) advance();
        return std::string(s_.substr(start, pos_ - start));
    }

    bool peek_keyword(std::string_view kw)
    {
        skip_space();
        if (s_.substr(pos_, kw.size()) != kw) return false;
        std::size_t end = pos_ + kw.size();
        return end >= s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_');
    }

    void keyword(std::string_view kw)
    {
        if (!peek_keyword(kw)) fail("expected '" + std::string(kw) + "'");
        for (std::size_t i = 0; i < kw.size(); ++i) advance();
    }

    long long integer()
    {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) advance();
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) advance();
        std::string_view t = s_.substr(start, pos_ - start);
        if (!t.empty() && t.front() == '+') t.remove_prefix(1);
        long long v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size() || t.empty()) fail_at(start, "expected an integer");
        return v;
    }

    [[noreturn]] void fail(const std::string& msg)
    {
        skip_space();
        throw ParseError(msg, line_, col_);
    }

    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg)
    {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    std::size_t position() const { return pos_; }

private:
    void advance()
    {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

constexpr long long kMaxExpandedLength = 1'000'000;

// Parses a word over names; stops at any character that cannot start a factor.
Word parse_word(Lexer& lx, const std::vector<std::string>& names)
{
    Word out;
    for (;;) {
        char c = lx.peek();
        Word base;
        if (c == '(') {
            lx.accept('(');
            base = parse_word(lx, names);
            lx.expect(')', "')'");
        } else if (c == '1' ) {
            std::size_t at = lx.position();
            if (lx.integer() != 1) lx.fail_at(at, "only 1 may appear as a numeric factor");
            continue;
        } else if (lx.peek_name()) {
            std::size_t at = lx.position();
            std::string n = lx.name();
            int idx = -1;
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == n) idx = static_cast<int>(i);
            if (idx < 0) lx.fail_at(at, "unknown generator '" + n + "'");
            base = {letter(idx)};
        } else {
            return out;
        }
        long long e = 1;
        if (lx.peek_raw() == '^') {
            lx.accept('^');
            e = lx.integer();
        }
        if (static_cast<long long>(base.size()) * (e < 0 ? -e : e) + static_cast<long long>(out.size()) >
            kMaxExpandedLength)
            lx.fail("word too long");
        Word p = word_power(base, e);
        out.insert(out.end(), p.begin(), p.end());
    }
}

std::vector<std::string> name_list(Lexer& lx, char terminator)
{
    std::vector<std::string> names;
    while (lx.peek() != terminator) {
        std::size_t at = lx.position();
        std::string n = lx.name();
        for (const std::string& m : names)
            if (m == n) lx.fail_at(at, "duplicate generator '" + n + "'");
        names.push_back(n);
        lx.accept(',');
    }
    return names;
}

FreeProductWord split_syllables(const Word& w, int coefficient_rank)
{
    FreeProductWord out;
    for (int l : w) {
        bool coeff = letter_gen(l) < coefficient_rank;
        int local = coeff ? l : (l > 0 ? l - coefficient_rank : l + coefficient_rank);
        Syllable::Kind kind = coeff ? Syllable::Kind::Coefficient : Syllable::Kind::Free;
        if (out.syllables.empty() || out.syllables.back().kind != kind) out.syllables.push_back({kind, {}});
        out.syllables.back().word.push_back(local);
    }
    return out;
}

std::vector<std::string> joint_alphabet(const RelativePresentation& p)
{
    std::vector<std::string> all = p.coeff.generators;
    all.insert(all.end(), p.x_gens.begin(), p.x_gens.end());
    return all;
}

}  // namespace

RelativePresentation parse_presentation(std::string_view text)
{
    Lexer lx(text);
    lx.keyword("group");
    lx.expect('<', "'<'");
    std::vector<std::string> gens = name_list(lx, '|');
    lx.expect('|', "'|'");
    std::vector<Word> rels;
    while (lx.peek() != '>') {
        Word r = parse_word(lx, gens);
        char c = lx.peek();
        if (c != ',' && c != '>') lx.fail("expected ',' or '>' in relator list");
        rels.push_back(std::move(r));
        lx.accept(',');
    }
    lx.expect('>', "'>'");
    RelativePresentation p;
    p.coeff = CoefficientGroup::presented(gens, rels);
    lx.expect(';', "';' after the coefficient group");

    while (lx.peek() != ';' && !lx.at_end()) {
        std::size_t at = lx.position();
        std::string n = lx.name();
        if (p.coeff.generator_index(n) >= 0) lx.fail_at(at, "x-generator '" + n + "' clashes with a coefficient generator");
        for (const std::string& m : p.x_gens)
            if (m == n) lx.fail_at(at, "duplicate x-generator '" + n + "'");
        p.x_gens.push_back(n);
        lx.accept(',');
    }
    if (p.x_gens.empty()) lx.fail("expected at least one x-generator");

    std::vector<std::string> all = joint_alphabet(p);
    const int m = static_cast<int>(gens.size());
    while (lx.accept(';')) {
        if (lx.at_end()) break;
        lx.keyword("rel");
        Word w = parse_word(lx, all);
        char c = lx.peek();
        if (c != ';' && c != '\0') lx.fail("unexpected character in relator");
        p.relators.push_back(split_syllables(w, m));
    }
    if (!lx.at_end()) lx.fail("expected ';' or end of input");
    if (p.relators.empty()) lx.fail("expected at least one relator");
    return p;
}

Word parse_coefficient_word(const CoefficientGroup& G, std::string_view text)
{
    Lexer lx(text);
    Word w = parse_word(lx, G.generators);
    if (!lx.at_end()) lx.fail("unexpected character in coefficient word");
    return w;
}

FreeProductWord parse_relative_word(const RelativePresentation& p, std::string_view text)
{
    Lexer lx(text);
    Word w = parse_word(lx, joint_alphabet(p));
    if (!lx.at_end()) lx.fail("unexpected character in word");
    return split_syllables(w, static_cast<int>(p.coeff.generators.size()));
}

}  // namespace asph
