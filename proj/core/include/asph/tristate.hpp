#pragma once

namespace asph {

enum class TriState { No, Yes, Unknown };

constexpr TriState tri(bool b) { return b ? TriState::Yes : TriState::No; }

constexpr TriState operator!(TriState a)
{
    if (a == TriState::Unknown) return a;
    return a == TriState::Yes ? TriState::No : TriState::Yes;
}

constexpr TriState operator&&(TriState a, TriState b)
{
    if (a == TriState::No || b == TriState::No) return TriState::No;
    if (a == TriState::Yes && b == TriState::Yes) return TriState::Yes;
    return TriState::Unknown;
}

constexpr TriState operator||(TriState a, TriState b)
{
    if (a == TriState::Yes || b == TriState::Yes) return TriState::Yes;
    if (a == TriState::No && b == TriState::No) return TriState::No;
    return TriState::Unknown;
}

constexpr bool is_yes(TriState a) { return a == TriState::Yes; }
constexpr bool is_no(TriState a) { return a == TriState::No; }
constexpr bool is_unknown(TriState a) { return a == TriState::Unknown; }

constexpr const char* to_string(TriState a)
{
    switch (a) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    default: return "unknown";
    }
}

}  // namespace asph
