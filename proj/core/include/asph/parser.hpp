#pragma once

#include "asph/words.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace asph {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// group <g, h | g^2, h^3, (g h)^2 (g^-1 h^-1)^2>; x; rel x^2 g x^-1 h [; rel ...]
// Words are whitespace-separated tokens name, name^int, (word)^int or 1.  '#' starts a comment.
// Relators are returned unreduced.
RelativePresentation parse_presentation(std::string_view text);

Word parse_coefficient_word(const CoefficientGroup& G, std::string_view text);
FreeProductWord parse_relative_word(const RelativePresentation& p, std::string_view text);

}  // namespace asph
