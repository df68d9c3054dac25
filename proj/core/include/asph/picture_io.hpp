#pragma once

#include "asph/pictures.hpp"
#include "asph/words.hpp"

#include <string>

namespace asph {

struct PictureDocument {
    RelativePresentation presentation;
    Picture picture;
};

// {"presentation": "...", "discs":[{"boundary":[{"arc":id,"end":0|1}, {"corner":"<G-word>"}, ...]}],
//  "arcs":[{"label":"x","orient":1}], "outer":[{"arc":id,"end":e}, ...], "annular":{"disc":i,"corner":j}}
// Throws std::invalid_argument (or ParseError for words) on malformed input.
PictureDocument read_picture_json(const std::string& text);
// Corner labels are resolved against p; the document then needs no "presentation" key.
Picture read_picture_json(const std::string& text, const RelativePresentation& p);
std::string write_picture_json(const RelativePresentation& p, const Picture& pic);

}  // namespace asph
