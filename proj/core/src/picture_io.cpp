#include "asph/picture_io.hpp"

#include "asph/parser.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace asph {

namespace {

using nlohmann::json;

ArcEnd read_end(const json& j, const std::string& where)
{
    if (!j.is_object() || !j.contains("arc") || !j.contains("end"))
        throw std::invalid_argument(where + ": expected {\"arc\":id,\"end\":0|1}");
    return {j.at("arc").get<int>(), j.at("end").get<int>()};
}

Picture read_picture(const json& doc, const RelativePresentation& p)
{
    Picture pic;
    for (const json& a : doc.at("arcs")) {
        std::string label = a.at("label").get<std::string>();
        int orient = a.value("orient", 1);
        // "x^-1" is accepted and folded into the orientation
        if (label.size() > 3 && label.compare(label.size() - 3, 3, "^-1") == 0) {
            label.resize(label.size() - 3);
            orient = -orient;
        }
        auto it = std::find(p.x_gens.begin(), p.x_gens.end(), label);
        if (it == p.x_gens.end()) throw std::invalid_argument("arc label '" + label + "' is not an x-generator");
        pic.arcs.push_back({static_cast<int>(it - p.x_gens.begin()), orient});
    }
    int di = 0;
    for (const json& d : doc.at("discs")) {
        Disc disc;
        const std::string where = "disc " + std::to_string(di++);
        bool expect_arc = true;
        const json& seq = d.at("boundary");
        for (const json& item : seq) {
            if (item.contains("corner")) {
                if (expect_arc) throw std::invalid_argument(where + ": boundary must start with an arc and alternate");
                disc.corners.push_back(parse_coefficient_word(p.coeff, item.at("corner").get<std::string>()));
            } else {
                if (!expect_arc) {
                    // two arc-ends in a row meet at an unlabelled (trivial) corner
                    disc.corners.push_back({});
                }
                disc.arcs.push_back(read_end(item, where));
                expect_arc = false;
                continue;
            }
            expect_arc = true;
        }
        if (!expect_arc) disc.corners.push_back({});
        pic.discs.push_back(std::move(disc));
    }
    if (doc.contains("outer"))
        for (const json& e : doc.at("outer")) pic.outer.push_back(read_end(e, "outer"));
    if (doc.contains("annular")) {
        const json& a = doc.at("annular");
        pic.annular = CornerRef{a.at("disc").get<int>(), a.at("corner").get<int>()};
    }
    check_structure(pic, static_cast<int>(p.x_gens.size()));
    return pic;
}

json parse_document(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("picture JSON: ") + e.what());
    }
}

}  // namespace

PictureDocument read_picture_json(const std::string& text)
{
    json doc = parse_document(text);
    if (!doc.contains("presentation")) throw std::invalid_argument("picture JSON needs a \"presentation\" string");
    PictureDocument out;
    out.presentation = parse_presentation(doc.at("presentation").get<std::string>());
    try {
        out.picture = read_picture(doc, out.presentation);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("picture JSON: ") + e.what());
    }
    return out;
}

Picture read_picture_json(const std::string& text, const RelativePresentation& p)
{
    json doc = parse_document(text);
    try {
        return read_picture(doc, p);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("picture JSON: ") + e.what());
    }
}

std::string write_picture_json(const RelativePresentation& p, const Picture& pic)
{
    json doc;
    doc["presentation"] = p.to_text();
    json arcs = json::array();
    for (const Arc& a : pic.arcs) arcs.push_back({{"label", p.x_gens.at(a.x)}, {"orient", a.orient}});
    json discs = json::array();
    for (const Disc& d : pic.discs) {
        json seq = json::array();
        for (int i = 0; i < d.degree(); ++i) {
            seq.push_back({{"arc", d.arcs[i].arc}, {"end", d.arcs[i].end}});
            seq.push_back({{"corner", format_word(d.corners[i], p.coeff.generators)}});
        }
        discs.push_back({{"boundary", seq}});
    }
    json outer = json::array();
    for (ArcEnd e : pic.outer) outer.push_back({{"arc", e.arc}, {"end", e.end}});
    doc["discs"] = discs;
    doc["arcs"] = arcs;
    doc["outer"] = outer;
    if (pic.annular) doc["annular"] = {{"disc", pic.annular->disc}, {"corner", pic.annular->corner}};
    return doc.dump(2);
}

}  // namespace asph
