#include "brauerkit/palette.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "brauerkit/errors.hpp"

namespace brauerkit {

Palette Palette::make(const std::vector<Label>& colours, const std::vector<std::pair<Label, Label>>& omega_pairs) {
    Palette p;
    std::set<Label> seen;
    for (const auto& c : colours) {
        if (c.find(',') != std::string::npos) throw Error(ErrorCode::InvalidParameter, "colour names may not contain ','");
        if (!seen.insert(c).second) throw Error(ErrorCode::DuplicateLabel, c);
        p.omega_[c] = c;
    }
    for (const auto& [a, b] : omega_pairs) {
        if (!seen.count(a) || !seen.count(b)) throw Error(ErrorCode::PaletteMismatch, "omega on unknown colour");
        if (p.omega_[a] != a || p.omega_[b] != b) throw Error(ErrorCode::DuplicateLabel, "omega given twice for " + a);
        p.omega_[a] = b;
        p.omega_[b] = a;
    }
    p.colours_.assign(seen.begin(), seen.end());
    return p;
}

const Label& Palette::omega(const Label& c) const {
    auto it = omega_.find(c);
    if (it == omega_.end()) throw Error(ErrorCode::PaletteMismatch, "colour " + c + " not in palette");
    return it->second;
}

Word Palette::omega(const Word& w) const {
    Word out;
    for (const auto& c : w) out.push_back(omega(c));
    return out;
}

const Label& Palette::orbit(const Label& c) const {
    const Label& w = omega(c);
    return std::min(w, omega_.find(c)->first);
}

std::vector<Label> Palette::orbits() const {
    std::vector<Label> out;
    for (const auto& c : colours_)
        if (orbit(c) == c) out.push_back(c);
    return out;
}

Palette monochrome_palette(const Label& c) { return Palette::make({c}, {}); }

Palette oriented_palette() { return Palette::make({"+", "-"}, {{"+", "-"}}); }

Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Json to_json(const Palette& p) {
    Json omega = Json::array();
    for (const auto& c : p.colours())
        if (c < p.omega(c)) omega.push_back({c, p.omega(c)});
    return {{"colours", p.colours()}, {"omega", omega}};
}

Palette palette_from_json(const Json& j) {
    std::vector<std::pair<Label, Label>> pairs;
    if (j.contains("omega"))
        for (const auto& e : j.at("omega")) {
            if (e.at(0) == e.at(1)) continue;
            pairs.emplace_back(e.at(0).get<Label>(), e.at(1).get<Label>());
        }
    return Palette::make(j.at("colours").get<std::vector<Label>>(), pairs);
}

Json word_to_json(const Word& w) { return Json(w); }

Word word_from_json(const Json& j) {
    if (j.is_string()) return parse_word_key(j.get<std::string>());
    return j.get<Word>();
}

std::string word_key(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += w[i];
    }
    return out;
}

Word parse_word_key(const std::string& key) {
    Word w;
    if (key.empty()) return w;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(item);
    if (!key.empty() && key.back() == ',') w.push_back("");
    return w;
}

}  // namespace brauerkit
