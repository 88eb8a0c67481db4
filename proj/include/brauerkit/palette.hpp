#pragma once

#include <map>
#include <vector>

#include "brauerkit/json_fwd.hpp"
#include "brauerkit/label.hpp"

namespace brauerkit {

// A finite colour set with an involution (fixed points allowed).
class Palette {
public:
    Palette() = default;
    // Pairs list the non-trivial orbits of omega; unlisted colours are fixed.
    static Palette make(const std::vector<Label>& colours, const std::vector<std::pair<Label, Label>>& omega_pairs);

    const std::vector<Label>& colours() const { return colours_; }
    bool contains(const Label& c) const { return omega_.count(c) != 0; }
    const Label& omega(const Label& c) const;
    Word omega(const Word& w) const;
    // The least colour in the orbit of c.
    const Label& orbit(const Label& c) const;
    std::vector<Label> orbits() const;

    bool operator==(const Palette&) const = default;

private:
    std::vector<Label> colours_;
    std::map<Label, Label> omega_;
};

Palette monochrome_palette(const Label& c = "c");
// {+, -} with omega swapping the two.
Palette oriented_palette();

Word reversed(Word w);
Word concat(Word a, const Word& b);

Json to_json(const Palette& p);
Palette palette_from_json(const Json& j);
Json word_to_json(const Word& w);
// Words are written as JSON arrays or as comma separated strings ("" is the empty word).
Word word_from_json(const Json& j);
std::string word_key(const Word& w);
Word parse_word_key(const std::string& key);

}  // namespace brauerkit
