#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "brauerkit/json_fwd.hpp"

#include "brauerkit/label.hpp"

namespace brauerkit {

// Fixed-point-free involution on a finite labelled set.
class Pairing {
public:
    Pairing() = default;

    static Pairing make(const std::vector<Label>& carrier,
                        const std::vector<std::pair<Label, Label>>& pairs);

    const Label& apply(const Label& x) const;
    bool contains(const Label& x) const { return partner_.count(x) != 0; }
    std::size_t size() const { return partner_.size(); }
    bool empty() const { return partner_.empty(); }

    std::vector<Label> carrier() const;
    // Orbits as (least, greatest), sorted by least label.
    std::vector<std::pair<Label, Label>> orbits() const;

    bool operator==(const Pairing&) const = default;

private:
    std::map<Label, Label> partner_;
};

struct PairingComposite {
    Pairing result;
    std::size_t closed = 0;
};

// Stack p_xy on top of p_yz along the shared labels.
PairingComposite compose_pairings(const Pairing& p_xy, const Pairing& p_yz,
                                  const std::vector<Label>& shared);

Json to_json(const Pairing& p);
Pairing pairing_from_json(const Json& j);

}  // namespace brauerkit
