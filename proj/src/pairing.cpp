#include "brauerkit/pairing.hpp"

#include <algorithm>
#include <set>

#include "brauerkit/errors.hpp"

namespace brauerkit {

Pairing Pairing::make(const std::vector<Label>& carrier,
                      const std::vector<std::pair<Label, Label>>& pairs) {
    std::set<Label> universe;
    for (const auto& x : carrier) {
        if (!universe.insert(x).second) throw Error(ErrorCode::DuplicateLabel, x);
    }
    Pairing p;
    for (const auto& [a, b] : pairs) {
        if (a == b) throw Error(ErrorCode::SelfPair, a);
        for (const auto* x : {&a, &b}) {
            if (!universe.count(*x)) throw Error(ErrorCode::UncoveredLabel, *x + " not in carrier");
            if (p.partner_.count(*x)) throw Error(ErrorCode::DuplicateLabel, *x + " paired twice");
        }
        p.partner_[a] = b;
        p.partner_[b] = a;
    }
    for (const auto& x : universe) {
        if (!p.partner_.count(x)) throw Error(ErrorCode::UncoveredLabel, x + " unpaired");
    }
    return p;
}

const Label& Pairing::apply(const Label& x) const {
    auto it = partner_.find(x);
    if (it == partner_.end()) throw Error(ErrorCode::UncoveredLabel, x);
    return it->second;
}

std::vector<Label> Pairing::carrier() const {
    std::vector<Label> out;
    out.reserve(partner_.size());
    for (const auto& kv : partner_) out.push_back(kv.first);
    return out;
}

std::vector<std::pair<Label, Label>> Pairing::orbits() const {
    std::vector<std::pair<Label, Label>> out;
    for (const auto& [a, b] : partner_) {
        if (a < b) out.emplace_back(a, b);
    }
    return out;
}

PairingComposite compose_pairings(const Pairing& p_xy, const Pairing& p_yz,
                                  const std::vector<Label>& shared) {
    std::set<Label> y(shared.begin(), shared.end());
    if (y.size() != shared.size()) throw Error(ErrorCode::SharedSetMismatch, "repeated shared label");
    for (const auto& l : y) {
        if (!p_xy.contains(l) || !p_yz.contains(l))
            throw Error(ErrorCode::SharedSetMismatch, l + " missing from one side");
    }
    std::vector<Label> x_side, z_side;
    for (const auto& l : p_xy.carrier())
        if (!y.count(l)) x_side.push_back(l);
    for (const auto& l : p_yz.carrier()) {
        if (y.count(l)) continue;
        if (p_xy.contains(l)) throw Error(ErrorCode::SharedSetMismatch, l + " on both outer sides");
        z_side.push_back(l);
    }

    std::set<Label> seen_y;
    std::vector<std::pair<Label, Label>> pairs;
    std::set<Label> done;
    // Walk an open chain starting at an outer label; `upper` says which involution to apply next.
    auto walk = [&](const Label& start, bool upper) {
        Label cur = start;
        while (true) {
            cur = upper ? p_xy.apply(cur) : p_yz.apply(cur);
            if (!y.count(cur)) return cur;
            seen_y.insert(cur);
            upper = !upper;
        }
    };
    for (const auto& x : x_side) {
        if (done.count(x)) continue;
        Label end = walk(x, true);
        done.insert(x);
        done.insert(end);
        pairs.emplace_back(x, end);
    }
    for (const auto& z : z_side) {
        if (done.count(z)) continue;
        Label end = walk(z, false);
        done.insert(z);
        done.insert(end);
        pairs.emplace_back(z, end);
    }

    std::size_t closed = 0;
    for (const auto& l : y) {
        if (seen_y.count(l)) continue;
        ++closed;
        Label cur = l;
        bool upper = true;
        do {
            seen_y.insert(cur);
            cur = upper ? p_xy.apply(cur) : p_yz.apply(cur);
            upper = !upper;
        } while (cur != l || !upper);
    }

    std::vector<Label> carrier = x_side;
    carrier.insert(carrier.end(), z_side.begin(), z_side.end());
    return {Pairing::make(carrier, pairs), closed};
}

Json to_json(const Pairing& p) {
    Json pairs = Json::array();
    for (const auto& [a, b] : p.orbits()) pairs.push_back({a, b});
    return {{"carrier", p.carrier()}, {"pairs", pairs}};
}

Pairing pairing_from_json(const Json& j) {
    std::vector<std::pair<Label, Label>> pairs;
    for (const auto& e : j.at("pairs")) pairs.emplace_back(e.at(0).get<Label>(), e.at(1).get<Label>());
    return Pairing::make(j.at("carrier").get<std::vector<Label>>(), pairs);
}

}  // namespace brauerkit
