#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "brauerkit/json_fwd.hpp"

#include "brauerkit/pairing.hpp"

namespace brauerkit {

using BigInt = boost::multiprecision::cpp_int;

// Points 0..m-1 are the sources s_1..s_m, points m..m+n-1 the targets t_1..t_n.
class BrauerDiagram {
public:
    BrauerDiagram() = default;

    static BrauerDiagram from_partner(std::size_t m, std::size_t n, std::vector<std::uint32_t> partner,
                                      BigInt closed = 0);
    // Pairs of point indices.
    static BrauerDiagram from_pairs(std::size_t m, std::size_t n,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                    BigInt closed = 0);
    static BrauerDiagram from_pairing(std::size_t m, std::size_t n, const Pairing& p, BigInt closed = 0);

    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    std::size_t points() const { return partner_.size(); }
    std::size_t partner(std::size_t point) const { return partner_[point]; }
    const std::vector<std::uint32_t>& partners() const { return partner_; }
    const BigInt& closed() const { return closed_; }
    bool is_source(std::size_t point) const { return point < m_; }

    BrauerDiagram with_closed(BigInt k) const;
    BrauerDiagram open_part() const { return with_closed(0); }

    // (i, j) with i < j, sorted by i.
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
    Pairing pairing() const;

    bool operator==(const BrauerDiagram&) const = default;
    auto operator<=>(const BrauerDiagram& o) const {
        if (auto c = m_ <=> o.m_; c != 0) return c;
        if (auto c = n_ <=> o.n_; c != 0) return c;
        if (auto c = partner_ <=> o.partner_; c != 0) return c;
        if (closed_ < o.closed_) return std::strong_ordering::less;
        if (closed_ > o.closed_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    std::size_t m_ = 0;
    std::size_t n_ = 0;
    std::vector<std::uint32_t> partner_;
    BigInt closed_ = 0;
};

std::string point_label(std::size_t m, std::size_t point);

BrauerDiagram identity(std::size_t n);
// sigma[i] is the 0-based image of i; s_i is joined to t_{sigma(i)}.
BrauerDiagram from_permutation(const std::vector<std::size_t>& sigma);
// f first, then g.
BrauerDiagram compose(const BrauerDiagram& f, const BrauerDiagram& g);
// Number of closed cycles formed when stacking f on g, without the stored bubbles.
std::size_t new_loops(const BrauerDiagram& f, const BrauerDiagram& g);
// The closed cycles formed when stacking f on g, each as the list of shared points it passes through.
std::vector<std::vector<std::size_t>> loop_cycles(const BrauerDiagram& f, const BrauerDiagram& g);
BrauerDiagram tensor(const BrauerDiagram& f, const BrauerDiagram& g);
BrauerDiagram bubbles(BigInt k);

BrauerDiagram cup();
BrauerDiagram cap();
BrauerDiagram cup_n(std::size_t n);
BrauerDiagram cap_n(std::size_t n);

BrauerDiagram dual(const BrauerDiagram& f);
BrauerDiagram ev(const BrauerDiagram& f);
BrauerDiagram coev(const BrauerDiagram& f);

// Where each point of f lands under the three relabellings above.
std::vector<std::size_t> dual_relabelling(std::size_t m, std::size_t n);
std::vector<std::size_t> ev_relabelling(std::size_t m, std::size_t n);
std::vector<std::size_t> coev_relabelling(std::size_t m, std::size_t n);

bool is_open(const BrauerDiagram& f);
bool is_downward(const BrauerDiagram& f);
bool is_upward(const BrauerDiagram& f);
bool is_permutation(const BrauerDiagram& f);

std::vector<BrauerDiagram> enumerate_open(std::size_t m, std::size_t n);
BrauerDiagram random_diagram(std::mt19937_64& rng, std::size_t m, std::size_t n, unsigned max_closed = 0);

enum class Generator { Id1, Sigma2, Cup, Cap };

using Slice = std::vector<Generator>;
using GeneratorWord = std::vector<Slice>;

GeneratorWord factor_generators(const BrauerDiagram& f);
BrauerDiagram evaluate(const Slice& s);
BrauerDiagram evaluate(const GeneratorWord& w);
std::string to_string(const GeneratorWord& w);

// Parses `id_1 + cup ; cap + id_1`. `;` reads top to bottom and binds looser than `+`.
BrauerDiagram parse_word(const std::string& text);

struct BoundaryCospan {
    std::vector<std::string> sources;
    std::vector<std::string> targets;
    std::vector<std::vector<std::string>> components;
    BigInt bubbles = 0;
};

BoundaryCospan boundary_cospan(const BrauerDiagram& f);

Json bigint_to_json(const BigInt& k);
BigInt bigint_from_json(const Json& j);

Json to_json(const BrauerDiagram& f);
BrauerDiagram diagram_from_json(const Json& j);

std::string to_dot(const BrauerDiagram& f);

}  // namespace brauerkit
