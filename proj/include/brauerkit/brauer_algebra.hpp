#pragma once

#include <map>

#include "brauerkit/brauer.hpp"
#include "brauerkit/ring.hpp"

namespace brauerkit {

// Finite linear combination of open diagrams m -> n with coefficients in a ring.
class BrElement {
public:
    BrElement(Ring ring, std::size_t m, std::size_t n) : ring_(ring), m_(m), n_(n) {}

    static BrElement basis(Ring ring, const BrauerDiagram& open_diagram);

    const Ring& ring() const { return ring_; }
    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    const std::map<BrauerDiagram, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c * f; f must be open with matching arities.
    void add_term(const BrauerDiagram& f, const Scalar& c);

    bool operator==(const BrElement&) const = default;

private:
    Ring ring_;
    std::size_t m_, n_;
    std::map<BrauerDiagram, Scalar> terms_;
};

BrElement br_add(const BrElement& a, const BrElement& b);
BrElement br_scale(const Scalar& c, const BrElement& a);
// a first, then b; each loop formed contributes a factor delta.
BrElement br_compose(const BrElement& a, const BrElement& b, const Scalar& delta);
BrElement br_tensor(const BrElement& a, const BrElement& b);

// (tau, k) -> delta^k tau.
BrElement bd_to_br(const BrauerDiagram& f, const Ring& ring, const Scalar& delta);
// (tau, k) -> t^k tau over Z[t].
BrElement bd_to_br_t(const BrauerDiagram& f);

std::size_t algebra_dimension(std::size_t n);

struct Wall {
    std::size_t m1, n1, m2, n2;
};

// Sources are m1 positive then n1 negative points, targets m2 positive then n2 negative.
bool is_walled(const BrauerDiagram& f, const Wall& wall);

Json to_json(const BrElement& a);
BrElement br_from_json(const Json& j);

}  // namespace brauerkit
