#include "brauerkit/brauer_algebra.hpp"

#include "brauerkit/errors.hpp"

namespace brauerkit {

BrElement BrElement::basis(Ring ring, const BrauerDiagram& f) {
    BrElement e(ring, f.m(), f.n());
    e.add_term(f, ring.one());
    return e;
}

void BrElement::add_term(const BrauerDiagram& f, const Scalar& c) {
    if (!is_open(f)) throw Error(ErrorCode::InvalidParameter, "basis diagrams must be open");
    if (f.m() != m_ || f.n() != n_) throw Error(ErrorCode::ArityMismatch, "term arity differs from element");
    Scalar sum = ring_.add(terms_.count(f) ? terms_.at(f) : ring_.zero(), c);
    if (ring_.is_zero(sum)) terms_.erase(f);
    else terms_[f] = std::move(sum);
}

namespace {

void same_ring(const BrElement& a, const BrElement& b) {
    if (!(a.ring() == b.ring())) throw Error(ErrorCode::RingMismatch, a.ring().name() + " vs " + b.ring().name());
}

}  // namespace

BrElement br_add(const BrElement& a, const BrElement& b) {
    same_ring(a, b);
    if (a.m() != b.m() || a.n() != b.n()) throw Error(ErrorCode::ArityMismatch, "sum of different hom-sets");
    BrElement r = a;
    for (const auto& [f, c] : b.terms()) r.add_term(f, c);
    return r;
}

BrElement br_scale(const Scalar& c, const BrElement& a) {
    BrElement r(a.ring(), a.m(), a.n());
    for (const auto& [f, x] : a.terms()) r.add_term(f, a.ring().mul(c, x));
    return r;
}

BrElement br_compose(const BrElement& a, const BrElement& b, const Scalar& delta) {
    same_ring(a, b);
    if (a.n() != b.m()) throw Error(ErrorCode::ArityMismatch, "cannot compose Brauer algebra elements");
    const Ring& R = a.ring();
    Scalar d = R.normalize(delta);
    BrElement r(R, a.m(), b.n());
    for (const auto& [f, x] : a.terms()) {
        for (const auto& [g, y] : b.terms()) {
            BrauerDiagram gf = compose(f, g);
            Scalar c = R.mul(R.mul(x, y), R.pow(d, static_cast<unsigned long long>(gf.closed())));
            r.add_term(gf.open_part(), c);
        }
    }
    return r;
}

BrElement br_tensor(const BrElement& a, const BrElement& b) {
    same_ring(a, b);
    const Ring& R = a.ring();
    BrElement r(R, a.m() + b.m(), a.n() + b.n());
    for (const auto& [f, x] : a.terms())
        for (const auto& [g, y] : b.terms()) r.add_term(tensor(f, g), R.mul(x, y));
    return r;
}

BrElement bd_to_br(const BrauerDiagram& f, const Ring& ring, const Scalar& delta) {
    BrElement r(ring, f.m(), f.n());
    r.add_term(f.open_part(), ring.pow(ring.normalize(delta), static_cast<unsigned long long>(f.closed())));
    return r;
}

BrElement bd_to_br_t(const BrauerDiagram& f) {
    Ring zt = Ring::polynomials();
    return bd_to_br(f, zt, zt.variable());
}

std::size_t algebra_dimension(std::size_t n) { return enumerate_open(n, n).size(); }

bool is_walled(const BrauerDiagram& f, const Wall& w) {
    if (w.m1 + w.n1 != f.m() || w.m2 + w.n2 != f.n())
        throw Error(ErrorCode::ArityMismatch, "wall does not match diagram arities");
    // Side A holds positive sources and negative targets; every pair must cross between A and B.
    auto side_a = [&](std::size_t p) { return p < f.m() ? p < w.m1 : (p - f.m()) >= w.m2; };
    for (auto [a, b] : f.pairs())
        if (side_a(a) == side_a(b)) return false;
    return true;
}

Json to_json(const BrElement& a) {
    Json terms = Json::array();
    for (const auto& [f, c] : a.terms()) terms.push_back({{"diagram", to_json(f)}, {"coeff", a.ring().scalar_to_json(c)}});
    return {{"ring", a.ring().name()}, {"m", a.m()}, {"n", a.n()}, {"terms", terms}};
}

BrElement br_from_json(const Json& j) {
    Ring R = Ring::parse(j.at("ring").get<std::string>());
    BrElement e(R, j.at("m").get<std::size_t>(), j.at("n").get<std::size_t>());
    for (const auto& t : j.at("terms")) e.add_term(diagram_from_json(t.at("diagram")), R.parse_scalar(t.at("coeff")));
    return e;
}

}  // namespace brauerkit
