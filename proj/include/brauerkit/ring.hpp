#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "brauerkit/json_fwd.hpp"

namespace brauerkit {

using Rational = boost::multiprecision::cpp_rational;

// Dense coefficient list by degree, trailing zeros trimmed. Constants have length <= 1.
struct Scalar {
    std::vector<Rational> c;
    bool operator==(const Scalar&) const = default;
};

class Ring {
public:
    enum class Kind { Integers, Rationals, Polynomials, Modular };

    static Ring integers() { return Ring(Kind::Integers, 0); }
    static Ring rationals() { return Ring(Kind::Rationals, 0); }
    static Ring polynomials() { return Ring(Kind::Polynomials, 0); }
    static Ring modular(long p);
    // Accepts "Z", "Q", "Z[t]", "Z/p".
    static Ring parse(const std::string& name);

    Kind kind() const { return kind_; }
    long modulus() const { return p_; }
    std::string name() const;

    Scalar zero() const { return {}; }
    Scalar one() const { return from_int(1); }
    Scalar from_int(long long v) const;
    Scalar variable() const;  // t, only in Z[t]

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar pow(const Scalar& a, unsigned long long k) const;
    bool is_zero(const Scalar& a) const { return a.c.empty(); }
    bool equal(const Scalar& a, const Scalar& b) const { return normalize(a) == normalize(b); }

    // Throws RingMismatch if `a` is not an element of this ring.
    Scalar normalize(const Scalar& a) const;

    Scalar parse_scalar(const Json& j) const;
    Json scalar_to_json(const Scalar& a) const;
    std::string format(const Scalar& a) const;

    bool operator==(const Ring&) const = default;

private:
    Ring(Kind k, long p) : kind_(k), p_(p) {}
    Kind kind_;
    long p_;
};

}  // namespace brauerkit
