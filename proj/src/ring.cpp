#include "brauerkit/ring.hpp"

#include <sstream>

#include "brauerkit/errors.hpp"

namespace brauerkit {

namespace {

void trim(Scalar& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

bool is_integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace

Ring Ring::modular(long p) {
    if (p < 2) throw Error(ErrorCode::InvalidParameter, "modulus must be at least 2");
    return Ring(Kind::Modular, p);
}

Ring Ring::parse(const std::string& name) {
    if (name == "Z") return integers();
    if (name == "Q") return rationals();
    if (name == "Z[t]") return polynomials();
    if (name.rfind("Z/", 0) == 0) {
        try {
            return modular(std::stol(name.substr(2)));
        } catch (const std::logic_error&) {
        }
    }
    throw Error(ErrorCode::InvalidParameter, "unknown ring " + name);
}

std::string Ring::name() const {
    switch (kind_) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::Polynomials: return "Z[t]";
        case Kind::Modular: return "Z/" + std::to_string(p_);
    }
    return "?";
}

Scalar Ring::from_int(long long v) const { return normalize(Scalar{{Rational(v)}}); }

Scalar Ring::variable() const {
    if (kind_ != Kind::Polynomials) throw Error(ErrorCode::RingMismatch, "t is only defined in Z[t]");
    return Scalar{{Rational(0), Rational(1)}};
}

Scalar Ring::normalize(const Scalar& a) const {
    Scalar r = a;
    trim(r);
    if (kind_ != Kind::Polynomials && r.c.size() > 1)
        throw Error(ErrorCode::RingMismatch, "polynomial coefficient in " + name());
    if (kind_ != Kind::Rationals) {
        for (const auto& x : r.c)
            if (!is_integral(x)) throw Error(ErrorCode::RingMismatch, "fraction in " + name());
    }
    if (kind_ == Kind::Modular && !r.c.empty()) {
        boost::multiprecision::cpp_int v = boost::multiprecision::numerator(r.c[0]) % p_;
        if (v < 0) v += p_;
        r.c[0] = Rational(v);
        trim(r);
    }
    return r;
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
    Scalar r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    return normalize(r);
}

Scalar Ring::neg(const Scalar& a) const {
    Scalar r = a;
    for (auto& x : r.c) x = -x;
    return normalize(r);
}

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
    if (a.c.empty() || b.c.empty()) return zero();
    Scalar r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return normalize(r);
}

Scalar Ring::pow(const Scalar& a, unsigned long long k) const {
    Scalar result = one(), base = a;
    while (k) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

Scalar Ring::parse_scalar(const Json& j) const {
    auto one_value = [](const Json& v) -> Rational {
        if (v.is_number_integer()) return Rational(v.get<long long>());
        if (v.is_string()) return Rational(v.get<std::string>());
        throw Error(ErrorCode::ParseError, "bad coefficient " + v.dump());
    };
    Scalar s;
    if (j.is_array()) {
        for (const auto& v : j) s.c.push_back(one_value(v));
    } else {
        s.c.push_back(one_value(j));
    }
    return normalize(s);
}

Json Ring::scalar_to_json(const Scalar& a) const {
    auto one_value = [](const Rational& r) -> Json {
        if (is_integral(r) && boost::multiprecision::abs(r) < Rational(std::numeric_limits<long long>::max()))
            return static_cast<long long>(boost::multiprecision::numerator(r));
        return r.str();
    };
    if (kind_ == Kind::Polynomials) {
        Json arr = Json::array();
        for (const auto& x : a.c) arr.push_back(one_value(x));
        return arr;
    }
    return a.c.empty() ? Json(0) : one_value(a.c[0]);
}

std::string Ring::format(const Scalar& a) const {
    if (a.c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || a.c[i] != 1) os << a.c[i];
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace brauerkit
