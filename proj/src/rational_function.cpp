#include "pdet/rational_function.hpp"

#include "pdet/errors.hpp"

namespace pdet {

namespace {

// p = scalar * P with P integer-primitive (content 1)
std::pair<Rational, QPoly> primitive_part(const QPoly& p) {
    mpz_class l(1), g(0);
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    QPoly scaled = p.scale(Rational(l, 1));
    for (const auto& c : scaled.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
    QPoly prim = scaled.scale(Rational(mpz_class(1), g));
    return {Rational(g, l), prim};
}

FpPoly poly_mod(const QPoly& p, long long prime) {
    std::vector<PrimeFieldElem> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        v.push_back(PrimeFieldElem::from_rational(c, prime));
    return FpPoly(std::move(v));
}

} // namespace

RationalFunction::RationalFunction() : num_(), den_(QPoly(Rational(1))) {}

RationalFunction::RationalFunction(QPoly num, QPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InputError("rational function with zero denominator");
    canonicalize();
}

RationalFunction::RationalFunction(const Rational& c)
    : num_(QPoly(c)), den_(QPoly(Rational(1))) {
    canonicalize();
}

RationalFunction RationalFunction::one() { return RationalFunction(Rational(1)); }

RationalFunction RationalFunction::t() {
    return RationalFunction(QPoly::monomial(Rational(1), 1), QPoly(Rational(1)));
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = QPoly(Rational(1));
        return;
    }
    auto [sn, pn] = primitive_part(num_);
    auto [sd, pd] = primitive_part(den_);
    Rational r = sn / sd; // value = r * pn/pd, r = u/v reduced
    num_ = pn.scale(Rational(r.num(), 1));
    den_ = pd.scale(Rational(r.den(), 1));
    // lowest nonzero coefficient of den positive
    int low = 0;
    while (den_.coeff(low).is_zero()) ++low;
    if (den_.coeff(low).sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rational RationalFunction::constant_term() const {
    if (den_.coeff(0).is_zero())
        throw InputError("denominator vanishes at t=0");
    return num_.coeff(0) / den_.coeff(0);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw InputError("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return RationalFunction::one() / pow(-e);
    RationalFunction acc = RationalFunction::one(), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

TruncSeries RationalFunction::expand(int order) const {
    if (den_.coeff(0).is_zero())
        throw InputError("cannot expand: denominator vanishes at t=0");
    std::vector<Rational> n(order), d(order);
    for (int i = 0; i < order; ++i) {
        n[i] = num_.coeff(i);
        d[i] = den_.coeff(i);
    }
    return TruncSeries(std::move(n)) * series_inv(TruncSeries(std::move(d)));
}

std::pair<FpPoly, FpPoly> RationalFunction::reduce_mod(long long p) const {
    FpPoly d = poly_mod(den_, p);
    if (d.coeff(0).is_zero())
        throw InputError("denominator constant term divisible by " + std::to_string(p));
    return {poly_mod(num_, p), d};
}

std::complex<double> RationalFunction::eval(std::complex<double> t) const {
    auto horner = [&](const QPoly& p) {
        std::complex<double> acc = 0.0;
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
            acc = acc * t + it->to_double();
        return acc;
    };
    std::complex<double> d = horner(den_);
    if (std::abs(d) < 1e-300) throw InputError("denominator vanishes at evaluation point");
    return horner(num_) / d;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::str() const {
    if (den_ == QPoly(Rational(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace pdet
