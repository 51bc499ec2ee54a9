#include "iwasawa/fraction.hpp"

#include <sstream>

namespace iwasawa {

LambdaFraction LambdaFraction::normalize(const IwasawaSeries& num, const IwasawaSeries& den) {
    LambdaFraction f;
    f.prime_ = num.prime();
    f.raw_num_ = num;
    f.raw_den_ = den;
    int rd = den.t_order();
    if (rd > den.t_prec()) throw IndeterminateAtPrecision("fraction denominator vanishes at precision");
    int rn = num.t_order();
    if (rn > num.t_prec()) {
        // Numerator zero at precision: the fraction is zero.
        f.zero_ = true;
        return f;
    }
    f.zero_ = false;
    f.t_order_ = rn - rd;
    IwasawaSeries n0 = num.shift_t(-rn);
    IwasawaSeries d0 = den.shift_t(-rd);
    f.unit_part_ = n0 * d0.invert();
    if (f.unit_part_.coeff(0).is_zero())
        throw IndeterminateAtPrecision("fraction leading coefficient lost to cancellation");
    return f;
}

LambdaFraction LambdaFraction::from_series(const IwasawaSeries& s) {
    return normalize(s, IwasawaSeries::one(s.prime(), s.t_prec()));
}

LambdaFraction LambdaFraction::from_scalar(const PadicNumber& c) {
    if (c.is_zero()) return zero_value(c.prime());
    return from_series(IwasawaSeries::constant(c));
}

LambdaFraction LambdaFraction::one(long p) {
    return from_series(IwasawaSeries::one(p));
}

LambdaFraction LambdaFraction::zero_value(long p) {
    LambdaFraction f;
    f.prime_ = p;
    f.zero_ = true;
    f.raw_num_ = IwasawaSeries::zero(p);
    f.raw_den_ = IwasawaSeries::one(p);
    return f;
}

int LambdaFraction::t_order() const {
    if (zero_) throw Error("t_order of the zero fraction");
    return t_order_;
}

const IwasawaSeries& LambdaFraction::unit_part() const {
    if (zero_) throw Error("unit part of the zero fraction");
    return unit_part_;
}

PadicNumber LambdaFraction::leading_coefficient() const {
    if (zero_) throw Error("leading coefficient of the zero fraction");
    return unit_part_.coeff(0);
}

LambdaFraction LambdaFraction::operator-() const {
    if (zero_) return *this;
    LambdaFraction f = *this;
    f.unit_part_ = -f.unit_part_;
    f.raw_num_ = -f.raw_num_;
    return f;
}

LambdaFraction LambdaFraction::operator+(const LambdaFraction& o) const {
    if (zero_) return o;
    if (o.zero_) return *this;
    return normalize(raw_num_ * o.raw_den_ + o.raw_num_ * raw_den_, raw_den_ * o.raw_den_);
}

LambdaFraction LambdaFraction::operator-(const LambdaFraction& o) const { return *this + (-o); }

LambdaFraction LambdaFraction::operator*(const LambdaFraction& o) const {
    if (zero_ || o.zero_) return zero_value(prime_ ? prime_ : o.prime_);
    return normalize(raw_num_ * o.raw_num_, raw_den_ * o.raw_den_);
}

LambdaFraction LambdaFraction::inv() const {
    if (zero_) throw DivisionByZero("inverse of the zero fraction");
    return normalize(raw_den_, raw_num_);
}

LambdaFraction LambdaFraction::operator/(const LambdaFraction& o) const {
    if (o.zero_) throw DivisionByZero("division by the zero fraction");
    if (zero_) return *this;
    return normalize(raw_num_ * o.raw_den_, raw_den_ * o.raw_num_);
}

PadicNumber LambdaFraction::value_at_zero() const {
    if (zero_) return PadicNumber::zero(prime_);
    if (t_order_ > 0) return PadicNumber::zero(prime_);
    if (t_order_ < 0) throw PoleAtZero();
    return leading_coefficient();
}

PadicNumber LambdaFraction::evaluate(const PadicNumber& x) const {
    if (zero_) return PadicNumber::zero(prime_);
    if (x.is_zero()) return value_at_zero();
    PadicNumber den = raw_den_.evaluate(x);
    if (den.is_zero()) throw IndeterminateAtPrecision("denominator vanishes at the evaluation point");
    return raw_num_.evaluate(x) / den;
}

std::string LambdaFraction::str() const {
    if (zero_) return "0";
    std::ostringstream os;
    os << "T^" << t_order_ << " * [" << unit_part_.str() << "]";
    return os.str();
}

PadicNumber substitute_cyclotomic(const LambdaFraction& f, const PadicNumber& u, const PadicNumber& s) {
    long p = f.prime();
    PadicNumber um1 = u - PadicNumber::one(p, u.rel_precision());
    if (um1.is_zero() || um1.valuation() < 1) throw Error("substitute_cyclotomic: u must be = 1 mod p, u != 1");
    if (s.is_zero()) {
        if (!f.is_zero() && f.t_order() < 0) throw PoleAtZero();
        return f.value_at_zero();
    }
    PadicNumber x = pow_one_unit(u, s) - PadicNumber::one(p, u.rel_precision());
    return f.evaluate(x);
}

}  // namespace iwasawa
