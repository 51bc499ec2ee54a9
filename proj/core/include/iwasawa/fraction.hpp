#pragma once

#include "iwasawa/series.hpp"

namespace iwasawa {

// Element of the fraction field of Lambda in the normal form T^r * G(T) with
// G(0) != 0 in Q_p. The raw numerator/denominator pair that produced the
// fraction is kept for evaluation and audit. An explicit zero state is
// allowed so elimination code can work with these values.
class LambdaFraction {
  public:
    LambdaFraction() : prime_(0), zero_(true), t_order_(0) {}

    static LambdaFraction normalize(const IwasawaSeries& num, const IwasawaSeries& den);
    static LambdaFraction from_series(const IwasawaSeries& f);
    static LambdaFraction from_scalar(const PadicNumber& c);
    static LambdaFraction one(long p);
    static LambdaFraction zero_value(long p);

    long prime() const { return prime_; }
    bool is_zero() const { return zero_; }
    int t_order() const;
    const IwasawaSeries& unit_part() const;
    PadicNumber leading_coefficient() const;  // G(0) = F^*(0)

    const IwasawaSeries& raw_num() const { return raw_num_; }
    const IwasawaSeries& raw_den() const { return raw_den_; }

    LambdaFraction operator-() const;
    LambdaFraction operator+(const LambdaFraction& o) const;
    LambdaFraction operator-(const LambdaFraction& o) const;
    LambdaFraction operator*(const LambdaFraction& o) const;
    LambdaFraction operator/(const LambdaFraction& o) const;
    LambdaFraction inv() const;

    // Membership in the localization of Lambda at (T), a DVR with uniformizer
    // T and residue field Q_p.
    bool in_local_ring() const { return zero_ || t_order_ >= 0; }
    bool is_local_unit() const { return !zero_ && t_order_ == 0; }

    // Value at T = 0: zero for r > 0, G(0) for r = 0, PoleAtZero for r < 0.
    PadicNumber value_at_zero() const;
    // Value at a point x with v(x) >= 1, computed from the raw pair.
    PadicNumber evaluate(const PadicNumber& x) const;

    std::string str() const;

  private:
    long prime_;
    bool zero_;
    int t_order_;
    IwasawaSeries unit_part_;
    IwasawaSeries raw_num_, raw_den_;
};

// F(u^s - 1) with u = chi(gamma) = 1 mod p; resolves T^r poles away from
// s = 0 and throws PoleAtZero at s = 0 when r < 0.
PadicNumber substitute_cyclotomic(const LambdaFraction& f, const PadicNumber& u, const PadicNumber& s);

}  // namespace iwasawa
