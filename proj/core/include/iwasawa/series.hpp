#pragma once

#include <vector>

#include "iwasawa/padic.hpp"

namespace iwasawa {

// Truncated element of Lambda = Z_p[[T]] (or Q_p[[T]] after scaling): the
// coefficients a_0..a_M are known and everything past T^M is an explicit
// O(T^(M+1)) tail, never an implicit zero.
class IwasawaSeries {
  public:
    static thread_local int default_t_prec;

    IwasawaSeries() : prime_(0), t_prec_(-1) {}
    IwasawaSeries(long p, std::vector<PadicNumber> coeffs);

    static IwasawaSeries zero(long p, int t_prec = -1);
    static IwasawaSeries constant(const PadicNumber& c, int t_prec = -1);
    static IwasawaSeries one(long p, int t_prec = -1);
    // c * T^k
    static IwasawaSeries monomial(long p, const PadicNumber& c, int k, int t_prec = -1);
    // The image of T = gamma - 1.
    static IwasawaSeries variable(long p, int t_prec = -1);
    static IwasawaSeries from_integers(long p, const std::vector<long>& coeffs, int t_prec = -1);

    long prime() const { return prime_; }
    int t_prec() const { return t_prec_; }
    // Coefficient of T^i; exact zero beyond the stored window is *not*
    // assumed, asking past t_prec is an error.
    const PadicNumber& coeff(int i) const;
    PadicNumber at_zero() const { return coeff(0); }

    // Index of the first coefficient visibly nonzero; t_prec()+1 when the
    // whole window vanishes at precision.
    int t_order() const;
    bool vanishes_at_precision() const { return t_order() > t_prec_; }
    // Every visible coefficient lies in Z_p.
    bool is_integral() const;
    // Minimum valuation over visible nonzero coefficients; throws
    // IndeterminateAtPrecision when the window is empty.
    long content_valuation() const;

    IwasawaSeries operator-() const;
    IwasawaSeries operator+(const IwasawaSeries& o) const;
    IwasawaSeries operator-(const IwasawaSeries& o) const;
    IwasawaSeries operator*(const IwasawaSeries& o) const;
    IwasawaSeries scale(const PadicNumber& c) const;
    IwasawaSeries scale_p(long k) const;  // multiply by p^k, exact
    // Multiply by T^k (k >= 0) or divide (k < 0; the low coefficients must
    // vanish at precision).
    IwasawaSeries shift_t(int k) const;
    IwasawaSeries truncate(int t_prec) const;

    // Multiplicative inverse; NotAUnit when a_0 vanishes at precision.
    IwasawaSeries invert() const;
    // Substitute T -> phi(T) with phi(0) = 0.
    IwasawaSeries compose(const IwasawaSeries& phi) const;
    // (1+T)^a - 1 as a series, a a nonzero integer.
    static IwasawaSeries one_plus_t_pow_minus_one(long p, long a, int t_prec = -1);

    // Value at a point with v(x) >= 1; the unknown tail is folded into the
    // reported precision assuming integral tail coefficients.
    PadicNumber evaluate(const PadicNumber& x) const;

    bool equals_at_precision(const IwasawaSeries& o) const;
    std::string str() const;

  private:
    long prime_;
    int t_prec_;
    std::vector<PadicNumber> c_;
};

// p^mu * distinguished * unit form of a nonzero integral series.
struct WeierstrassData {
    long mu = 0;
    std::vector<PadicNumber> distinguished;  // monic, lower coefficients in pZ_p
    IwasawaSeries unit;

    int degree() const { return static_cast<int>(distinguished.size()) - 1; }
    IwasawaSeries recombine(long p, int t_prec) const;
};

WeierstrassData weierstrass_prepare(const IwasawaSeries& f);

}  // namespace iwasawa
