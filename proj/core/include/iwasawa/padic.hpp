#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "iwasawa/errors.hpp"

namespace iwasawa {

using BigInt = boost::multiprecision::cpp_int;

// Library wide precision knobs. Thread local so concurrent trials can run
// with independent settings.
struct Precision {
    static thread_local int default_digits;  // relative digits carried by new values
    static thread_local int floor;           // below this many certified digits an op throws
    static thread_local bool enforce_floor;
};

BigInt pow_int(const BigInt& base, long exp);
long val_of(const BigInt& n, long p);  // p-adic valuation of a nonzero integer
BigInt inv_mod_pk(const BigInt& a, long p, int k);

// Element of Q_p stored as p^valuation * unit with the unit known modulo
// p^rel_prec. A value that is indistinguishable from zero keeps only the
// modulus p^zero_prec it is known to vanish to.
class PadicNumber {
  public:
    static constexpr long kExact = (1L << 40);

    PadicNumber() : prime_(0), zero_(true), valuation_(0), rel_prec_(0), zero_prec_(kExact) {}

    static PadicNumber zero(long p, long abs_prec = kExact);
    static PadicNumber one(long p, int digits = -1);
    static PadicNumber from_integer(long p, const BigInt& n, int digits = -1);
    static PadicNumber from_rational(long p, const BigInt& num, const BigInt& den, int digits = -1);
    // p^val * unit with unit given as a residue (must be coprime to p).
    static PadicNumber from_unit(long p, const BigInt& unit, long val, int digits);
    static PadicNumber from_string(long p, const std::string& text, int digits = -1);

    long prime() const { return prime_; }
    bool is_zero() const { return zero_; }
    bool is_exact_zero() const { return zero_ && zero_prec_ >= kExact; }
    // Valuation of a zero value is only a lower bound; callers that need the
    // distinction should test is_zero() first.
    long valuation() const { return zero_ ? zero_prec_ : valuation_; }
    int rel_precision() const { return zero_ ? 0 : rel_prec_; }
    long abs_precision() const { return zero_ ? zero_prec_ : valuation_ + rel_prec_; }
    bool is_unit() const { return !zero_ && valuation_ == 0; }

    const BigInt& unit_part() const { return unit_; }
    // Integer representative of p^-v * x modulo p^digits.
    BigInt unit_residue(int digits) const;
    // Integer representative of x modulo p^digits (requires valuation >= 0).
    BigInt residue(int digits) const;

    PadicNumber operator-() const;
    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const;
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator/(const PadicNumber& o) const;
    PadicNumber inv() const;
    PadicNumber pow(long e) const;

    // Multiply by p^k: exact shift of the valuation.
    PadicNumber shift(long k) const;
    // Forget digits beyond absolute precision a.
    PadicNumber truncate_abs(long a) const;

    bool equals(const PadicNumber& o) const;
    bool operator==(const PadicNumber& o) const { return equals(o); }
    bool operator!=(const PadicNumber& o) const { return !equals(o); }

    // Certified digits of agreement past the common valuation; kExact when the
    // difference vanishes at full precision.
    long agree_digits(const PadicNumber& o) const;

    std::string str() const;

    static PadicNumber add_raw(const PadicNumber& x, const PadicNumber& y);
    static PadicNumber mul_raw(const PadicNumber& x, const PadicNumber& y);

  private:
    static PadicNumber make(long p, const BigInt& scaled, long base_val, long abs_prec);
    void check_floor() const;

    long prime_;
    bool zero_;
    long valuation_;
    BigInt unit_;
    int rel_prec_;
    long zero_prec_;
};

// log(<u>) for a unit u, where <u> = u / omega(u); vanishes on roots of unity
// and on p (by the Iwasawa branch convention log p = 0, which this capped
// model never needs explicitly).
PadicNumber iwasawa_log(const PadicNumber& u);

// The unique (p-1)-st root of unity congruent to the unit a mod p.
PadicNumber teichmuller(const PadicNumber& a);

// exp of x with v(x) >= 1.
PadicNumber padic_exp(const PadicNumber& x);

// u^s = exp(s log u) for u = 1 mod p and s in Z_p.
PadicNumber pow_one_unit(const PadicNumber& u, const PadicNumber& s);

// <a>^s for an arbitrary unit a.
PadicNumber pow_angle(const PadicNumber& a, const PadicNumber& s);

// Square root by Newton iteration from a seed residue with seed^2 = a mod p.
PadicNumber hensel_sqrt(const PadicNumber& a, long seed_residue);
// Searches for a valid seed; NotASquare when none exists.
PadicNumber hensel_sqrt(const PadicNumber& a);

}  // namespace iwasawa
