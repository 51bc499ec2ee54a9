#include "iwasawa/padic.hpp"

#include <algorithm>
#include <sstream>

namespace iwasawa {

thread_local int Precision::default_digits = 30;
thread_local int Precision::floor = 5;
thread_local bool Precision::enforce_floor = true;

BigInt pow_int(const BigInt& base, long exp) {
    BigInt r = 1, b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

long val_of(const BigInt& n, long p) {
    if (n == 0) throw Error("val_of: zero integer");
    BigInt m = n;
    long v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

BigInt inv_mod_pk(const BigInt& a, long p, int k) {
    // powm by Euler: phi(p^k) = p^(k-1)(p-1)
    BigInt mod = pow_int(p, k);
    BigInt phi = (mod / p) * (p - 1);
    BigInt r = boost::multiprecision::powm(a % mod, phi - 1, mod);
    return r;
}

static int digits_or_default(int digits) {
    return digits < 0 ? Precision::default_digits : digits;
}

PadicNumber PadicNumber::zero(long p, long abs_prec) {
    PadicNumber z;
    z.prime_ = p;
    z.zero_ = true;
    z.zero_prec_ = abs_prec;
    return z;
}

PadicNumber PadicNumber::make(long p, const BigInt& scaled, long base_val, long abs_prec) {
    // scaled is a representative of p^-base_val * x, known modulo p^(abs_prec - base_val).
    if (abs_prec <= base_val) return zero(p, abs_prec);
    BigInt mod = pow_int(p, static_cast<long>(abs_prec - base_val));
    BigInt r = scaled % mod;
    if (r < 0) r += mod;
    if (r == 0) return zero(p, abs_prec);
    long extra = val_of(r, p);
    long v = base_val + extra;
    if (v >= abs_prec) return zero(p, abs_prec);
    PadicNumber x;
    x.prime_ = p;
    x.zero_ = false;
    x.valuation_ = v;
    x.rel_prec_ = static_cast<int>(abs_prec - v);
    x.unit_ = r / pow_int(p, extra);
    x.unit_ %= pow_int(p, x.rel_prec_);
    x.zero_prec_ = 0;
    return x;
}

void PadicNumber::check_floor() const {
    if (!zero_ && Precision::enforce_floor && rel_prec_ < Precision::floor) {
        throw PrecisionExhausted("result carries " + std::to_string(rel_prec_) +
                                 " digits, below the floor of " + std::to_string(Precision::floor));
    }
}

PadicNumber PadicNumber::one(long p, int digits) {
    return from_integer(p, 1, digits);
}

PadicNumber PadicNumber::from_integer(long p, const BigInt& n, int digits) {
    int d = digits_or_default(digits);
    if (n == 0) return zero(p, kExact);
    long v = val_of(n, p);
    PadicNumber x;
    x.prime_ = p;
    x.zero_ = false;
    x.valuation_ = v;
    x.rel_prec_ = d;
    BigInt mod = pow_int(p, d);
    BigInt u = (n / pow_int(p, v)) % mod;
    if (u < 0) u += mod;
    x.unit_ = u;
    x.zero_prec_ = 0;
    return x;
}

PadicNumber PadicNumber::from_rational(long p, const BigInt& num, const BigInt& den, int digits) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    if (num == 0) return zero(p, kExact);
    int d = digits_or_default(digits);
    long vn = val_of(num, p), vd = val_of(den, p);
    BigInt mod = pow_int(p, d);
    BigInt un = (num / pow_int(p, vn)) % mod;
    if (un < 0) un += mod;
    BigInt ud = (den / pow_int(p, vd)) % mod;
    if (ud < 0) ud += mod;
    PadicNumber x;
    x.prime_ = p;
    x.zero_ = false;
    x.valuation_ = vn - vd;
    x.rel_prec_ = d;
    x.unit_ = (un * inv_mod_pk(ud, p, d)) % mod;
    x.zero_prec_ = 0;
    return x;
}

PadicNumber PadicNumber::from_unit(long p, const BigInt& unit, long val, int digits) {
    int d = digits_or_default(digits);
    BigInt mod = pow_int(p, d);
    BigInt u = unit % mod;
    if (u < 0) u += mod;
    if (u % p == 0) throw Error("from_unit: residue not coprime to p");
    PadicNumber x;
    x.prime_ = p;
    x.zero_ = false;
    x.valuation_ = val;
    x.rel_prec_ = d;
    x.unit_ = u;
    x.zero_prec_ = 0;
    return x;
}

PadicNumber PadicNumber::from_string(long p, const std::string& text, int digits) {
    // integer or integer/integer
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return from_integer(p, BigInt(text), digits);
        return from_rational(p, BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)), digits);
    } catch (const std::exception& e) {
        throw ParseError("bad p-adic literal '" + text + "'");
    }
}

BigInt PadicNumber::unit_residue(int digits) const {
    if (zero_) return 0;
    return unit_ % pow_int(prime_, std::min<long>(digits, rel_prec_));
}

BigInt PadicNumber::residue(int digits) const {
    if (zero_) return 0;
    if (valuation_ < 0) throw Error("residue: negative valuation");
    return (unit_ * pow_int(prime_, valuation_)) % pow_int(prime_, digits);
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    PadicNumber x = *this;
    BigInt mod = pow_int(prime_, rel_prec_);
    x.unit_ = (mod - unit_ % mod) % mod;
    return x;
}

PadicNumber PadicNumber::add_raw(const PadicNumber& x, const PadicNumber& y) {
    long p = x.prime_ ? x.prime_ : y.prime_;
    long a = std::min(x.abs_precision(), y.abs_precision());
    if (x.zero_ && y.zero_) return zero(p, a);
    if (x.zero_) return y.truncate_abs(a);
    if (y.zero_) return x.truncate_abs(a);
    long v0 = std::min(x.valuation_, y.valuation_);
    BigInt rx = x.unit_ * pow_int(p, x.valuation_ - v0);
    BigInt ry = y.unit_ * pow_int(p, y.valuation_ - v0);
    return make(p, rx + ry, v0, a);
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    PadicNumber r = add_raw(*this, o);
    r.check_floor();
    return r;
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const {
    return *this + (-o);
}

PadicNumber PadicNumber::mul_raw(const PadicNumber& x, const PadicNumber& y) {
    long p = x.prime_ ? x.prime_ : y.prime_;
    if (x.zero_ || y.zero_) {
        if (x.is_exact_zero() || y.is_exact_zero()) return zero(p, kExact);
        // 0 + O(p^a) times y: vanishes to a + v(y) at least.
        long a;
        if (x.zero_ && y.zero_)
            a = std::min(x.zero_prec_ + y.zero_prec_, kExact);
        else if (x.zero_)
            a = x.zero_prec_ + y.valuation_;
        else
            a = y.zero_prec_ + x.valuation_;
        return zero(p, std::min(a, kExact));
    }
    int d = std::min(x.rel_prec_, y.rel_prec_);
    BigInt mod = pow_int(p, d);
    PadicNumber r;
    r.prime_ = p;
    r.zero_ = false;
    r.valuation_ = x.valuation_ + y.valuation_;
    r.rel_prec_ = d;
    r.unit_ = (x.unit_ * y.unit_) % mod;
    r.zero_prec_ = 0;
    return r;
}

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    PadicNumber r = mul_raw(*this, o);
    r.check_floor();
    return r;
}

PadicNumber PadicNumber::inv() const {
    if (zero_) throw DivisionByZero("inverse of a value indistinguishable from zero");
    PadicNumber r;
    r.prime_ = prime_;
    r.zero_ = false;
    r.valuation_ = -valuation_;
    r.rel_prec_ = rel_prec_;
    r.unit_ = inv_mod_pk(unit_, prime_, rel_prec_);
    r.zero_prec_ = 0;
    return r;
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const {
    if (o.zero_) throw DivisionByZero();
    return *this * o.inv();
}

PadicNumber PadicNumber::pow(long e) const {
    if (e == 0) return one(prime_ ? prime_ : 2, zero_ ? Precision::default_digits : rel_prec_);
    if (e < 0) return inv().pow(-e);
    if (zero_) {
        if (is_exact_zero()) return *this;
        return zero(prime_, std::min(zero_prec_ * e, kExact));
    }
    PadicNumber base = *this, acc = one(prime_, rel_prec_);
    long n = e;
    while (n > 0) {
        if (n & 1) acc = mul_raw(acc, base);
        base = mul_raw(base, base);
        n >>= 1;
    }
    return acc;
}

PadicNumber PadicNumber::shift(long k) const {
    PadicNumber r = *this;
    if (zero_) {
        if (!is_exact_zero()) r.zero_prec_ += k;
        return r;
    }
    r.valuation_ += k;
    return r;
}

PadicNumber PadicNumber::truncate_abs(long a) const {
    if (zero_) return zero(prime_, std::min(zero_prec_, a));
    if (a >= abs_precision()) return *this;
    if (a <= valuation_) return zero(prime_, a);
    PadicNumber r = *this;
    r.rel_prec_ = static_cast<int>(a - valuation_);
    r.unit_ %= pow_int(prime_, r.rel_prec_);
    if (r.unit_ == 0) return zero(prime_, a);
    return r;
}

bool PadicNumber::equals(const PadicNumber& o) const {
    return add_raw(*this, -o).is_zero();
}

long PadicNumber::agree_digits(const PadicNumber& o) const {
    PadicNumber d = add_raw(*this, -o);
    long base = std::min(valuation(), o.valuation());
    if (d.is_zero()) {
        if (d.zero_prec_ >= kExact) return kExact;
        return d.zero_prec_ - base;
    }
    return std::max<long>(0, d.valuation_ - base);
}

std::string PadicNumber::str() const {
    std::ostringstream os;
    if (zero_) {
        os << "0";
        if (!is_exact_zero()) os << " + O(" << prime_ << "^" << zero_prec_ << ")";
        return os.str();
    }
    os << "v=" << valuation_ << ", unit=" << unit_ << ", mod " << prime_ << "^" << rel_prec_;
    return os.str();
}

PadicNumber teichmuller(const PadicNumber& a) {
    if (!a.is_unit()) throw Error("teichmuller: argument must be a unit");
    long p = a.prime();
    int d = a.rel_precision();
    BigInt mod = pow_int(p, d);
    BigInt x = a.unit_part() % mod;
    // x -> x^p converges to the Teichmueller lift, one digit per step.
    for (int i = 0; i <= d; ++i) {
        BigInt nx = boost::multiprecision::powm(x, BigInt(p), mod);
        if (nx == x) break;
        x = nx;
    }
    return PadicNumber::from_unit(p, x, 0, d);
}

PadicNumber iwasawa_log(const PadicNumber& u) {
    if (!u.is_unit()) throw Error("iwasawa_log: argument must be a unit");
    long p = u.prime();
    PadicNumber omega = teichmuller(u);
    PadicNumber x = u / omega - PadicNumber::one(p, u.rel_precision());
    if (x.is_zero()) return PadicNumber::zero(p, x.abs_precision());
    long vx = x.valuation();
    long target = x.abs_precision();
    // log(1+x) = sum (-1)^(k+1) x^k / k, truncated once k v(x) - v_p(k)
    // clears the target precision.
    PadicNumber sum = PadicNumber::zero(p);
    PadicNumber power = x;
    for (long k = 1;; ++k) {
        if (k > 1) power = PadicNumber::mul_raw(power, x);
        PadicNumber term = power / PadicNumber::from_integer(p, k, u.rel_precision() + 2);
        if (k % 2 == 0) term = -term;
        sum = PadicNumber::add_raw(sum, term);
        long floor_next = (k + 1) * vx;  // v_p(k+1) <= log_p(k+1)
        long lost = 1;
        while (pow_int(p, lost) <= k + 1) ++lost;
        if (floor_next - lost >= target && k >= 2) break;
        if (k > 4 * (target + 8)) throw PrecisionExhausted("iwasawa_log did not converge");
    }
    return sum;
}

PadicNumber padic_exp(const PadicNumber& x) {
    long p = x.prime() ? x.prime() : 3;
    if (x.is_zero()) return PadicNumber::one(p, Precision::default_digits);
    if (x.valuation() < 1) throw Error("padic_exp: needs valuation >= 1");
    long target = x.abs_precision();
    PadicNumber sum = PadicNumber::one(p, x.rel_precision() + 2);
    PadicNumber term = sum;
    long vx = x.valuation();
    for (long k = 1;; ++k) {
        term = PadicNumber::mul_raw(term, x) / PadicNumber::from_integer(p, k, x.rel_precision() + 4);
        sum = PadicNumber::add_raw(sum, term);
        // v(x^k/k!) >= k(v(x) - 1/(p-1)); stop once the bound clears target.
        long num = (k + 1) * ((p - 1) * vx - 1);
        if (num >= (p - 1) * target && k >= 2) break;
        if (k > 4 * (target + 8)) throw PrecisionExhausted("padic_exp did not converge");
    }
    return sum;
}

PadicNumber pow_one_unit(const PadicNumber& u, const PadicNumber& s) {
    long p = u.prime();
    PadicNumber lg = iwasawa_log(u);
    if (s.is_zero()) return PadicNumber::one(p, u.rel_precision());
    return padic_exp(s * lg);
}

PadicNumber pow_angle(const PadicNumber& a, const PadicNumber& s) {
    PadicNumber angle = a / teichmuller(a);
    return pow_one_unit(angle, s);
}

PadicNumber hensel_sqrt(const PadicNumber& a, long seed_residue) {
    long p = a.prime();
    if (p == 2) throw Error("hensel_sqrt: p must be odd");
    if (a.is_zero()) throw Error("hensel_sqrt: argument indistinguishable from zero");
    if (a.valuation() % 2 != 0) throw NotASquare("odd valuation");
    PadicNumber unit = a.shift(-a.valuation());
    BigInt a0 = unit.unit_residue(1);
    BigInt s = BigInt(seed_residue) % p;
    if (s < 0) s += p;
    if ((s * s - a0) % p != 0) throw NotASquare("seed^2 != a mod p");
    int d = unit.rel_precision();
    PadicNumber x = PadicNumber::from_unit(p, s, 0, d);
    PadicNumber half = PadicNumber::from_rational(p, 1, 2, d);
    for (int i = 0; i < 64; ++i) {
        PadicNumber nx = (x + unit / x) * half;
        if (nx.equals(x)) {
            x = nx;
            break;
        }
        x = nx;
    }
    if (!(x * x).equals(unit)) throw PrecisionExhausted("hensel_sqrt failed to certify");
    return x.shift(a.valuation() / 2);
}

PadicNumber hensel_sqrt(const PadicNumber& a) {
    long p = a.prime();
    if (a.is_zero()) throw Error("hensel_sqrt: argument indistinguishable from zero");
    if (a.valuation() % 2 != 0) throw NotASquare("odd valuation");
    BigInt a0 = a.shift(-a.valuation()).unit_residue(1);
    for (long s = 1; s < p; ++s) {
        if ((BigInt(s) * s - a0) % p == 0) return hensel_sqrt(a, s);
    }
    throw NotASquare("no residue squares to the leading digit");
}

}  // namespace iwasawa
