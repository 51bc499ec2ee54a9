#include "iwasawa/series.hpp"

#include <algorithm>
#include <sstream>

namespace iwasawa {

thread_local int IwasawaSeries::default_t_prec = 40;

static int tprec_or_default(int t) { return t < 0 ? IwasawaSeries::default_t_prec : t; }

IwasawaSeries::IwasawaSeries(long p, std::vector<PadicNumber> coeffs)
    : prime_(p), t_prec_(static_cast<int>(coeffs.size()) - 1), c_(std::move(coeffs)) {}

IwasawaSeries IwasawaSeries::zero(long p, int t_prec) {
    int m = tprec_or_default(t_prec);
    return IwasawaSeries(p, std::vector<PadicNumber>(m + 1, PadicNumber::zero(p)));
}

IwasawaSeries IwasawaSeries::constant(const PadicNumber& c, int t_prec) {
    IwasawaSeries s = zero(c.prime(), t_prec);
    s.c_[0] = c;
    return s;
}

IwasawaSeries IwasawaSeries::one(long p, int t_prec) {
    return constant(PadicNumber::one(p), t_prec);
}

IwasawaSeries IwasawaSeries::monomial(long p, const PadicNumber& c, int k, int t_prec) {
    IwasawaSeries s = zero(p, std::max(tprec_or_default(t_prec), k));
    s.c_[k] = c;
    return s;
}

IwasawaSeries IwasawaSeries::variable(long p, int t_prec) {
    return monomial(p, PadicNumber::one(p), 1, t_prec);
}

IwasawaSeries IwasawaSeries::from_integers(long p, const std::vector<long>& coeffs, int t_prec) {
    IwasawaSeries s = zero(p, std::max<int>(tprec_or_default(t_prec), static_cast<int>(coeffs.size()) - 1));
    for (size_t i = 0; i < coeffs.size(); ++i) s.c_[i] = PadicNumber::from_integer(p, coeffs[i]);
    return s;
}

const PadicNumber& IwasawaSeries::coeff(int i) const {
    if (i < 0 || i > t_prec_) throw Error("series coefficient out of the known window");
    return c_[i];
}

int IwasawaSeries::t_order() const {
    for (int i = 0; i <= t_prec_; ++i)
        if (!c_[i].is_zero()) return i;
    return t_prec_ + 1;
}

bool IwasawaSeries::is_integral() const {
    for (const auto& a : c_)
        if (!a.is_zero() && a.valuation() < 0) return false;
    return true;
}

long IwasawaSeries::content_valuation() const {
    bool seen = false;
    long m = 0;
    for (const auto& a : c_) {
        if (a.is_zero()) continue;
        m = seen ? std::min(m, a.valuation()) : a.valuation();
        seen = true;
    }
    if (!seen) throw IndeterminateAtPrecision("series vanishes over the whole precision window");
    return m;
}

IwasawaSeries IwasawaSeries::operator-() const {
    IwasawaSeries r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

IwasawaSeries IwasawaSeries::operator+(const IwasawaSeries& o) const {
    int m = std::min(t_prec_, o.t_prec_);
    std::vector<PadicNumber> c(m + 1);
    for (int i = 0; i <= m; ++i) c[i] = PadicNumber::add_raw(c_[i], o.c_[i]);
    return IwasawaSeries(prime_, std::move(c));
}

IwasawaSeries IwasawaSeries::operator-(const IwasawaSeries& o) const { return *this + (-o); }

IwasawaSeries IwasawaSeries::operator*(const IwasawaSeries& o) const {
    // The unknown tail of one factor multiplies the visible part of the
    // other, so the product is known modulo T^(min(M1+1+t2, M2+1+t1)).
    int t1 = t_order(), t2 = o.t_order();
    long m_sharp = std::min<long>(static_cast<long>(t_prec_) + t2, static_cast<long>(o.t_prec_) + t1);
    int m = static_cast<int>(std::min<long>(m_sharp, t_prec_ + o.t_prec_));
    std::vector<PadicNumber> c(m + 1, PadicNumber::zero(prime_));
    for (int i = std::min(t1, t_prec_); i <= t_prec_ && i <= m; ++i) {
        if (c_[i].is_zero() && c_[i].is_exact_zero()) continue;
        for (int j = std::min(t2, o.t_prec_); j <= o.t_prec_ && i + j <= m; ++j) {
            c[i + j] = PadicNumber::add_raw(c[i + j], PadicNumber::mul_raw(c_[i], o.c_[j]));
        }
    }
    return IwasawaSeries(prime_, std::move(c));
}

IwasawaSeries IwasawaSeries::scale(const PadicNumber& s) const {
    IwasawaSeries r = *this;
    for (auto& a : r.c_) a = PadicNumber::mul_raw(a, s);
    return r;
}

IwasawaSeries IwasawaSeries::scale_p(long k) const {
    IwasawaSeries r = *this;
    for (auto& a : r.c_) a = a.shift(k);
    return r;
}

IwasawaSeries IwasawaSeries::shift_t(int k) const {
    if (k == 0) return *this;
    if (k > 0) {
        std::vector<PadicNumber> c(t_prec_ + k + 1, PadicNumber::zero(prime_));
        for (int i = 0; i <= t_prec_; ++i) c[i + k] = c_[i];
        return IwasawaSeries(prime_, std::move(c));
    }
    int d = -k;
    for (int i = 0; i < d && i <= t_prec_; ++i)
        if (!c_[i].is_zero()) throw Error("shift_t: low coefficients do not vanish");
    if (t_prec_ < d) throw IndeterminateAtPrecision("shift_t: window too small");
    std::vector<PadicNumber> c(c_.begin() + d, c_.end());
    return IwasawaSeries(prime_, std::move(c));
}

IwasawaSeries IwasawaSeries::truncate(int t_prec) const {
    if (t_prec >= t_prec_) return *this;
    std::vector<PadicNumber> c(c_.begin(), c_.begin() + t_prec + 1);
    return IwasawaSeries(prime_, std::move(c));
}

IwasawaSeries IwasawaSeries::invert() const {
    if (c_[0].is_zero()) throw NotAUnit("invert: constant term vanishes at precision");
    // Solve g * f = 1 coefficientwise.
    PadicNumber inv0 = c_[0].inv();
    std::vector<PadicNumber> g(t_prec_ + 1, PadicNumber::zero(prime_));
    g[0] = inv0;
    for (int k = 1; k <= t_prec_; ++k) {
        PadicNumber acc = PadicNumber::zero(prime_);
        for (int i = 1; i <= k; ++i)
            acc = PadicNumber::add_raw(acc, PadicNumber::mul_raw(c_[i], g[k - i]));
        g[k] = PadicNumber::mul_raw(-acc, inv0);
    }
    return IwasawaSeries(prime_, std::move(g));
}

IwasawaSeries IwasawaSeries::compose(const IwasawaSeries& phi) const {
    if (!phi.coeff(0).is_zero()) throw Error("compose: substitution must fix T = 0");
    IwasawaSeries acc = constant(c_[t_prec_], std::min(t_prec_, phi.t_prec_));
    for (int i = t_prec_ - 1; i >= 0; --i) {
        acc = acc * phi;
        acc = acc + constant(c_[i], acc.t_prec());
    }
    return acc;
}

IwasawaSeries IwasawaSeries::one_plus_t_pow_minus_one(long p, long a, int t_prec) {
    int m = tprec_or_default(t_prec);
    if (a == 0) return zero(p, m);
    bool inv = a < 0;
    long e = inv ? -a : a;
    // (1+T)^e by binary powering on truncated series.
    IwasawaSeries base = variable(p, m) + one(p, m);
    IwasawaSeries acc = one(p, m);
    while (e > 0) {
        if (e & 1) acc = (acc * base).truncate(m);
        base = (base * base).truncate(m);
        e >>= 1;
    }
    if (inv) acc = acc.invert();
    return acc - one(p, m);
}

PadicNumber IwasawaSeries::evaluate(const PadicNumber& x) const {
    if (!x.is_zero() && x.valuation() < 1) throw Error("evaluate: point must satisfy v(x) >= 1");
    PadicNumber acc = c_[t_prec_];
    for (int i = t_prec_ - 1; i >= 0; --i) acc = PadicNumber::add_raw(PadicNumber::mul_raw(acc, x), c_[i]);
    // Tail O(T^(M+1)) contributes O(x^(M+1)) shifted by the coefficient content.
    long tail_content = 0;
    for (const auto& a : c_)
        if (!a.is_zero()) tail_content = std::min(tail_content, a.valuation());
    long xv = x.is_zero() ? x.abs_precision() : x.valuation();
    long tail = std::min<long>(PadicNumber::kExact, (t_prec_ + 1) * xv + tail_content);
    return PadicNumber::add_raw(acc, PadicNumber::zero(prime_, tail));
}

bool IwasawaSeries::equals_at_precision(const IwasawaSeries& o) const {
    int m = std::min(t_prec_, o.t_prec_);
    for (int i = 0; i <= m; ++i)
        if (!c_[i].equals(o.c_[i])) return false;
    return true;
}

std::string IwasawaSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= t_prec_; ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].str() << ")";
        if (i == 1) os << "*T";
        if (i > 1) os << "*T^" << i;
        first = false;
    }
    if (first) os << "0";
    os << " + O(T^" << t_prec_ + 1 << ")";
    return os.str();
}

IwasawaSeries WeierstrassData::recombine(long p, int t_prec) const {
    IwasawaSeries poly = IwasawaSeries::zero(p, t_prec);
    for (size_t i = 0; i < distinguished.size(); ++i)
        poly = poly + IwasawaSeries::monomial(p, distinguished[i], static_cast<int>(i), t_prec);
    return (poly * unit).scale_p(mu);
}

WeierstrassData weierstrass_prepare(const IwasawaSeries& f) {
    long p = f.prime();
    long mu = f.content_valuation();  // throws IndeterminateAtPrecision when empty
    if (mu < 0) throw Error("weierstrass_prepare: series is not integral up to p-powers");
    IwasawaSeries g = f.scale_p(-mu);
    int m = g.t_prec();
    int d = -1;
    for (int i = 0; i <= m; ++i) {
        if (!g.coeff(i).is_zero() && g.coeff(i).valuation() == 0) {
            d = i;
            break;
        }
    }
    if (d < 0) throw IndeterminateAtPrecision("weierstrass_prepare: no unit coefficient visible");

    // Classical division of T^d by g: T^d = q*g + r with deg r < d. The
    // iteration q <- B^{-1}(tau(T^d) - tau(qL)) contracts p-adically because
    // every coefficient of L is divisible by p.
    auto tau = [&](const IwasawaSeries& s) {
        std::vector<PadicNumber> c;
        for (int i = d; i <= s.t_prec(); ++i) c.push_back(s.coeff(i));
        if (c.empty()) c.push_back(PadicNumber::zero(p));
        return IwasawaSeries(p, std::move(c));
    };
    std::vector<PadicNumber> lo(std::max(d, 1), PadicNumber::zero(p));
    for (int i = 0; i < d; ++i) lo[i] = g.coeff(i);
    IwasawaSeries low_part(p, std::move(lo));
    IwasawaSeries b = tau(g);
    IwasawaSeries binv = b.invert();
    IwasawaSeries target = tau(IwasawaSeries::monomial(p, PadicNumber::one(p), d, m));

    IwasawaSeries q = binv * target;
    long max_iter = static_cast<long>(Precision::default_digits) * (m + 2) + 8;
    for (long it = 0; it < max_iter; ++it) {
        IwasawaSeries qn = binv * (target - tau((q * low_part).truncate(m)));
        qn = qn.truncate(q.t_prec());
        if (qn.equals_at_precision(q)) {
            q = qn;
            break;
        }
        q = qn;
        if (it + 1 == max_iter) throw PrecisionExhausted("weierstrass division did not stabilize");
    }

    // P = T^d - r = q*g is the distinguished polynomial.
    IwasawaSeries qg = (q * g).truncate(m);
    WeierstrassData w;
    w.mu = mu;
    w.distinguished.assign(d + 1, PadicNumber::zero(p));
    w.distinguished[d] = PadicNumber::one(p);
    for (int i = 0; i < d; ++i) w.distinguished[i] = qg.coeff(i);
    w.unit = q.invert();
    return w;
}

}  // namespace iwasawa
