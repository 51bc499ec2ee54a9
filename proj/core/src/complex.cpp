#include "iwasawa/complex.hpp"

#include <sstream>

namespace iwasawa {

SeriesMatrix SeriesMatrix::identity(long p, int n) {
    SeriesMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = IwasawaSeries::one(p);
    return m;
}

SeriesMatrix SeriesMatrix::mul(const SeriesMatrix& o) const {
    SeriesMatrix r(p, rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const IwasawaSeries& x = at(i, k);
            if (x.vanishes_at_precision() && x.t_order() > x.t_prec()) {
                // still participates in precision accounting through add below
            }
            for (int j = 0; j < o.cols; ++j) {
                r.at(i, j) = r.at(i, j) + x * o.at(k, j);
            }
        }
    return r;
}

SeriesMatrix SeriesMatrix::add(const SeriesMatrix& o) const {
    SeriesMatrix r(p, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

SeriesMatrix SeriesMatrix::neg() const {
    SeriesMatrix r = *this;
    for (auto& x : r.a) x = -x;
    return r;
}

SeriesMatrix SeriesMatrix::scale(const IwasawaSeries& s) const {
    SeriesMatrix r = *this;
    for (auto& x : r.a) x = x * s;
    return r;
}

bool SeriesMatrix::vanishes_at_precision() const {
    for (const auto& x : a)
        if (!x.vanishes_at_precision()) return false;
    return true;
}

ZpMatrix SeriesMatrix::t_coefficient(int k, int digits) const {
    ZpMatrix m(p, digits, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const IwasawaSeries& s = at(i, j);
            if (k > s.t_prec()) throw IndeterminateAtPrecision("matrix entry too short in T");
            const PadicNumber& c = s.coeff(k);
            if (c.is_zero()) continue;
            if (c.valuation() < 0) throw Error("matrix entry is not integral");
            m.at(i, j) = c.residue(digits);
        }
    return m;
}

bool SeriesMatrix::is_integral() const {
    for (const auto& x : a)
        if (!x.is_integral()) return false;
    return true;
}

BasedComplex BasedComplex::build_unchecked(long p, int lo, std::vector<int> ranks,
                                           std::vector<SeriesMatrix> diffs) {
    BasedComplex c;
    c.p_ = p;
    c.lo_ = lo;
    c.ranks_ = std::move(ranks);
    c.d_ = std::move(diffs);
    return c;
}

BasedComplex BasedComplex::build_and_validate(long p, int lo, std::vector<int> ranks,
                                              std::vector<SeriesMatrix> diffs) {
    if (diffs.size() + 1 != ranks.size() && !(ranks.empty() && diffs.empty()))
        throw NotAComplex("need one differential per adjacent degree pair");
    for (size_t k = 0; k < diffs.size(); ++k) {
        if (diffs[k].rows != ranks[k + 1] || diffs[k].cols != ranks[k])
            throw NotAComplex("differential shape mismatch at degree " + std::to_string(lo + static_cast<int>(k)));
        if (!diffs[k].is_integral()) throw NotAComplex("differential entries must lie in Lambda");
    }
    for (size_t k = 0; k + 1 < diffs.size(); ++k) {
        SeriesMatrix sq = diffs[k + 1] * diffs[k];
        if (!sq.vanishes_at_precision())
            throw NotAComplex("D^2 != 0 at degree " + std::to_string(lo + static_cast<int>(k)));
    }
    return build_unchecked(p, lo, std::move(ranks), std::move(diffs));
}

int BasedComplex::rank(int degree) const {
    int k = degree - lo_;
    if (k < 0 || k >= static_cast<int>(ranks_.size())) return 0;
    return ranks_[k];
}

const SeriesMatrix& BasedComplex::diff(int degree) const {
    int k = degree - lo_;
    if (k < 0 || k + 1 >= static_cast<int>(ranks_.size())) {
        zero_ = SeriesMatrix(p_, rank(degree + 1), rank(degree));
        return zero_;
    }
    return d_[k];
}

int BasedComplex::total_even_rank() const {
    int t = 0;
    for (size_t k = 0; k < ranks_.size(); ++k)
        if ((lo_ + static_cast<int>(k)) % 2 == 0) t += ranks_[k];
    return t;
}

int BasedComplex::total_odd_rank() const {
    int t = 0;
    for (size_t k = 0; k < ranks_.size(); ++k)
        if ((lo_ + static_cast<int>(k)) % 2 != 0) t += ranks_[k];
    return t;
}

BasedComplex BasedComplex::cone_of_t() const {
    if (empty()) return *this;
    // cone(f)^i = C^i + C^(i+1) with differential [[d^i, f^i],[0, -d^(i+1)]],
    // here f = multiplication by T.
    int clo = lo_ - 1;
    int n = static_cast<int>(ranks_.size()) + 1;
    std::vector<int> ranks(n);
    for (int k = 0; k < n; ++k) {
        int deg = clo + k;
        ranks[k] = rank(deg) + rank(deg + 1);
    }
    std::vector<SeriesMatrix> diffs;
    IwasawaSeries tvar = IwasawaSeries::variable(p_);
    for (int k = 0; k + 1 < n; ++k) {
        int deg = clo + k;
        int r0 = rank(deg), r1 = rank(deg + 1), r2 = rank(deg + 2);
        SeriesMatrix m(p_, r1 + r2, r0 + r1);
        const SeriesMatrix& dlow = diff(deg);
        const SeriesMatrix& dhigh = diff(deg + 1);
        for (int i = 0; i < r1; ++i)
            for (int j = 0; j < r0; ++j) m.at(i, j) = dlow.at(i, j);
        for (int i = 0; i < r1; ++i) m.at(i, r0 + i) = tvar;
        for (int i = 0; i < r2; ++i)
            for (int j = 0; j < r1; ++j) m.at(r1 + i, r0 + j) = -dhigh.at(i, j);
        diffs.push_back(std::move(m));
    }
    return build_unchecked(p_, clo, std::move(ranks), std::move(diffs));
}

BasedComplex BasedComplex::shift(int r) const {
    if (empty()) return *this;
    BasedComplex c = *this;
    c.lo_ = lo_ - r;
    if (r % 2 != 0)
        for (auto& m : c.d_) m = m.neg();
    return c;
}

BasedComplex BasedComplex::direct_sum(const BasedComplex& x, const BasedComplex& y) {
    if (x.empty()) return y;
    if (y.empty()) return x;
    long p = x.p_;
    int lo = std::min(x.lo_, y.lo_);
    int hi = std::max(x.hi(), y.hi());
    std::vector<int> ranks;
    std::vector<SeriesMatrix> diffs;
    for (int deg = lo; deg <= hi; ++deg) ranks.push_back(x.rank(deg) + y.rank(deg));
    for (int deg = lo; deg < hi; ++deg) {
        int r0x = x.rank(deg), r0y = y.rank(deg);
        int r1x = x.rank(deg + 1), r1y = y.rank(deg + 1);
        SeriesMatrix m(p, r1x + r1y, r0x + r0y);
        const SeriesMatrix& dx = x.diff(deg);
        const SeriesMatrix& dy = y.diff(deg);
        for (int i = 0; i < r1x; ++i)
            for (int j = 0; j < r0x; ++j) m.at(i, j) = dx.at(i, j);
        for (int i = 0; i < r1y; ++i)
            for (int j = 0; j < r0y; ++j) m.at(r1x + i, r0x + j) = dy.at(i, j);
        diffs.push_back(std::move(m));
    }
    return build_unchecked(p, lo, std::move(ranks), std::move(diffs));
}

std::string BasedComplex::summary() const {
    std::ostringstream os;
    os << "degrees [" << lo_ << ", " << hi() << "], ranks";
    for (int r : ranks_) os << " " << r;
    return os.str();
}

Trivialization Trivialization::from_unit_series(const IwasawaSeries& u) {
    if (!u.is_integral()) throw NotAUnit("trivialization unit must lie in Lambda");
    if (u.coeff(0).is_zero() || u.coeff(0).valuation() != 0)
        throw NotAUnit("trivialization unit must have unit constant term");
    return {u};
}

Trivialization Trivialization::identity(long p) {
    return {IwasawaSeries::one(p)};
}

}  // namespace iwasawa
