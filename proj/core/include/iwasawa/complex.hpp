#pragma once

#include <optional>
#include <vector>

#include "iwasawa/fraction.hpp"
#include "iwasawa/series.hpp"
#include "iwasawa/snf.hpp"

namespace iwasawa {

struct SeriesMatrix {
    long p = 0;
    int rows = 0, cols = 0;
    std::vector<IwasawaSeries> a;

    SeriesMatrix() = default;
    SeriesMatrix(long p_, int rows_, int cols_)
        : p(p_), rows(rows_), cols(cols_), a(static_cast<size_t>(rows_) * cols_, IwasawaSeries::zero(p_)) {}

    static SeriesMatrix identity(long p, int n);

    IwasawaSeries& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const IwasawaSeries& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    SeriesMatrix mul(const SeriesMatrix& o) const;
    SeriesMatrix operator*(const SeriesMatrix& o) const { return mul(o); }
    SeriesMatrix add(const SeriesMatrix& o) const;
    SeriesMatrix neg() const;
    SeriesMatrix scale(const IwasawaSeries& s) const;
    bool vanishes_at_precision() const;

    // Constant and linear T coefficients as Z_p matrices at the given number
    // of digits.
    ZpMatrix t_coefficient(int k, int digits) const;
    bool is_integral() const;
};

// Bounded complex of based free Lambda modules, differentials D^i mapping
// degree i to i+1. Basis convention everywhere: standard basis per degree,
// ordered by degree then index.
class BasedComplex {
  public:
    BasedComplex() : p_(0), lo_(0) {}

    // Validates D^(i+1) D^i = 0 at precision and integrality of all entries.
    static BasedComplex build_and_validate(long p, int lo, std::vector<int> ranks,
                                           std::vector<SeriesMatrix> diffs);
    // Trusted constructor for internally generated complexes.
    static BasedComplex build_unchecked(long p, int lo, std::vector<int> ranks,
                                        std::vector<SeriesMatrix> diffs);

    long prime() const { return p_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    bool empty() const { return ranks_.empty(); }
    int rank(int degree) const;
    // D^degree: rank(degree+1) x rank(degree); identically zero outside range.
    const SeriesMatrix& diff(int degree) const;
    int total_even_rank() const;
    int total_odd_rank() const;
    bool rank_balanced() const { return total_even_rank() == total_odd_rank(); }

    // cone(T: C -> C): degree i part C^i + C^(i+1), differential
    // [[d, T],[0, -d[1]]].
    BasedComplex cone_of_t() const;
    BasedComplex shift(int r) const;
    static BasedComplex direct_sum(const BasedComplex& x, const BasedComplex& y);

    std::string summary() const;

  private:
    long p_;
    int lo_;
    std::vector<int> ranks_;
    std::vector<SeriesMatrix> d_;  // d_[k] maps degree lo+k -> lo+k+1
    mutable SeriesMatrix zero_;
};

// Unit of Lambda acting on the standard based identification det(C) = 1;
// only attachable to rank balanced complexes.
struct Trivialization {
    IwasawaSeries unit;

    static Trivialization from_unit_series(const IwasawaSeries& u);
    static Trivialization identity(long p);
    PadicNumber at_zero() const { return unit.coeff(0); }
    Trivialization inverse() const { return {unit.invert()}; }
    Trivialization times(const Trivialization& o) const { return {unit * o.unit}; }
    Trivialization times(const IwasawaSeries& s) const { return {unit * s}; }
};

}  // namespace iwasawa
