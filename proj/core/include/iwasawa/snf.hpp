#pragma once

#include <vector>

#include "iwasawa/padic.hpp"

namespace iwasawa {

// Dense matrix over Z/p^prec, the working ring for all Z_p linear algebra.
struct ZpMatrix {
    long p = 0;
    int prec = 0;
    int rows = 0, cols = 0;
    std::vector<BigInt> a;

    ZpMatrix() = default;
    ZpMatrix(long p_, int prec_, int rows_, int cols_)
        : p(p_), prec(prec_), rows(rows_), cols(cols_), a(static_cast<size_t>(rows_) * cols_, 0) {}

    static ZpMatrix identity(long p, int prec, int n);

    BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    BigInt modulus() const { return pow_int(p, prec); }
    void reduce();

    ZpMatrix mul(const ZpMatrix& o) const;
    ZpMatrix operator*(const ZpMatrix& o) const { return mul(o); }
    ZpMatrix transpose() const;
    // Columns with the given indices.
    ZpMatrix select_cols(const std::vector<int>& idx) const;
    ZpMatrix select_rows(const std::vector<int>& idx) const;
    ZpMatrix hstack(const ZpMatrix& o) const;
    bool is_zero() const;

    // Valuation of an entry, capped at prec.
    int val(int i, int j) const;
};

// U * A * V = diag(p^exps) with U, V invertible mod p^prec. exps[i] == prec
// means the divisor is indistinguishable from zero. `lost` bounds the digits
// of certification spent on exact divisions during the reduction.
struct SmithNF {
    ZpMatrix U, Uinv, V, Vinv;
    std::vector<int> exps;
    int lost = 0;

    int diag_len() const { return static_cast<int>(exps.size()); }
    // Number of divisors certifiably nonzero; throws PrecisionExhausted when a
    // divisor sits inside the uncertifiable band [prec - guard, prec).
    int certified_rank(int guard) const;
};

SmithNF smith(const ZpMatrix& A);

// Lattice kernel {x : Ax = 0 mod p^prec} basis columns (the visible kernel).
ZpMatrix kernel_basis(const SmithNF& s, const ZpMatrix& A);

// Solve A x = b exactly over Z_p at precision; throws when no integral
// solution exists. Returns one solution.
std::vector<BigInt> solve_integral(const SmithNF& s, const ZpMatrix& A, const std::vector<BigInt>& b);

// Length of L/M where L, M are lattices given by generator columns in the
// same ambient module, M inside L. Returns -1 when the quotient is infinite.
long lattice_quotient_length(const ZpMatrix& L, const ZpMatrix& M, int guard);

}  // namespace iwasawa
