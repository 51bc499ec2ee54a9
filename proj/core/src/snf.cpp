#include "iwasawa/snf.hpp"

#include <algorithm>

namespace iwasawa {

ZpMatrix ZpMatrix::identity(long p, int prec, int n) {
    ZpMatrix m(p, prec, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void ZpMatrix::reduce() {
    BigInt mod = modulus();
    for (auto& x : a) {
        x %= mod;
        if (x < 0) x += mod;
    }
}

ZpMatrix ZpMatrix::mul(const ZpMatrix& o) const {
    ZpMatrix r(p, std::min(prec, o.prec), rows, o.cols);
    BigInt mod = r.modulus();
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const BigInt& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j) {
                r.at(i, j) += x * o.at(k, j);
            }
        }
    r.reduce();
    return r;
}

ZpMatrix ZpMatrix::transpose() const {
    ZpMatrix r(p, prec, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

ZpMatrix ZpMatrix::select_cols(const std::vector<int>& idx) const {
    ZpMatrix r(p, prec, rows, static_cast<int>(idx.size()));
    for (int i = 0; i < rows; ++i)
        for (size_t j = 0; j < idx.size(); ++j) r.at(i, static_cast<int>(j)) = at(i, idx[j]);
    return r;
}

ZpMatrix ZpMatrix::select_rows(const std::vector<int>& idx) const {
    ZpMatrix r(p, prec, static_cast<int>(idx.size()), cols);
    for (size_t i = 0; i < idx.size(); ++i)
        for (int j = 0; j < cols; ++j) r.at(static_cast<int>(i), j) = at(idx[i], j);
    return r;
}

ZpMatrix ZpMatrix::hstack(const ZpMatrix& o) const {
    ZpMatrix r(p, std::min(prec, o.prec), rows, cols + o.cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
    }
    return r;
}

bool ZpMatrix::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

int ZpMatrix::val(int i, int j) const {
    const BigInt& x = at(i, j);
    if (x == 0) return prec;
    return static_cast<int>(std::min<long>(val_of(x, p), prec));
}

int SmithNF::certified_rank(int guard) const {
    int prec = U.prec;
    int r = 0;
    for (int e : exps) {
        if (e >= prec) continue;
        if (e >= prec - guard)
            throw PrecisionExhausted("elementary divisor p^" + std::to_string(e) +
                                     " cannot be certified at precision " + std::to_string(prec));
        ++r;
    }
    return r;
}

SmithNF smith(const ZpMatrix& A) {
    long p = A.p;
    int prec = A.prec;
    SmithNF s;
    ZpMatrix D = A;
    D.reduce();
    s.U = ZpMatrix::identity(p, prec, A.rows);
    s.Uinv = s.U;
    s.V = ZpMatrix::identity(p, prec, A.cols);
    s.Vinv = s.V;
    BigInt mod = pow_int(p, prec);

    int n = std::min(A.rows, A.cols);
    s.exps.assign(n, prec);

    for (int k = 0; k < n; ++k) {
        // pivot: entry of smallest valuation in the trailing block
        int bi = -1, bj = -1, bv = prec;
        for (int i = k; i < A.rows; ++i)
            for (int j = k; j < A.cols; ++j) {
                int v = D.val(i, j);
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break;  // block vanishes at precision
        s.exps[k] = bv;
        s.lost = std::max(s.lost, bv);

        if (bi != k) {
            for (int j = 0; j < A.cols; ++j) std::swap(D.at(k, j), D.at(bi, j));
            for (int j = 0; j < A.rows; ++j) {
                std::swap(s.U.at(k, j), s.U.at(bi, j));
                std::swap(s.Uinv.at(j, k), s.Uinv.at(j, bi));
            }
        }
        if (bj != k) {
            for (int i = 0; i < A.rows; ++i) std::swap(D.at(i, k), D.at(i, bj));
            for (int i = 0; i < A.cols; ++i) {
                std::swap(s.V.at(i, k), s.V.at(i, bj));
                std::swap(s.Vinv.at(k, i), s.Vinv.at(bj, i));
            }
        }

        // normalize pivot to a pure p power: divide row k by the unit part
        BigInt pe = pow_int(p, bv);
        BigInt u = (D.at(k, k) / pe) % mod;
        if (u < 0) u += mod;
        BigInt uinv = inv_mod_pk(u, p, prec);
        for (int j = 0; j < A.cols; ++j) D.at(k, j) = (D.at(k, j) * uinv) % mod;
        for (int j = 0; j < A.rows; ++j) {
            s.U.at(k, j) = (s.U.at(k, j) * uinv) % mod;
            s.Uinv.at(j, k) = (s.Uinv.at(j, k) * u) % mod;
        }

        // clear column k below/above and row k right of the pivot
        for (int i = 0; i < A.rows; ++i) {
            if (i == k || D.at(i, k) == 0) continue;
            BigInt c = D.at(i, k) / pe;  // exact: pivot has minimal valuation
            for (int j = 0; j < A.cols; ++j) {
                D.at(i, j) = (D.at(i, j) - c * D.at(k, j)) % mod;
                if (D.at(i, j) < 0) D.at(i, j) += mod;
            }
            for (int j = 0; j < A.rows; ++j) {
                s.U.at(i, j) = (s.U.at(i, j) - c * s.U.at(k, j)) % mod;
                if (s.U.at(i, j) < 0) s.U.at(i, j) += mod;
                s.Uinv.at(j, k) = (s.Uinv.at(j, k) + c * s.Uinv.at(j, i)) % mod;
            }
        }
        for (int j = 0; j < A.cols; ++j) {
            if (j == k || D.at(k, j) == 0) continue;
            BigInt c = D.at(k, j) / pe;
            for (int i = 0; i < A.rows; ++i) {
                D.at(i, j) = (D.at(i, j) - c * D.at(i, k)) % mod;
                if (D.at(i, j) < 0) D.at(i, j) += mod;
            }
            for (int i = 0; i < A.cols; ++i) {
                s.V.at(i, j) = (s.V.at(i, j) - c * s.V.at(i, k)) % mod;
                if (s.V.at(i, j) < 0) s.V.at(i, j) += mod;
                s.Vinv.at(k, i) = (s.Vinv.at(k, i) + c * s.Vinv.at(j, i)) % mod;
            }
        }
    }
    return s;
}

ZpMatrix kernel_basis(const SmithNF& s, const ZpMatrix& A) {
    std::vector<int> idx;
    for (int j = 0; j < A.cols; ++j) {
        if (j >= s.diag_len() || s.exps[j] >= A.prec) idx.push_back(j);
    }
    return s.V.select_cols(idx);
}

std::vector<BigInt> solve_integral(const SmithNF& s, const ZpMatrix& A, const std::vector<BigInt>& b) {
    long p = A.p;
    int prec = A.prec;
    BigInt mod = pow_int(p, prec);
    // U A V = D, so x = V y with D y = U b.
    std::vector<BigInt> ub(A.rows, 0);
    for (int i = 0; i < A.rows; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < A.rows; ++j) acc += s.U.at(i, j) * b[j];
        ub[i] = acc % mod;
        if (ub[i] < 0) ub[i] += mod;
    }
    std::vector<BigInt> y(A.cols, 0);
    for (int i = 0; i < A.rows; ++i) {
        int e = (i < s.diag_len()) ? s.exps[i] : prec;
        if (e >= prec) {
            if (ub[i] != 0 && val_of(ub[i], p) < prec - 1)
                throw Error("solve_integral: inconsistent system");
            continue;
        }
        BigInt pe = pow_int(p, e);
        if (i >= s.diag_len()) throw Error("solve_integral: inconsistent system");
        if (ub[i] % pe != 0) throw Error("solve_integral: no integral solution");
        y[i] = ub[i] / pe;
    }
    std::vector<BigInt> x(A.cols, 0);
    for (int i = 0; i < A.cols; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < A.cols; ++j) acc += s.V.at(i, j) * y[j];
        x[i] = acc % mod;
        if (x[i] < 0) x[i] += mod;
    }
    return x;
}

long lattice_quotient_length(const ZpMatrix& L, const ZpMatrix& M, int guard) {
    // Express the generators of M in terms of a basis of L, then sum the
    // elementary divisor exponents.
    if (L.cols == 0) return M.is_zero() ? 0 : -1;
    SmithNF sl = smith(L);
    ZpMatrix X(L.p, L.prec, L.cols, M.cols);
    for (int j = 0; j < M.cols; ++j) {
        std::vector<BigInt> b(M.rows);
        for (int i = 0; i < M.rows; ++i) b[i] = M.at(i, j);
        std::vector<BigInt> x = solve_integral(sl, L, b);
        for (int i = 0; i < L.cols; ++i) X.at(i, j) = x[i];
    }
    SmithNF sx = smith(X);
    long len = 0;
    int full = std::min(X.rows, X.cols);
    int rank = 0;
    for (int e : sx.exps) {
        if (e >= X.prec) continue;
        if (e >= X.prec - guard) throw PrecisionExhausted("quotient length not certifiable");
        ++rank;
        len += e;
    }
    if (rank < X.rows) return -1;  // quotient has a free part
    (void)full;
    return len;
}

}  // namespace iwasawa
