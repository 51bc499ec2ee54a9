#pragma once

#include <vector>

#include "iwasawa/complex.hpp"
#include "iwasawa/fraction.hpp"
#include "iwasawa/padic.hpp"

namespace iwasawa {

// Field abstractions for the torsion engine.
struct QpField {
    using Elem = PadicNumber;
    long p;
    Elem zero() const { return PadicNumber::zero(p); }
    Elem one() const { return PadicNumber::one(p); }
    static Elem add(const Elem& a, const Elem& b) { return PadicNumber::add_raw(a, b); }
    static Elem sub(const Elem& a, const Elem& b) { return PadicNumber::add_raw(a, -b); }
    static Elem mul(const Elem& a, const Elem& b) { return PadicNumber::mul_raw(a, b); }
    static Elem div(const Elem& a, const Elem& b) { return a / b; }
    static Elem neg(const Elem& a) { return -a; }
    static bool is_zero(const Elem& a) { return a.is_zero(); }
    // Smaller valuation pivots first.
    static bool better_pivot(const Elem& a, const Elem& b) {
        if (b.is_zero()) return !a.is_zero();
        if (a.is_zero()) return false;
        return a.valuation() < b.valuation();
    }
};

struct QGammaField {
    using Elem = LambdaFraction;
    long p;
    Elem zero() const { return LambdaFraction::zero_value(p); }
    Elem one() const { return LambdaFraction::one(p); }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem div(const Elem& a, const Elem& b) { return a / b; }
    static Elem neg(const Elem& a) { return -a; }
    static bool is_zero(const Elem& a) { return a.is_zero(); }
    static bool better_pivot(const Elem& a, const Elem& b) {
        if (b.is_zero()) return !a.is_zero();
        if (a.is_zero()) return false;
        if (a.t_order() != b.t_order()) return a.t_order() < b.t_order();
        return a.leading_coefficient().valuation() < b.leading_coefficient().valuation();
    }
};

template <class F>
struct FieldMatrix {
    int rows = 0, cols = 0;
    std::vector<typename F::Elem> a;

    FieldMatrix() = default;
    FieldMatrix(const F& f, int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, f.zero()) {}
    typename F::Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const typename F::Elem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    FieldMatrix select_cols(const std::vector<int>& idx) const {
        FieldMatrix r;
        r.rows = rows;
        r.cols = static_cast<int>(idx.size());
        r.a.reserve(static_cast<size_t>(r.rows) * r.cols);
        for (int i = 0; i < rows; ++i)
            for (int j : idx) r.a.push_back(at(i, j));
        return r;
    }
};

template <class F>
typename F::Elem field_det(const F& f, FieldMatrix<F> m) {
    if (m.rows != m.cols) throw Error("det of non-square matrix");
    int n = m.rows;
    typename F::Elem det = f.one();
    bool negate = false;
    for (int k = 0; k < n; ++k) {
        int bi = -1, bj = -1;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                if (F::is_zero(m.at(i, j))) continue;
                if (bi < 0 || F::better_pivot(m.at(i, j), m.at(bi, bj))) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) return f.zero();
        if (bi != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(bi, j));
            negate = !negate;
        }
        if (bj != k) {
            for (int i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, bj));
            negate = !negate;
        }
        const typename F::Elem piv = m.at(k, k);
        det = F::mul(det, piv);
        for (int i = k + 1; i < n; ++i) {
            if (F::is_zero(m.at(i, k))) continue;
            typename F::Elem c = F::div(m.at(i, k), piv);
            for (int j = k; j < n; ++j) m.at(i, j) = F::sub(m.at(i, j), F::mul(c, m.at(k, j)));
        }
    }
    return negate ? F::neg(det) : det;
}

// Data of a bounded based complex over the field F together with chosen
// homology bases (empty matrices for acyclic spots).
template <class F>
struct TorsionInput {
    int lo = 0;
    std::vector<int> dims;
    std::vector<FieldMatrix<F>> diffs;     // diffs[k]: degree lo+k -> lo+k+1
    std::vector<FieldMatrix<F>> homology;  // homology[k]: dims[k] x h_k columns
};

struct TorsionFailure : Error {
    explicit TorsionFailure(const std::string& w) : Error(w) {}
};

// Torsion of a based complex with chosen homology bases: the alternating
// product prod_i det([d(b_{i-1}) | h_i | b_i])^((-1)^(i+1)) in Milnor's
// ordering, with fresh basis vectors b_i drawn from the standard basis.
template <class F>
typename F::Elem milnor_torsion(const F& f, const TorsionInput<F>& in) {
    typename F::Elem tau = f.one();
    FieldMatrix<F> carried;  // d of the chosen lifts from one degree below
    int ndeg = static_cast<int>(in.dims.size());
    for (int k = 0; k < ndeg; ++k) {
        int degree = in.lo + k;
        int n = in.dims[k];
        const FieldMatrix<F>* h = (k < static_cast<int>(in.homology.size())) ? &in.homology[k] : nullptr;
        int hc = h ? h->cols : 0;
        int pc = carried.cols;
        int sc = n - hc - pc;
        if (sc < 0) throw TorsionFailure("homology dimensions inconsistent with ranks");

        // Find pivot rows of [carried | homology]; remaining rows provide the
        // fresh basis vectors.
        FieldMatrix<F> w(f, n, pc + hc);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < pc; ++j) w.at(i, j) = carried.at(i, j);
            for (int j = 0; j < hc; ++j) w.at(i, pc + j) = h->at(i, j);
        }
        std::vector<bool> used(n, false);
        for (int j = 0; j < w.cols; ++j) {
            int piv = -1;
            for (int i = 0; i < n; ++i) {
                if (used[i] || F::is_zero(w.at(i, j))) continue;
                if (piv < 0 || F::better_pivot(w.at(i, j), w.at(piv, j))) piv = i;
            }
            if (piv < 0) throw TorsionFailure("image/homology columns are dependent");
            used[piv] = true;
            typename F::Elem pv = w.at(piv, j);
            for (int jj = j + 1; jj < w.cols; ++jj) {
                if (F::is_zero(w.at(piv, jj))) continue;
                typename F::Elem c = F::div(w.at(piv, jj), pv);
                for (int i = 0; i < n; ++i)
                    if (!used[i] || i == piv) w.at(i, jj) = F::sub(w.at(i, jj), F::mul(c, w.at(i, j)));
            }
        }
        std::vector<int> fresh;
        for (int i = 0; i < n && static_cast<int>(fresh.size()) < sc; ++i)
            if (!used[i]) fresh.push_back(i);
        if (static_cast<int>(fresh.size()) != sc) throw TorsionFailure("could not complete basis");

        FieldMatrix<F> m(f, n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < pc; ++j) m.at(i, j) = carried.at(i, j);
            for (int j = 0; j < hc; ++j) m.at(i, pc + j) = h->at(i, j);
        }
        for (int j = 0; j < sc; ++j) m.at(fresh[j], pc + hc + j) = f.one();
        typename F::Elem det = field_det(f, m);
        if (F::is_zero(det)) throw TorsionFailure("degenerate basis matrix");
        if ((degree + 1) % 2 == 0)
            tau = F::mul(tau, det);
        else
            tau = F::div(tau, det);

        // push the chosen lifts forward
        if (k + 1 < ndeg) {
            carried = in.diffs[k].select_cols(fresh);
        } else if (sc != 0) {
            throw TorsionFailure("nonzero lifts leaving the top degree");
        }
    }
    if (carried.cols != 0) throw TorsionFailure("dangling image columns past the top degree");
    return tau;
}

// Route B input: the complex over Q(Gamma) with no homology (requires
// acyclicity, i.e. torsion cohomology over Lambda).
TorsionInput<QGammaField> generic_fiber_input(const BasedComplex& c);

}  // namespace iwasawa
