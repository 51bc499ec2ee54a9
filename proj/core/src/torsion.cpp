#include "iwasawa/torsion.hpp"

namespace iwasawa {

TorsionInput<QGammaField> generic_fiber_input(const BasedComplex& c) {
    QGammaField f{c.prime()};
    TorsionInput<QGammaField> in;
    in.lo = c.lo();
    int n = c.hi() - c.lo() + 1;
    in.dims.resize(n);
    for (int k = 0; k < n; ++k) in.dims[k] = c.rank(c.lo() + k);
    for (int k = 0; k + 1 < n; ++k) {
        const SeriesMatrix& d = c.diff(c.lo() + k);
        FieldMatrix<QGammaField> m(f, d.rows, d.cols);
        for (int i = 0; i < d.rows; ++i)
            for (int j = 0; j < d.cols; ++j) {
                const IwasawaSeries& s = d.at(i, j);
                m.at(i, j) = s.vanishes_at_precision() ? f.zero() : LambdaFraction::from_series(s);
            }
        in.diffs.push_back(std::move(m));
    }
    in.homology.assign(n, FieldMatrix<QGammaField>());
    for (int k = 0; k < n; ++k) in.homology[k] = FieldMatrix<QGammaField>(f, in.dims[k], 0);
    return in;
}

}  // namespace iwasawa
