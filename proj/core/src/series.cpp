#include "mirrorgw/series.hpp"

namespace mgw {

const char* var_name(Var v) {
    switch (v) {
        case Var::u: return "u";
        case Var::q: return "q";
        case Var::z: return "z";
        case Var::w: return "w";
        case Var::t: return "t";
    }
    return "?";
}

QSeries series_revert(const QSeries& g) {
    if (!g[0].is_zero()) throw SeriesError("series_revert needs g(0) = 0");
    int ord = g.order();
    QSeries phi = QSeries::variable(Var::u, ord);
    // phi <- u * exp(-g(phi)); each pass fixes one more coefficient.
    for (int pass = 1; pass < ord; ++pass) {
        QSeries e = exp(-compose(g, phi));
        QSeries next(Var::u, ord);
        for (int k = 1; k <= ord; ++k) next[k] = e[k - 1];
        phi = std::move(next);
    }
    return phi;
}

}  // namespace mgw
