#pragma once

// Independent reference computations used only by tests.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folindex/exactcore.hpp"
#include "folindex/foliation.hpp"
#include "folindex/parser.hpp"
#include "folindex/indices.hpp"

namespace oracle {

// dim Q[x,y]_(x,y) / (gens) by linear algebra in Q[x,y]/m^k. The value of
// dim O/(I + m^k) stops changing exactly when m^k lies in I (Nakayama), so two
// equal consecutive values certify the colength. nullopt when k_max is reached
// first (not m-primary, or just large).
inline std::optional<long> colength(const std::vector<folindex::MultiPoly>& gens, int k_max = 24) {
    using folindex::Exponent;
    long prev = -1;
    for (int k = 1; k <= k_max; ++k) {
        std::map<Exponent, int> col;
        for (int d = 0; d < k; ++d)
            for (int i = d; i >= 0; --i) col.emplace(Exponent{i, d - i}, static_cast<int>(col.size()));
        const size_t ncols = col.size();
        std::vector<std::vector<mpq_class>> rows;
        for (const auto& g : gens)
            for (const auto& [m, mi] : col) {
                std::vector<mpq_class> row(ncols);
                bool any = false;
                for (const auto& [e, c] : g.terms()) {
                    Exponent s{e[0] + m[0], e[1] + m[1]};
                    if (s[0] + s[1] >= k) continue;
                    row[static_cast<size_t>(col.at(s))] = c.rational_value();
                    any = true;
                }
                (void)mi;
                if (any) rows.push_back(std::move(row));
            }
        // Rank by Gaussian elimination.
        size_t rank = 0;
        for (size_t c = 0; c < ncols && rank < rows.size(); ++c) {
            size_t piv = rank;
            while (piv < rows.size() && rows[piv][c] == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[rank]);
            for (size_t r = rank + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                const mpq_class f = rows[r][c] / rows[rank][c];
                for (size_t j = c; j < ncols; ++j) rows[r][j] -= f * rows[rank][j];
            }
            ++rank;
        }
        const long dim = static_cast<long>(ncols - rank);
        if (dim == prev) return dim;
        prev = dim;
    }
    return std::nullopt;
}

// Ideal-theoretic GSV of a tangent field (a, b) on a plane curve f = 0:
// dim O_C/(a, b) - dim O_C/(f_x, f_y).
inline std::optional<long> gsv_by_colength(const folindex::MultiPoly& f, const folindex::MultiPoly& a,
                                           const folindex::MultiPoly& b) {
    auto u = colength({f, a, b});
    auto v = colength({f, f.derivative(0), f.derivative(1)});
    if (!u || !v) return std::nullopt;
    return *u - *v;
}

// chi(D) through normalization: sum over components of 2 - 2g, minus (r - 1)
// per singular point, with g = (d-1)(d-2)/2 - sum delta and 2 delta = mu + r - 1.
// Milnor numbers come from the colength oracle, so singular points must be rational.
struct Component {
    std::string h;
    long degree;
};

inline long chi_by_normalization(const std::vector<Component>& comps) {
    using namespace folindex;
    const Point O{FieldElem(0), FieldElem(0)};
    auto mu = [](const MultiPoly& h) { return *colength({h.derivative(0), h.derivative(1)}); };
    MultiPoly D = MultiPoly::constant(kHomogeneousVars, FieldElem(1));
    for (const auto& c : comps) D *= parse_poly(c.h, kHomogeneousVars);
    long chi = 0;
    for (const auto& c : comps) {
        const MultiPoly H = parse_poly(c.h, kHomogeneousVars);
        long g = (c.degree - 1) * (c.degree - 2) / 2;
        if (c.degree >= 3)
            for (const auto& p : curve_singular_points(H)) {
                const MultiPoly h = localize(H, p);
                g -= p.conjugacy_size * (mu(h) + local_branch_count(h, O) - 1) / 2;
            }
        chi += 2 - 2 * g;
    }
    for (const auto& p : curve_singular_points(D)) chi -= p.conjugacy_size * (local_branch_count(localize(D, p), O) - 1);
    return chi;
}

}  // namespace oracle
