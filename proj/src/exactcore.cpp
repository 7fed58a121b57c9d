#include "folindex/exactcore.hpp"

#include "folindex/errors.hpp"

namespace folindex {

MultiPoly substitute(const MultiPoly& poly, const std::map<std::string, MultiPoly>& assignment) {
    std::vector<const MultiPoly*> target;
    const std::vector<std::string>* out_vars = nullptr;
    for (const auto& v : poly.vars()) {
        auto it = assignment.find(v);
        if (it == assignment.end()) throw PreconditionError("unassigned-variable", "variable " + v + " is not assigned");
        target.push_back(&it->second);
        if (!it->second.vars().empty()) {
            if (out_vars && *out_vars != it->second.vars())
                throw PreconditionError("variable-mismatch", "substitution targets use different variable lists");
            out_vars = &it->second.vars();
        }
    }
    const std::vector<std::string> vars = out_vars ? *out_vars : std::vector<std::string>{};
    std::vector<std::vector<MultiPoly>> powers(target.size());
    MultiPoly one = MultiPoly::constant(vars, FieldElem(1));
    MultiPoly acc(vars, poly.field());
    for (const auto& [e, c] : poly.terms()) {
        MultiPoly t = MultiPoly::constant(vars, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) {
                pw.push_back(one);
                pw.push_back(*target[i]);
            }
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * pw[1]);
            t = t * pw[static_cast<size_t>(e[i])];
        }
        acc += t;
    }
    return acc;
}

PowerSeries substitute(const MultiPoly& poly, const std::map<std::string, PowerSeries>& assignment,
                       bool leading_required) {
    std::vector<PowerSeries> at;
    for (const auto& v : poly.vars()) {
        auto it = assignment.find(v);
        if (it == assignment.end()) throw PreconditionError("unassigned-variable", "variable " + v + " is not assigned");
        if (!at.empty() && at.front().truncation() != it->second.truncation())
            throw PreconditionError("truncation-mismatch", "series targets have different truncation orders");
        at.push_back(it->second);
    }
    PowerSeries s = substitute_series(poly, at);
    if (leading_required && !poly.is_zero() && s.is_zero_to_truncation())
        throw PreconditionError("insufficient-precision",
                                "truncation order " + std::to_string(s.truncation()) +
                                    " too small to determine the leading term");
    return s;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    return resultant(f, g, f.var_index(var));
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("zero-input", "resultant of a zero polynomial");
    const int m = f.degree_in(var), n = g.degree_in(var);
    if (m == 0 && n == 0)
        throw PreconditionError("variable-absent", "variable " + f.vars()[static_cast<size_t>(var)] +
                                                      " occurs in neither input");
    const auto fc = f.coefficients_in(var), gc = g.coefficients_in(var);
    const int size = m + n;
    const auto& vars = f.vars();
    std::vector<std::vector<MultiPoly>> M(static_cast<size_t>(size), std::vector<MultiPoly>(static_cast<size_t>(size), MultiPoly(vars)));
    // Rows hold coefficients from the highest power down.
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = fc[static_cast<size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = gc[static_cast<size_t>(n - k)];

    // Bareiss fraction-free elimination.
    bool negate = false;
    MultiPoly prev = MultiPoly::constant(vars, FieldElem(1));
    for (int k = 0; k < size - 1; ++k) {
        const auto K = static_cast<size_t>(k);
        if (M[K][K].is_zero()) {
            size_t swap = K + 1;
            while (swap < static_cast<size_t>(size) && M[swap][K].is_zero()) ++swap;
            if (swap == static_cast<size_t>(size)) return MultiPoly(vars, common_field(f.field(), g.field()));
            std::swap(M[K], M[swap]);
            negate = !negate;
        }
        for (size_t i = K + 1; i < static_cast<size_t>(size); ++i) {
            for (size_t j = K + 1; j < static_cast<size_t>(size); ++j)
                M[i][j] = (M[K][K] * M[i][j] - M[i][K] * M[K][j]).exact_div(prev);
            M[i][K] = MultiPoly(vars);
        }
        prev = M[K][K];
    }
    MultiPoly det = M[static_cast<size_t>(size - 1)][static_cast<size_t>(size - 1)];
    return negate ? -det : det;
}

MultiPoly translate_to_origin(const MultiPoly& poly, const Point& p) {
    if (static_cast<int>(p.size()) != poly.nvars())
        throw PreconditionError("bad-point", "point dimension does not match variables");
    bool origin = true;
    for (const auto& c : p) origin = origin && c.is_zero();
    if (origin) return poly;
    std::map<std::string, MultiPoly> a;
    for (int i = 0; i < poly.nvars(); ++i)
        a.emplace(poly.vars()[static_cast<size_t>(i)],
                  MultiPoly::variable(poly.vars(), i) + MultiPoly::constant(poly.vars(), p[static_cast<size_t>(i)]));
    return substitute(poly, a);
}

MultiPoly homogenize(const MultiPoly& poly, const std::string& new_var, int degree) {
    if (degree < poly.total_degree())
        throw PreconditionError("degree-too-small", "homogenizing degree " + std::to_string(degree) +
                                                        " is below the total degree " + std::to_string(poly.total_degree()));
    std::vector<std::string> vars = poly.vars();
    for (const auto& v : vars)
        if (v == new_var) throw PreconditionError("variable-clash", "variable " + new_var + " already present");
    vars.push_back(new_var);
    MultiPoly r(vars, poly.field());
    for (const auto& [e, c] : poly.terms()) {
        Exponent h = e;
        h.push_back(degree - total_degree(e));
        r.add_term(h, c);
    }
    return r;
}

MultiPoly dehomogenize(const MultiPoly& poly, const std::string& var) {
    const auto k = static_cast<size_t>(poly.var_index(var));
    std::vector<std::string> vars = poly.vars();
    vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(k));
    MultiPoly r(vars, poly.field());
    for (const auto& [e, c] : poly.terms()) {
        Exponent d = e;
        d.erase(d.begin() + static_cast<std::ptrdiff_t>(k));
        r.add_term(d, c);
    }
    return r;
}

MultiPoly normalized(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p.leading_term().second.inverse() * p;
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int var) {
    const int db = b.degree_in(var);
    if (db < 0) throw std::domain_error("pseudo-remainder by zero");
    const MultiPoly lb = b.coefficients_in(var).back();
    MultiPoly r = a;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        const int dr = r.degree_in(var);
        const MultiPoly lr = r.coefficients_in(var).back();
        r = lb * r - lr.shift(var, dr - db) * b;
    }
    return r;
}

namespace {

// Highest-index variable that actually occurs in a or b; -1 if both are constants.
int main_variable(const MultiPoly& a, const MultiPoly& b) {
    for (int v = std::max(a.nvars(), b.nvars()) - 1; v >= 0; --v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return -1;
}

MultiPoly content_in(const MultiPoly& p, int var) {
    MultiPoly c(p.vars(), p.field());
    for (const auto& k : p.coefficients_in(var)) {
        if (k.is_zero()) continue;
        c = c.is_zero() ? normalized(k) : gcd(c, k);
        if (c.is_constant()) break;
    }
    return c;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a0, const MultiPoly& b0) {
    if (a0.is_zero()) return normalized(b0);
    if (b0.is_zero()) return normalized(a0);
    const int v = main_variable(a0, b0);
    const auto& vars = a0.vars().empty() ? b0.vars() : a0.vars();
    if (v < 0) return MultiPoly::constant(vars, FieldElem(1));
    // gcd = gcd(contents) * gcd(primitive parts) over the remaining variables.
    MultiPoly ca = content_in(a0, v), cb = content_in(b0, v);
    MultiPoly cg = gcd(ca, cb);
    MultiPoly a = a0.exact_div(ca), b = b0.exact_div(cb);
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (b.degree_in(v) > 0) {
        MultiPoly r = pseudo_remainder(a, b, v);
        a = std::move(b);
        if (r.is_zero()) {
            b = MultiPoly(vars);
            break;
        }
        b = normalized(r.exact_div(content_in(r, v)));
    }
    // b constant in v and nonzero: primitive parts are coprime.
    MultiPoly g = b.is_zero() ? a : MultiPoly::constant(vars, FieldElem(1));
    return normalized(cg * g);
}

bool is_squarefree(const MultiPoly& p) {
    if (p.is_zero()) return false;
    MultiPoly g = p;
    for (int i = 0; i < p.nvars() && !g.is_constant(); ++i) g = gcd(g, p.derivative(i));
    return g.is_constant();
}

}  // namespace folindex
