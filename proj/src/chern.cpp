#include "folindex/chern.hpp"

#include "folindex/errors.hpp"

namespace folindex {

ChowClass::ChowClass(int dim, std::vector<long> coeffs) : n(dim), c(std::move(coeffs)) {
    if (dim < 0) throw PreconditionError("bad-dimension", "ambient dimension must be non-negative");
    if (static_cast<int>(c.size()) > n + 1) {
        for (size_t i = static_cast<size_t>(n) + 1; i < c.size(); ++i)
            if (c[i] != 0) throw PreconditionError("bad-class", "class has terms above h^" + std::to_string(n));
    }
    c.resize(static_cast<size_t>(n) + 1, 0);
}

ChowClass ChowClass::one(int dim) { return ChowClass(dim, {1}); }

ChowClass ChowClass::line_bundle(int dim, long l) { return ChowClass(dim, dim >= 1 ? std::vector<long>{1, l} : std::vector<long>{1}); }

ChowClass ChowClass::tangent(int dim) {
    ChowClass r = one(dim);
    for (int i = 0; i <= dim; ++i) r = chow_mul(r, line_bundle(dim, 1));
    return r;
}

std::string ChowClass::to_string() const {
    std::string s;
    for (int i = 0; i <= n; ++i) {
        const long v = c[static_cast<size_t>(i)];
        if (v == 0) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "h" : "h^" + std::to_string(i));
        std::string num = (v == 1 || v == -1) && i > 0 ? "" : std::to_string(v < 0 ? -v : v);
        if (!num.empty() && !mono.empty()) num += "*";
        s += (s.empty() ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + ")) + num + mono;
    }
    return s.empty() ? "0" : s;
}

ChowClass chow_mul(const ChowClass& a, const ChowClass& b) {
    if (a.n != b.n) throw PreconditionError("dimension-mismatch", "Chow classes live on different projective spaces");
    ChowClass r(a.n, {});
    for (int i = 0; i <= a.n; ++i)
        for (int j = 0; i + j <= a.n; ++j) r.c[static_cast<size_t>(i + j)] += a[i] * b[j];
    return r;
}

long chow_integral(const ChowClass& a) { return a[a.n]; }

ChowClass chow_inverse_line(int dim, long l) {
    ChowClass r(dim, {});
    long p = 1;
    for (int i = 0; i <= dim; ++i, p *= -l) r.c[static_cast<size_t>(i)] = p;
    return r;
}

ChowClass chern_virtual_quotient(const ChowClass& cE, long l) { return chow_mul(cE, chow_inverse_line(cE.n, l)); }

long top_chern_twist(const ChowClass& cE, long l) {
    long s = 0, p = 1;
    for (int i = cE.n; i >= 0; --i, p *= -l) s += cE[i] * p;
    return s;
}

std::string CSMClass::to_string() const {
    std::string s = "(";
    for (size_t j = 0; j < alpha.size(); ++j) s += (j ? ", " : "") + std::to_string(alpha[j]);
    return s + ")";
}

CSMClass csm_projective_plane() { return {{3, 3, 1}}; }

long curve_euler_characteristic(long k, const std::vector<long>& milnor) {
    long chi = 3 * k - k * k;
    for (long mu : milnor) chi += mu;
    return chi;
}

CSMClass csm_curve(long k, const std::vector<long>& milnor) {
    if (k < 1) throw PreconditionError("bad-degree", "curve degree must be positive");
    return {{curve_euler_characteristic(k, milnor), k, 0}};
}

CSMClass csm_complement(long k, const std::vector<long>& milnor) {
    const CSMClass p = csm_projective_plane(), d = csm_curve(k, milnor);
    return {{p[0] - d[0], p[1] - d[1], p[2] - d[2]}};
}

ChowClass log_chern_snc(const std::vector<long>& degrees) {
    ChowClass r = ChowClass::tangent(2);
    for (long d : degrees) r = chern_virtual_quotient(r, d);
    return r;
}

long twisted_index_sum(const CSMClass& csm, long l) {
    long s = 0, p = 1;
    for (size_t j = 0; j < csm.alpha.size(); ++j, p *= -l) s += p * csm.alpha[j];
    return s;
}

}  // namespace folindex
