#pragma once

#include <string>
#include <vector>

namespace folindex {

/// c_0 + c_1 h + ... + c_n h^n in the Chow ring of P^n, truncated above h^n.
struct ChowClass {
    int n = 2;
    std::vector<long> c;

    ChowClass() : c(3, 0) {}
    ChowClass(int dim, std::vector<long> coeffs);
    static ChowClass one(int dim);
    // 1 + l h
    static ChowClass line_bundle(int dim, long l);
    // c(TP^n) = (1 + h)^(n+1)
    static ChowClass tangent(int dim);

    long operator[](int i) const { return c[static_cast<size_t>(i)]; }
    friend bool operator==(const ChowClass& a, const ChowClass& b) { return a.n == b.n && a.c == b.c; }
    std::string to_string() const;
};

ChowClass chow_mul(const ChowClass& a, const ChowClass& b);
long chow_integral(const ChowClass& a);
/// 1/(1 + l h) expanded and truncated.
ChowClass chow_inverse_line(int dim, long l);

/// c(E - L) = c(E) / (1 + l h)
ChowClass chern_virtual_quotient(const ChowClass& cE, long l);
/// Degree-n part of c(E tensor L^dual) for a rank-n E: sum c_i(E) (-l)^(n-i).
long top_chern_twist(const ChowClass& cE, long l);

/// CSM class by dimension: alpha_j is the coefficient of the class of a
/// j-dimensional linear subspace. c_*(1_{P^2}) = (3, 3, 1).
struct CSMClass {
    std::vector<long> alpha;
    long operator[](int j) const { return alpha[static_cast<size_t>(j)]; }
    friend bool operator==(const CSMClass& a, const CSMClass& b) { return a.alpha == b.alpha; }
    std::string to_string() const;
};

CSMClass csm_projective_plane();
/// Plane curve of degree k whose singular points have the given Milnor numbers.
CSMClass csm_curve(long k, const std::vector<long>& milnor);
CSMClass csm_complement(long k, const std::vector<long>& milnor);
/// Euler characteristic of a reduced plane curve: 3k - k^2 + sum mu.
long curve_euler_characteristic(long k, const std::vector<long>& milnor);

/// (1 + h)^3 / prod (1 + d_i h) on P^2.
ChowClass log_chern_snc(const std::vector<long>& degrees);

/// sum_j (-1)^j l^j alpha_j
long twisted_index_sum(const CSMClass& csm, long l);

}  // namespace folindex
