#include "folindex/verify.hpp"

#include <algorithm>

#include "folindex/chern.hpp"
#include "folindex/errors.hpp"
#include "folindex/localmult.hpp"

namespace folindex {

namespace {

const Point kOrigin{FieldElem(0), FieldElem(0)};
constexpr long kSignN = kAmbientDim % 2 == 0 ? 1 : -1;  // (-1)^n

void sort_points(std::vector<ProjPoint>& pts) {
    std::stable_sort(pts.begin(), pts.end(), [](const ProjPoint& a, const ProjPoint& b) {
        if (a.chart != b.chart) return a.chart < b.chart;
        if (a.conjugacy_size != b.conjugacy_size) return a.conjugacy_size < b.conjugacy_size;
        return a.label() < b.label();
    });
}

std::vector<ProjPoint> sorted_singular_points(const ProjFoliation& F) {
    auto pts = singular_points(F);
    sort_points(pts);
    return pts;
}

enum class Where { Off, Smooth, Singular };

Where classify(const MultiPoly& h) {
    if (!h.constant_term().is_zero()) return Where::Off;
    if (!h.derivative(0).constant_term().is_zero() || !h.derivative(1).constant_term().is_zero()) return Where::Smooth;
    return Where::Singular;
}

void require_invariant(const ProjFoliation& F, const MultiPoly& D) {
    if (!is_log_along(F, D))
        throw PreconditionError("not-invariant", "the foliation is not logarithmic along " + D.to_string());
}

int divisor_degree(const MultiPoly& D) {
    const int k = D.total_degree();
    for (const auto& [e, c] : D.terms())
        if (total_degree(e) != k) throw PreconditionError("not-homogeneous", D.to_string() + " is not homogeneous");
    if (k < 1) throw PreconditionError("bad-degree", "divisor must have positive degree");
    return k;
}

// Milnor numbers of Sing(D), one entry per geometric point.
std::vector<long> divisor_milnor_numbers(const MultiPoly& D, std::vector<ProjPoint>& sing, Exec exec) {
    sing = curve_singular_points(D);
    sort_points(sing);
    const auto mus = map_indexed<long>(
        sing.size(), [&](size_t i) { return milnor_number(localize(D, sing[i]), kOrigin); }, exec);
    std::vector<long> out;
    for (size_t i = 0; i < sing.size(); ++i)
        for (int j = 0; j < sing[i].conjugacy_size; ++j) out.push_back(mus[i]);
    return out;
}

void finish(GlobalReport& r) {
    if (r.recompute(1) != r.rhs || (r.has_rhs_alt && r.recompute(2) != r.rhs_alt))
        throw std::logic_error("report right-hand side disagrees with its per-point terms");
    r.pass = r.lhs == r.rhs && (!r.has_rhs_alt || r.rhs_alt == r.rhs);
}

const char* kCondition = "condition (**): Whitney and Thom w_f regularity of the stratification (asserted)";

}  // namespace

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::BAUM_BOTT: return "BAUM_BOTT";
        case Theorem::COR_SEH: return "COR_SEH";
        case Theorem::COR_ISO: return "COR_ISO";
        case Theorem::TOTAL_GSV: return "TOTAL_GSV";
    }
    throw std::logic_error("unknown theorem");
}

Theorem theorem_from_name(const std::string& s) {
    for (Theorem t : {Theorem::BAUM_BOTT, Theorem::COR_SEH, Theorem::COR_ISO, Theorem::TOTAL_GSV})
        if (theorem_name(t) == s) return t;
    throw ParseError("unknown theorem '" + s + "'");
}

long GlobalReport::recompute(int form) const {
    long s = 0;
    for (const auto& t : per_point)
        if (t.form == form) s += t.weight * t.value;
    return s;
}

GlobalReport verify_baum_bott(const ProjFoliation& F, Exec exec) {
    GlobalReport r;
    r.theorem = Theorem::BAUM_BOTT;
    r.lhs = twisted_index_sum(csm_projective_plane(), F.twist());
    const auto pts = sorted_singular_points(F);
    const auto ph = map_indexed<long>(pts.size(), [&](size_t i) { return ph_index(localize(F, pts[i])).value; }, exec);
    for (size_t i = 0; i < pts.size(); ++i) {
        r.per_point.push_back({pts[i].label(), "PH", ph[i], pts[i].conjugacy_size, 1});
        r.rhs += pts[i].conjugacy_size * ph[i];
    }
    finish(r);
    return r;
}

GlobalReport verify_log_seh(const ProjFoliation& F, const MultiPoly& D, const std::map<std::string, LogBasis>& bases,
                            Exec exec) {
    const int k = divisor_degree(D);
    require_invariant(F, D);
    GlobalReport r;
    r.theorem = Theorem::COR_SEH;
    r.assumptions = {"D is holonomic, strongly Euler homogeneous and free (asserted)"};
    std::vector<ProjPoint> sing_d;
    const auto mus = divisor_milnor_numbers(D, sing_d, exec);
    r.lhs = twisted_index_sum(csm_complement(k, mus), F.twist());

    const auto pts = sorted_singular_points(F);
    struct Out {
        std::string kind;
        long value = 0;
        std::string evidence;
    };
    const auto vals = map_indexed<Out>(
        pts.size(),
        [&](size_t i) -> Out {
            const VectorFieldGerm nu = localize(F, pts[i]);
            const MultiPoly h = localize(D, pts[i]);
            if (classify(h) == Where::Off) return {"PH", ph_index(nu).value, ""};
            const std::string label = pts[i].label();
            std::optional<LogBasis> basis;
            std::string how = "user basis";
            if (auto it = bases.find(label); it != bases.end()) {
                basis = it->second;
            } else {
                basis = automatic_log_basis(h, kOrigin);
                how = classify(h) == Where::Smooth ? "smooth point" : "weighted homogeneous";
            }
            if (!basis)
                throw PreconditionError("missing-log-basis", "no Saito basis at " + label + " for " + h.to_string());
            const MultiPoly u = saito_check(basis->chi1, basis->chi2, basis->divisor);
            return {"LOG", log_index(nu, *basis).value,
                    "saito check at " + label + " (" + how + "): det = (" + u.to_string() + ") * f"};
        },
        exec);
    for (size_t i = 0; i < pts.size(); ++i) {
        r.per_point.push_back({pts[i].label(), vals[i].kind, vals[i].value, pts[i].conjugacy_size, 1});
        r.rhs += pts[i].conjugacy_size * vals[i].value;
        if (!vals[i].evidence.empty()) r.evidence.push_back(vals[i].evidence);
    }
    finish(r);
    return r;
}

GlobalReport verify_isolated(const ProjFoliation& F, const MultiPoly& D, Exec exec) {
    const int k = divisor_degree(D);
    require_invariant(F, D);
    GlobalReport r;
    r.theorem = Theorem::COR_ISO;
    r.has_rhs_alt = true;
    r.assumptions = {kCondition};
    const ChowClass c = chern_virtual_quotient(chern_virtual_quotient(ChowClass::tangent(2), k), F.twist());
    r.lhs = chow_integral(c);

    std::vector<ProjPoint> sing_d;
    const auto mus = divisor_milnor_numbers(D, sing_d, exec);
    const auto pts = sorted_singular_points(F);
    struct Out {
        Where where = Where::Off;
        long ph = 0, log = 0, gsv = 0, sch = 0, mu = 0;
    };
    const auto vals = map_indexed<Out>(
        pts.size(),
        [&](size_t i) {
            Out o;
            const VectorFieldGerm nu = localize(F, pts[i]);
            const MultiPoly h = localize(D, pts[i]);
            o.where = classify(h);
            o.ph = ph_index(nu).value;
            if (o.where == Where::Off) return o;
            const IndexReport g = gsv_index(nu, h);
            o.gsv = g.value;
            o.mu = g.ingredient("milnor");
            o.sch = o.gsv + kSignN * o.mu;  // Sch = GSV - (-1)^(n-1) mu
            if (o.where == Where::Smooth) o.log = log_index(nu, *automatic_log_basis(h, kOrigin)).value;
            return o;
        },
        exec);

    long sing_d_in_f = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& o = vals[i];
        const long w = p.conjugacy_size;
        const std::string l = p.label();
        // (i): PH off D_sm, Ind_log on D_sm, minus GSV on Sing(D).
        if (o.where == Where::Smooth) {
            r.per_point.push_back({l, "LOG", o.log, w, 1});
        } else {
            r.per_point.push_back({l, "PH", o.ph, w, 1});
        }
        if (o.where == Where::Singular) {
            r.per_point.push_back({l, "GSV", o.gsv, -w, 1});
            sing_d_in_f += w;
        }
        // (ii): all PH, minus Schwartz on D, (-1)^n mu on Sing(D).
        r.per_point.push_back({l, "PH", o.ph, w, 2});
        if (o.where != Where::Off) r.per_point.push_back({l, "SCHWARTZ", o.sch, -w, 2});
        if (o.where == Where::Singular) r.per_point.push_back({l, "MILNOR", o.mu, kSignN * w, 2});
    }
    if (sing_d_in_f != static_cast<long>(mus.size()))
        throw PreconditionError("non-isolated", "a singular point of the divisor is not a singular point of the foliation");
    r.evidence.push_back("Sing(D) is contained in Sing(F)");
    r.rhs = r.recompute(1);
    r.rhs_alt = r.recompute(2);
    finish(r);
    return r;
}

GlobalReport verify_total_gsv(const ProjFoliation& F, const MultiPoly& D, Exec exec) {
    const int k = divisor_degree(D);
    require_invariant(F, D);
    GlobalReport r;
    r.theorem = Theorem::TOTAL_GSV;
    r.assumptions = {kCondition};
    // Degree-1 part of c(TP^2 - O(k) - L), capped with [D].
    const ChowClass c = chern_virtual_quotient(chern_virtual_quotient(ChowClass::tangent(2), k), F.twist());
    r.lhs = static_cast<long>(k) * c[1];
    std::vector<ProjPoint> sing_d;
    divisor_milnor_numbers(D, sing_d, exec);  // rejects non-isolated divisor singularities
    auto pts = sorted_singular_points(F);
    std::vector<ProjPoint> on_d;
    for (const auto& p : pts)
        if (classify(localize(D, p)) != Where::Off) on_d.push_back(p);
    const auto gsv = map_indexed<long>(
        on_d.size(), [&](size_t i) { return gsv_index(localize(F, on_d[i]), localize(D, on_d[i])).value; }, exec);
    for (size_t i = 0; i < on_d.size(); ++i) {
        r.per_point.push_back({on_d[i].label(), "GSV", gsv[i], on_d[i].conjugacy_size, 1});
        r.rhs += on_d[i].conjugacy_size * gsv[i];
    }
    finish(r);
    return r;
}

}  // namespace folindex
