#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "folindex/indices.hpp"

namespace folindex {

/// Invariants of a curve germ at the origin, cached with the function.
struct CurveData {
    MultiPoly f;
    long milnor = 0;
    int multiplicity = 0;
};

/// Constructible function on a plane germ at the origin, written in the
/// basis {1_W, Eu_C (one per curve), 1_0}. Curves are keyed by their printed
/// equation; distinct keys must not share a component.
class ConstructibleFn {
   public:
    ConstructibleFn() = default;

    static ConstructibleFn ambient();
    static ConstructibleFn point();
    static ConstructibleFn euler_obstruction(const MultiPoly& f);

    long ambient_coeff() const noexcept { return ambient_; }
    long point_coeff() const noexcept { return point_; }
    const std::map<std::string, long>& curve_terms() const noexcept { return curves_; }
    const std::map<std::string, CurveData>& registry() const noexcept { return registry_; }

    friend ConstructibleFn operator+(const ConstructibleFn& a, const ConstructibleFn& b);
    friend ConstructibleFn operator-(const ConstructibleFn& a, const ConstructibleFn& b);
    friend ConstructibleFn operator*(long k, const ConstructibleFn& a);
    friend bool operator==(const ConstructibleFn& a, const ConstructibleFn& b);

    long value_at_origin() const;
    // Value at a generic smooth point of the curve with this key.
    long value_on_curve(const std::string& key) const;

    /// Coefficients in {1_W, 1_C, 1_0}: (ambient, per curve, point).
    struct IndicatorForm {
        long ambient = 0;
        std::map<std::string, long> curves;
        long point = 0;
    };
    IndicatorForm indicator_form() const;
    static ConstructibleFn from_indicator_form(const IndicatorForm& form, const std::map<std::string, CurveData>& registry);

    std::string to_string() const;

   private:
    long ambient_ = 0;
    std::map<std::string, long> curves_;
    long point_ = 0;
    std::map<std::string, CurveData> registry_;

    void normalize();
};

CurveData curve_data(const MultiPoly& f);

ConstructibleFn indicator_curve(const MultiPoly& f);
ConstructibleFn vanishing_cycles(const MultiPoly& f);
ConstructibleFn nearby_cycles(const MultiPoly& f);
/// ind_{W - B} = 1_W - sum a_i 1_{C_i} + (deg B - 1) 1_0
ConstructibleFn complement_of_divisor(const std::vector<std::pair<MultiPoly, long>>& divisor);

/// Support labels: "W", "T*C[<key>]", "T*0".
struct LagrangianCycle {
    std::vector<std::pair<std::string, long>> terms;
    std::string to_string() const;
};

LagrangianCycle cc(const ConstructibleFn& g);

/// ambient * Ind_PH + sum c_i * Eu^nu_{C_i}(0) + point.
long index_pairing(const ConstructibleFn& g, const VectorFieldGerm& nu);

}  // namespace folindex
