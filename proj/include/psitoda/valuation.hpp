#ifndef PSITODA_VALUATION_HPP
#define PSITODA_VALUATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "psitoda/curve.hpp"
#include "psitoda/extint.hpp"
#include "psitoda/psi.hpp"

namespace psitoda {

/// A place of the curve at which elements are valuated, classified by its
/// local parameter:
///   Generic   t = x - x0          (f(x0) != 0)
///   Branch    t = sqrt(x - b)     (b a simple root of f; an irrational
///                                  conjugacy class is carried by its
///                                  minimal polynomial instead of a root)
///   Infinity  t = 1/sqrt(x)
class ValuationPoint {
  public:
    enum class Kind { Generic, Branch, Infinity };

    static ValuationPoint generic(const PointValue &pt);
    static ValuationPoint branch(const EllipticCurve &c, const Rational &b);
    /// Branch class cut out by an irreducible factor g of f (g^2 must not
    /// divide f). Covers branch points with irrational x-coordinates.
    static ValuationPoint branch_class(const EllipticCurve &c, const UPoly &g);
    /// The y = 0 fiber as one class; requires f irreducible (no rational
    /// roots), otherwise the class is ambiguous and must be given explicitly.
    static ValuationPoint branch_y_zero(const EllipticCurve &c);
    static ValuationPoint infinity(const EllipticCurve &c);

    Kind kind() const { return kind_; }
    const EllipticCurve &curve() const { return curve_; }
    const PointValue &point() const; // Generic only
    const UPoly &minpoly() const;    // Branch only
    const std::optional<Rational> &branch_root() const { return root_; }

    std::string str() const;

  private:
    ValuationPoint(Kind k, EllipticCurve c) : kind_(k), curve_(std::move(c)) {}
    Kind kind_;
    EllipticCurve curve_;
    std::optional<PointValue> pt_;
    UPoly minpoly_;
    std::optional<Rational> root_;
};

/// Order of vanishing of the element in the local parameter of pt;
/// val(0) = +inf. Exact.
ExtInt val(const CurveElement &elem, const ValuationPoint &pt);

struct ValAxiomsReport {
    ExtInt vf, vg, vfg, vsum;
    bool product_additive = false; // val(fg) = val f + val g
    bool sum_superadditive = false; // val(f+g) >= min
    bool sum_equality = false;      // the generic (non-cancelling) case
};
ValAxiomsReport val_axioms_check(const CurveElement &f, const CurveElement &g,
                                 const ValuationPoint &pt);

/// g_n = val(psi_n) for n = 0..max_n (g_0 = +inf).
std::vector<ExtInt> g_sequence(PsiSequence &seq, const ValuationPoint &pt, long max_n);

/// Magnitude class under |f|_val = exp(-val f).
enum class NormClass { Zero, LessThanOne, One, GreaterThanOne };
NormClass nonarch_norm(const ExtInt &v);
const char *norm_class_name(NormClass n);

} // namespace psitoda

#endif
