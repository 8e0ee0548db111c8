#include "psitoda/valuation.hpp"

#include <sstream>

#include "psitoda/error.hpp"

namespace psitoda {

namespace {

bool upoly_irreducible(const UPoly &g) {
    // enough for the factors of a cubic: degree 1 always, degree 2-3 iff
    // there is no rational root
    int d = up_degree(g);
    if (d <= 0) return false;
    if (d == 1) return true;
    if (d > 3) throw DomainError("branch_class: factor degree exceeds a cubic");
    return rational_roots(MultiPoly::from_x_dense(g)).empty();
}

/// Multiplicity of the irreducible g in p (largest k with g^k | p).
int minpoly_multiplicity(const UPoly &p, const UPoly &g) {
    UPoly cur = p;
    int mult = 0;
    while (true) {
        auto [q, r] = up_divmod(cur, g);
        if (!up_is_zero(r)) return mult;
        ++mult;
        cur = std::move(q);
        if (up_is_zero(cur)) throw InternalError("minpoly_multiplicity: vanished");
    }
}

/// Truncated sqrt of a rational power series with constant term 1.
std::vector<Rational> sqrt_series(const std::vector<Rational> &a, std::size_t nterms) {
    std::vector<Rational> s(nterms, Rational(0));
    s[0] = Rational(1);
    const Rational half(1, 2);
    for (std::size_t n = 1; n < nterms; ++n) {
        Rational acc = n < a.size() ? a[n] : Rational(0);
        for (std::size_t k = 1; k < n; ++k) acc -= s[k] * s[n - k];
        s[n] = acc * half;
    }
    return s;
}

ExtInt val_at_generic(const EllipticCurve &c, const MultiPoly &pb, const MultiPoly &qb,
                      const PointValue &pt) {
    const Rational x0 = pt.x0();
    UPoly pu = pb.x_dense(), qu = qb.x_dense();
    // t-order of a nonzero function is bounded by its pole order at the
    // other places, so this precision always resolves the leading term.
    const std::size_t N = 2 * static_cast<std::size_t>(
                                  std::max(0, std::max(up_degree(pu), up_degree(qu)))) + 4;
    UPoly pt_t = up_shift(pu, x0);
    UPoly qt_t = up_shift(qu, x0);
    // y(t) = y0 * sqrt(f(x0+t)/f(x0)), a unit series
    UPoly fshift = up_shift(c.f_upoly(), x0);
    const Rational f0 = fshift.empty() ? Rational(0) : fshift[0];
    if (f0.is_zero()) throw InternalError("val: generic point at a branch");
    std::vector<Rational> rel(fshift.size());
    for (std::size_t i = 0; i < fshift.size(); ++i) rel[i] = fshift[i] / f0;
    std::vector<Rational> s = sqrt_series(rel, N);

    const QuadExt y0 = pt.y0();
    for (std::size_t i = 0; i < N; ++i) {
        Rational pc = i < pt_t.size() ? pt_t[i] : Rational(0);
        Rational conv(0);
        for (std::size_t k = 0; k <= i && k < qt_t.size(); ++k) conv += qt_t[k] * s[i - k];
        QuadExt coeff = QuadExt(pc) + QuadExt(conv) * y0;
        if (!coeff.is_zero()) return ExtInt(static_cast<std::int64_t>(i));
    }
    throw InternalError("val: nonzero element with series zero to guaranteed depth");
}

} // namespace

ValuationPoint ValuationPoint::generic(const PointValue &pt) {
    Rational fx0 = up_eval(pt.curve().f_upoly(), pt.x0());
    if (fx0.is_zero()) throw DomainError("ValuationPoint: f(x0) = 0, use a branch point");
    if (pt.y0().is_zero()) throw InternalError("ValuationPoint: zero y0 off the branch locus");
    ValuationPoint v(Kind::Generic, pt.curve());
    v.pt_ = pt;
    return v;
}

ValuationPoint ValuationPoint::branch(const EllipticCurve &c, const Rational &b) {
    UPoly f = c.f_upoly();
    if (!up_eval(f, b).is_zero()) throw DomainError("ValuationPoint: f(b) != 0");
    if (up_eval(up_derivative(f), b).is_zero())
        throw DomainError("ValuationPoint: singular point of a nodal curve is unsupported");
    ValuationPoint v(Kind::Branch, c);
    v.minpoly_ = UPoly{-b, Rational(1)};
    v.root_ = b;
    return v;
}

ValuationPoint ValuationPoint::branch_class(const EllipticCurve &c, const UPoly &g0) {
    UPoly g = up_monic(up_normalize(g0));
    if (!upoly_irreducible(g)) throw DomainError("branch_class: factor must be irreducible");
    auto [q, r] = up_divmod(c.f_upoly(), g);
    if (!up_is_zero(r)) throw DomainError("branch_class: polynomial does not divide f");
    if (up_is_zero(up_mod(q, g)) || !up_square_free(g))
        throw DomainError("branch_class: multiple root of f is unsupported");
    ValuationPoint v(Kind::Branch, c);
    v.minpoly_ = g;
    if (up_degree(g) == 1) v.root_ = -g[0];
    return v;
}

ValuationPoint ValuationPoint::branch_y_zero(const EllipticCurve &c) {
    if (!rational_roots(MultiPoly::from_x_dense(c.f_upoly())).empty())
        throw DomainError("branch_y_zero: f has rational roots; pick the branch explicitly");
    return branch_class(c, c.f_upoly());
}

ValuationPoint ValuationPoint::infinity(const EllipticCurve &c) {
    if (!c.numeric()) throw DomainError("ValuationPoint: curve must be numeric");
    return ValuationPoint(Kind::Infinity, c);
}

const PointValue &ValuationPoint::point() const {
    if (!pt_) throw DomainError("ValuationPoint: not a generic point");
    return *pt_;
}

const UPoly &ValuationPoint::minpoly() const {
    if (kind_ != Kind::Branch) throw DomainError("ValuationPoint: not a branch point");
    return minpoly_;
}

std::string ValuationPoint::str() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Generic:
            os << "generic(x=" << pt_->x0() << ", y=" << pt_->y0().str() << ")";
            break;
        case Kind::Branch:
            if (root_) os << "branch(x=" << *root_ << ")";
            else os << "branch(minpoly " << MultiPoly::from_x_dense(minpoly_).str() << ")";
            break;
        case Kind::Infinity: os << "infinity"; break;
    }
    return os.str();
}

ExtInt val(const CurveElement &elem, const ValuationPoint &vp) {
    if (elem.curve() != vp.curve()) throw DomainError("val: element on a different curve");
    if (!vp.curve().numeric()) throw DomainError("val: numeric lambdas required");

    auto bound = [&](const MultiPoly &part) {
        MultiPoly b = part;
        const Var v[3] = {Var::L0, Var::L1, Var::L2};
        for (int i = 0; i < 3; ++i)
            if (vp.curve().lambda(i)) b = b.substitute(v[i], *vp.curve().lambda(i));
        return b;
    };
    MultiPoly pb = bound(elem.p_part()), qb = bound(elem.q_part());
    if (pb.is_zero() && qb.is_zero()) return ExtInt::pos_inf();

    switch (vp.kind()) {
        case ValuationPoint::Kind::Generic:
            return val_at_generic(vp.curve(), pb, qb, vp.point());
        case ValuationPoint::Kind::Branch: {
            // t = sqrt(x - b): the p-part sits at even t-orders, the q-part
            // (one factor of y ~ t * unit) at odd ones, so the two cannot
            // cancel and the valuation is a plain multiplicity count.
            ExtInt vmin = ExtInt::pos_inf();
            if (!pb.is_zero())
                vmin = min(vmin, ExtInt(2 * minpoly_multiplicity(pb.x_dense(), vp.minpoly())));
            if (!qb.is_zero())
                vmin = min(vmin, ExtInt(2 * minpoly_multiplicity(qb.x_dense(), vp.minpoly()) + 1));
            return vmin;
        }
        case ValuationPoint::Kind::Infinity: {
            // t = 1/sqrt(x): val(x^k) = -2k, val(y) = -3; parities differ again.
            ExtInt vmin = ExtInt::pos_inf();
            if (!pb.is_zero()) vmin = min(vmin, ExtInt(-2 * pb.degree_x()));
            if (!qb.is_zero()) vmin = min(vmin, ExtInt(-2 * qb.degree_x() - 3));
            return vmin;
        }
    }
    throw InternalError("val: unreachable");
}

ValAxiomsReport val_axioms_check(const CurveElement &f, const CurveElement &g,
                                 const ValuationPoint &pt) {
    ValAxiomsReport r;
    r.vf = val(f, pt);
    r.vg = val(g, pt);
    r.vfg = val(f * g, pt);
    r.vsum = val(f + g, pt);
    bool both_finite = r.vf.is_finite() && r.vg.is_finite();
    r.product_additive = both_finite ? (r.vfg == r.vf + r.vg)
                                     : r.vfg.is_pos_inf(); // 0 * anything = 0
    ExtInt m = min(r.vf, r.vg);
    r.sum_superadditive = !(r.vsum < m);
    r.sum_equality = (r.vsum == m);
    return r;
}

std::vector<ExtInt> g_sequence(PsiSequence &seq, const ValuationPoint &pt, long max_n) {
    std::vector<ExtInt> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    for (long n = 0; n <= max_n; ++n) out.push_back(val(seq.psi(n), pt));
    return out;
}

NormClass nonarch_norm(const ExtInt &v) {
    if (v.is_pos_inf()) return NormClass::Zero;
    if (v.is_neg_inf()) return NormClass::GreaterThanOne;
    if (v.finite_value() > 0) return NormClass::LessThanOne;
    if (v.finite_value() < 0) return NormClass::GreaterThanOne;
    return NormClass::One;
}

const char *norm_class_name(NormClass n) {
    switch (n) {
        case NormClass::Zero: return "=0";
        case NormClass::LessThanOne: return "<1";
        case NormClass::One: return "=1";
        default: return ">1";
    }
}

} // namespace psitoda
