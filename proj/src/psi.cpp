#include "psitoda/psi.hpp"

#include <algorithm>
#include <map>

#include "psitoda/error.hpp"

namespace psitoda {

namespace {

MultiPoly lam(const EllipticCurve &c, int i) {
    const Var v[3] = {Var::L0, Var::L1, Var::L2};
    return c.lambda(i) ? MultiPoly::constant(*c.lambda(i)) : MultiPoly::variable(v[i]);
}

MultiPoly xp(long c, int k) { return MultiPoly::x_power(Rational(c), k); }

} // namespace

CurveElement PsiSequence::closed_form_psi3(const EllipticCurve &c) {
    MultiPoly l0 = lam(c, 0), l1 = lam(c, 1), l2 = lam(c, 2);
    // 3x^4 + 4 l2 x^3 + 6 l1 x^2 + 12 l0 x - l1^2 + 4 l2 l0
    MultiPoly p = xp(3, 4) + l2 * xp(4, 3) + l1 * xp(6, 2) + l0 * xp(12, 1) - l1 * l1 +
                  l2 * l0 * MultiPoly::constant(Rational(4));
    return CurveElement::from_parts(c, std::move(p), {});
}

CurveElement PsiSequence::closed_form_psi4(const EllipticCurve &c) {
    MultiPoly l0 = lam(c, 0), l1 = lam(c, 1), l2 = lam(c, 2);
    // -4y [ x^6 + 2 l2 x^5 + 5 l1 x^4 + 20 l0 x^3 + (20 l2 l0 - 5 l1^2) x^2
    //       + (8 l2^2 l0 - 2 l2 l1^2 - 4 l1 l0) x + 4 l2 l1 l0 - l1^3 - 8 l0^2 ]
    MultiPoly inner = xp(1, 6) + l2 * xp(2, 5) + l1 * xp(5, 4) + l0 * xp(20, 3) +
                      (l2 * l0 * MultiPoly::constant(Rational(20)) -
                       l1 * l1 * MultiPoly::constant(Rational(5))) * xp(1, 2) +
                      (l2 * l2 * l0 * MultiPoly::constant(Rational(8)) -
                       l2 * l1 * l1 * MultiPoly::constant(Rational(2)) -
                       l1 * l0 * MultiPoly::constant(Rational(4))) * xp(1, 1) +
                      l2 * l1 * l0 * MultiPoly::constant(Rational(4)) - l1 * l1 * l1 -
                      l0 * l0 * MultiPoly::constant(Rational(8));
    return CurveElement::from_parts(c, {}, inner.scaled(Rational(-4)));
}

PsiSequence PsiSequence::canonical(const EllipticCurve &c) {
    PsiSequence s(c, true);
    s.memo_.push_back(CurveElement::zero(c));                                    // psi_0
    s.memo_.push_back(CurveElement::one(c));                                     // psi_1
    s.memo_.push_back(CurveElement::y(c).scaled(Rational(-2)));                  // psi_2
    s.memo_.push_back(closed_form_psi3(c));
    s.memo_.push_back(closed_form_psi4(c));
    return s;
}

PsiSequence PsiSequence::with_seeds(const EllipticCurve &c, CurveElement psi2, CurveElement psi3,
                                    CurveElement psi4) {
    if (psi2.curve() != c || psi3.curve() != c || psi4.curve() != c)
        throw DomainError("PsiSequence: seed on a different curve");
    if (psi2.is_zero()) throw DomainError("PsiSequence: psi_2 seed must be nonzero");
    PsiSequence s(c, false);
    s.memo_.push_back(CurveElement::zero(c));
    s.memo_.push_back(CurveElement::one(c));
    s.memo_.push_back(std::move(psi2));
    s.memo_.push_back(std::move(psi3));
    s.memo_.push_back(std::move(psi4));
    return s;
}

const CurveElement &PsiSequence::at(long n) {
    if (n > cap_)
        throw DomainError("PsiSequence: index " + std::to_string(n) + " above cap " +
                          std::to_string(cap_) + " (degree grows like n^2; raise the cap)");
    while (static_cast<long>(memo_.size()) <= n) {
        const long m = static_cast<long>(memo_.size());
        const long k = m / 2;
        if (m % 2 == 1) {
            memo_.push_back(at(k + 2) * at(k).pow(3) - at(k + 1).pow(3) * at(k - 1));
        } else {
            CurveElement num =
                at(k) * (at(k + 2) * at(k - 1).pow(2) - at(k + 1).pow(2) * at(k - 2));
            memo_.push_back(num.divided_by_minus_2y());
        }
    }
    return memo_[static_cast<std::size_t>(n)];
}

CurveElement PsiSequence::psi(long n) {
    if (n < 0) return -at(-n);
    return at(n);
}

namespace {

// Division-free determinant via Laplace expansion memoized over column
// subsets; fine for the small Hankel matrices used here.
CurveElement det_subset(const std::vector<std::vector<CurveElement>> &m, const EllipticCurve &c) {
    const std::size_t n = m.size();
    std::map<unsigned, CurveElement> memo;
    memo[0] = CurveElement::one(c);
    // state: set of columns used by the first popcount(mask) rows
    std::vector<unsigned> order;
    for (unsigned mask = 1; mask < (1u << n); ++mask) order.push_back(mask);
    std::sort(order.begin(), order.end(), [](unsigned a, unsigned b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    for (unsigned mask : order) {
        const int row = __builtin_popcount(mask) - 1;
        CurveElement acc = CurveElement::zero(c);
        int sign = 1;
        for (std::size_t col = 0; col < n; ++col) {
            if (!(mask & (1u << col))) continue;
            const CurveElement &sub = memo.at(mask & ~(1u << col));
            CurveElement term = m[static_cast<std::size_t>(row)][col] * sub;
            acc += (sign > 0) ? term : -term;
            sign = -sign;
        }
        memo[mask] = std::move(acc);
    }
    // Expanding along the last row with alternating signs starting at +
    // accumulates det times (-1)^(n(n-1)/2); undo that here.
    CurveElement full = memo.at((1u << n) - 1);
    return ((n * (n - 1) / 2) % 2 == 0) ? full : -full;
}

} // namespace

CurveElement psi_bk(const EllipticCurve &c, long n, long max_n) {
    if (n < 2) throw DomainError("psi_bk: need n >= 2");
    if (n > max_n) throw DomainError("psi_bk: n above the determinant bound");
    // wp^(k) for k = 1 .. 2n-3
    std::vector<CurveElement> deriv;
    CurveElement cur = CurveElement::x(c);
    for (long k = 1; k <= 2 * n - 3; ++k) {
        cur = cur.derivation();
        deriv.push_back(cur);
    }
    const std::size_t dim = static_cast<std::size_t>(n - 1);
    std::vector<std::vector<CurveElement>> m(dim, std::vector<CurveElement>(dim, CurveElement::zero(c)));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m[i][j] = deriv.at(i + j);
    CurveElement det = det_subset(m, c);
    Rational fact(1);
    for (long k = 1; k <= n - 1; ++k) {
        Rational kf(1);
        for (long t = 2; t <= k; ++t) kf *= Rational(t);
        fact *= kf;
    }
    Rational pre = Rational(n % 2 == 1 ? 1 : -1) / (fact * fact);
    return det.scaled(pre);
}

bool verify_recursion_identity(PsiSequence &seq, long m, long n) {
    CurveElement lhs = seq.psi(n + m) * seq.psi(m - n);
    CurveElement rhs = seq.psi(m + 1) * seq.psi(m - 1) * seq.psi(n).pow(2) -
                       seq.psi(n + 1) * seq.psi(n - 1) * seq.psi(m).pow(2);
    return (lhs - rhs).is_zero();
}

StructureReport check_structure(PsiSequence &seq, long n) {
    if (n < 1) throw DomainError("check_structure: need n >= 1");
    StructureReport r;
    r.n = n;
    CurveElement e = seq.psi(n);
    const bool odd = (n % 2 != 0);
    r.parity_ok = odd ? e.q_part().is_zero() : e.p_part().is_zero();
    const MultiPoly &carrier = odd ? e.p_part() : e.q_part();
    r.x_degree = carrier.degree_x();
    r.generic_degree = odd ? (n * n - 1) / 2 : (n * n - 4) / 2;
    r.degree_matches_generic = (r.x_degree == r.generic_degree);
    return r;
}

bool check_divisibility(PsiSequence &seq, long n, long m) {
    if (n < 1 || m % n != 0) throw DomainError("check_divisibility: need n | m, n >= 1");
    CurveElement en = seq.psi(n), em = seq.psi(m);
    const MultiPoly &pn = (n % 2 != 0) ? en.p_part() : en.q_part();
    const MultiPoly &pm = (m % 2 != 0) ? em.p_part() : em.q_part();
    if (pn.is_zero()) return pm.is_zero();
    return pm.divided_exactly_by(pn).has_value();
}

ConditionReport condition_polynomial(PsiSequence &seq, long p, long q) {
    if (!(p > q && q >= 1)) throw DomainError("condition_polynomial: need p > q >= 1");
    ConditionReport r;
    r.element = seq.psi(p + q) * seq.psi(p - q) + seq.psi(p).pow(2) - seq.psi(q).pow(2);
    if (!r.element.q_part().is_zero())
        r.note = "unexpected y part"; // parity argument says this cannot happen
    r.x_degree = r.element.p_part().degree_x();
    if (!seq.curve().numeric())
        r.note = r.note.empty() ? "symbolic lambdas: root scan skipped" : r.note;
    else if (!r.element.p_part().is_zero())
        r.roots = rational_roots(r.element.p_part());
    return r;
}

} // namespace psitoda
