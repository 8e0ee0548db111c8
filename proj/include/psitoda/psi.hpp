#ifndef PSITODA_PSI_HPP
#define PSITODA_PSI_HPP

#include <optional>
#include <string>
#include <vector>

#include "psitoda/curve.hpp"

namespace psitoda {

/// Memoized table n -> psi_n for a fixed curve, extended by psi_0 = 0 and
/// psi_{-n} = -psi_n.
///
/// Seeds are either the generic closed forms of psi_1..psi_4 (canonical;
/// specialize to the curve's lambdas) or caller-supplied base cases; all
/// higher indices come from the doubling recursions
///   psi_{2n+1} = psi_{n+2} psi_n^3 - psi_{n+1}^3 psi_{n-1}
///   psi_{2n}   = psi_n (psi_{n+2} psi_{n-1}^2 - psi_{n+1}^2 psi_{n-2}) / psi_2
/// where the division by psi_2 = -2y is exact ring division with a hard
/// failure on remainder.
///
/// The memo is append-only; once computed an entry never changes. Concurrent
/// readers of already-computed entries are safe, writers must be serialized.
class PsiSequence {
  public:
    static PsiSequence canonical(const EllipticCurve &c);
    static PsiSequence with_seeds(const EllipticCurve &c, CurveElement psi2, CurveElement psi3,
                                  CurveElement psi4);

    const EllipticCurve &curve() const { return curve_; }
    bool canonical_seeds() const { return canonical_; }

    /// psi_n as a CurveElement; any integer n (odd symmetry for n < 0).
    CurveElement psi(long n);

    /// Degree-growth guard: generating psi_n needs O(n^2) space. Default cap 64.
    void set_cap(long cap) { cap_ = cap; }
    long cap() const { return cap_; }

    /// The generic closed forms, exposed for cross-checks.
    static CurveElement closed_form_psi3(const EllipticCurve &c);
    static CurveElement closed_form_psi4(const EllipticCurve &c);

  private:
    PsiSequence(const EllipticCurve &c, bool canonical) : curve_(c), canonical_(canonical) {}
    const CurveElement &at(long n); // n >= 0

    EllipticCurve curve_;
    bool canonical_;
    std::vector<CurveElement> memo_;
    long cap_ = 64;
};

/// Brioschi-Kiepert route: psi_n as the scaled (n-1)x(n-1) Hankel
/// determinant of derivatives of wp = x, wp' = 2y, ... (repeated u-derivation).
/// Requires 2 <= n <= max_n (symbolic determinants blow up; default bound 8,
/// raise it freely on numeric curves).
CurveElement psi_bk(const EllipticCurve &c, long n, long max_n = 8);

/// psi_{n+m} psi_{m-n} = psi_{m+1} psi_{m-1} psi_n^2 - psi_{n+1} psi_{n-1} psi_m^2,
/// checked exactly as CurveElements.
bool verify_recursion_identity(PsiSequence &seq, long m, long n);

struct StructureReport {
    long n = 0;
    bool parity_ok = false;     // odd n pure p-part, even n pure q-part
    int x_degree = -1;          // of the carrying part
    long generic_degree = 0;    // (n^2-1)/2 odd, (n^2-4)/2 even
    bool degree_matches_generic = false;
};
/// Parity placement and x-degree of psi_n; degree equality with the generic
/// count is only guaranteed for symbolic lambdas.
StructureReport check_structure(PsiSequence &seq, long n);

/// When n | m, psi_n divides psi_m (after stripping the y carried by even
/// indices). Throws DomainError when n does not divide m.
bool check_divisibility(PsiSequence &seq, long n, long m);

struct ConditionReport {
    CurveElement element;                           // psi_{p+q} psi_{p-q} + psi_p^2 - psi_q^2
    int x_degree = -1;
    std::vector<std::pair<Rational, int>> roots;    // rational roots of the x-part (numeric curves)
    std::string note;
};
/// The c = 1 locus of the discrete Toda solution family; points where the
/// element vanishes admit the unit-coefficient form of the equation.
ConditionReport condition_polynomial(PsiSequence &seq, long p, long q);

} // namespace psitoda

#endif
