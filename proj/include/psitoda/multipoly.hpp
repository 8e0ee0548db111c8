#ifndef PSITODA_MULTIPOLY_HPP
#define PSITODA_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psitoda/rational.hpp"

namespace psitoda {

/// Variable universe: the curve coordinate x and the curve coefficients.
enum class Var : int { X = 0, L0, L1, L2, L3, L4 };
constexpr int kNumVars = 6;
const char *var_name(Var v);

using Exps = std::array<std::int32_t, kNumVars>;

/// Graded-lexicographic term order, highest term first. With a sorted
/// container this makes equal polynomials have identical representations.
struct GrlexGreater {
    bool operator()(const Exps &a, const Exps &b) const {
        std::int64_t ta = 0, tb = 0;
        for (int i = 0; i < kNumVars; ++i) { ta += a[i]; tb += b[i]; }
        if (ta != tb) return ta > tb;
        return a > b;
    }
};

/// Sparse multivariate polynomial over Rational in {x, l0..l4}.
/// No zero coefficients are stored; the term map is kept in the canonical
/// graded-lex order. Exponents are machine integers with overflow checks,
/// coefficients are unbounded.
class MultiPoly {
  public:
    using TermMap = std::map<Exps, Rational, GrlexGreater>;

    MultiPoly() = default;

    static MultiPoly constant(const Rational &c);
    static MultiPoly variable(Var v);
    static MultiPoly monomial(const Rational &c, const Exps &e);
    /// Univariate helper: c * x^k.
    static MultiPoly x_power(const Rational &c, int k);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the whole value if is_constant()).
    Rational constant_value() const;

    const TermMap &terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(const Exps &e) const;

    /// Degree in one variable; -1 for the zero polynomial.
    int degree(Var v) const;
    int degree_x() const { return degree(Var::X); }
    bool uses(Var v) const { return degree(v) > 0; }
    /// True when no variable other than `v` appears.
    bool univariate_in(Var v) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly &p, const MultiPoly &q);
    friend MultiPoly operator-(const MultiPoly &p, const MultiPoly &q);
    friend MultiPoly operator*(const MultiPoly &p, const MultiPoly &q);
    MultiPoly &operator+=(const MultiPoly &q) { return *this = *this + q; }
    MultiPoly &operator-=(const MultiPoly &q) { return *this = *this - q; }
    MultiPoly &operator*=(const MultiPoly &q) { return *this = *this * q; }
    friend bool operator==(const MultiPoly &p, const MultiPoly &q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const MultiPoly &p, const MultiPoly &q) { return !(p == q); }

    MultiPoly scaled(const Rational &c) const;
    MultiPoly pow(unsigned e) const;

    /// Full evaluation; every variable that appears must be bound.
    Rational eval(const std::array<std::optional<Rational>, kNumVars> &binding) const;
    /// Substitute one variable by a rational, keeping the others symbolic.
    MultiPoly substitute(Var v, const Rational &value) const;

    MultiPoly derivative(Var v) const;

    /// Coefficients with respect to x: result[k] is the (l-only) polynomial
    /// multiplying x^k. Empty for the zero polynomial.
    std::vector<MultiPoly> x_coefficients() const;
    static MultiPoly from_x_coefficients(const std::vector<MultiPoly> &coeffs);

    /// Dense rational coefficient list (low to high) of a univariate-in-x
    /// polynomial. Throws DomainError if another variable appears.
    std::vector<Rational> x_dense() const;
    static MultiPoly from_x_dense(const std::vector<Rational> &coeffs);

    /// Exact multivariate division: returns p/d when d divides p exactly,
    /// nullopt otherwise. d must be nonzero.
    std::optional<MultiPoly> divided_exactly_by(const MultiPoly &d) const;

    std::string str() const;

  private:
    void insert_term(const Exps &e, const Rational &c); // adds, drops zeros
    TermMap terms_;
};

std::ostream &operator<<(std::ostream &os, const MultiPoly &p);

/// Largest k such that (x - x0)^k divides p; p must be a nonzero
/// univariate-in-x polynomial. Uses repeated exact synthetic division.
int root_multiplicity(const MultiPoly &p, const Rational &x0);

/// All rational roots of a nonzero univariate-in-x polynomial, with
/// multiplicities, via the rational-root theorem on the cleared-denominator
/// primitive form.
std::vector<std::pair<Rational, int>> rational_roots(const MultiPoly &p);

} // namespace psitoda

#endif
