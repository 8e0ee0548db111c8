#ifndef PSITODA_GENUS2_HPP
#define PSITODA_GENUS2_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "psitoda/quadext.hpp"
#include "psitoda/upoly.hpp"

namespace psitoda {

/// Genus-2 curve y^2 = x^5 + l4 x^4 + l3 x^3 + l2 x^2 + l1 x + l0.
class Genus2Curve {
  public:
    Genus2Curve(Rational l0, Rational l1, Rational l2, Rational l3, Rational l4)
        : lambda_{std::move(l0), std::move(l1), std::move(l2), std::move(l3), std::move(l4)} {}

    const Rational &lambda(int i) const { return lambda_.at(static_cast<std::size_t>(i)); }
    UPoly f() const {
        return {lambda_[0], lambda_[1], lambda_[2], lambda_[3], lambda_[4], Rational(1)};
    }
    bool square_free() const { return up_square_free(f()); }

    friend bool operator==(const Genus2Curve &a, const Genus2Curve &b) {
        return a.lambda_ == b.lambda_;
    }
    friend bool operator!=(const Genus2Curve &a, const Genus2Curve &b) { return !(a == b); }

  private:
    std::array<Rational, 5> lambda_;
};

/// Mumford representation (u, v): u monic of degree <= 2, deg v < deg u,
/// and u | v^2 - f. The identity is (1, 0), the inverse negates v.
struct MumfordDivisor {
    UPoly u, v;
    static MumfordDivisor identity() { return {UPoly{Rational(1)}, UPoly{}}; }
    friend bool operator==(const MumfordDivisor &a, const MumfordDivisor &b) {
        return a.u == b.u && a.v == b.v;
    }
    friend bool operator!=(const MumfordDivisor &a, const MumfordDivisor &b) { return !(a == b); }
    std::string str() const;
};

/// Membership check: u monic, deg u <= 2, deg v < deg u, u | v^2 - f.
bool is_valid_divisor(const Genus2Curve &c, const MumfordDivisor &d);
void require_valid_divisor(const Genus2Curve &c, const MumfordDivisor &d);

/// Cantor composition + reduction; the Jacobian group law.
MumfordDivisor cantor_add(const Genus2Curve &c, const MumfordDivisor &a, const MumfordDivisor &b);
MumfordDivisor cantor_neg(const Genus2Curve &c, const MumfordDivisor &a);
MumfordDivisor cantor_mul(const Genus2Curve &c, const MumfordDivisor &a, long k);

struct WpTriple {
    Rational wp11, wp12, wp22;
};

/// wp22 = x1 + x2 and wp12 = x1 x2 read off u directly;
/// wp11 = (F(x1, x2) - 2 y1 y2)/(x1 - x2)^2 with the standard symmetric
/// kernel F (including the monic x^5 coefficient), computed in the splitting
/// extension and projected to the base field with an exactness assertion.
/// Requires deg u = 2 with distinct roots.
WpTriple wp_values(const Genus2Curve &c, const MumfordDivisor &d);

/// Q(u, v) = -(wp11(u) - wp11(v) + wp12(u) wp22(v) - wp12(v) wp22(u)).
Rational q_function(const Genus2Curve &c, const MumfordDivisor &du, const MumfordDivisor &dv);
Rational q_from_triples(const WpTriple &a, const WpTriple &b);

// --- genus-agnostic scalar recursion machinery ---------------------------
// A psi sequence supplied as exact scalars (indexed 0..N, extended oddly to
// negative indices). The same checks serve genus 1 values and genus 2 data.

class ScalarPsi {
  public:
    explicit ScalarPsi(std::vector<QuadExt> values); // values[0] must be 0
    QuadExt at(long n) const;                        // odd extension
    long max_index() const { return static_cast<long>(v_.size()) - 1; }

  private:
    std::vector<QuadExt> v_;
};

/// psi_{n+m} psi_{m-n} = psi_{m+1} psi_{m-1} psi_n^2 - psi_{n+1} psi_{n-1} psi_m^2
/// on the scalar sequence.
bool seq_recursion_holds(const ScalarPsi &psi, long m, long n);

struct Dtoda3Report {
    bool all_hold = true;
    std::size_t checked = 0;
    std::string matched_form; // which displayed shape of the equation holds
    std::vector<std::pair<int, int>> failures;
};

/// Build phi_i^j = psi_{n0+pi+qj} and verify the denominator-free form of
///   delta^{-2} phi^{j+1} phi^{j-1} + c(1-delta^{-2}) phi^2 - phi_{i+1} phi_{i-1} = 0,
/// i.e. psi_p^2 phi^{j+1} phi^{j-1} - psi_{p+q} psi_{p-q} phi^2 - psi_q^2 phi_{i+1} phi_{i-1} = 0.
/// Requires psi_p, psi_q nonzero.
Dtoda3Report dtoda3_grid(const ScalarPsi &psi, int p, int q, int n0, int i_lo, int i_hi,
                         int j_lo, int j_hi);

} // namespace psitoda

#endif
