#include "psitoda/genus2.hpp"

#include <sstream>

#include "psitoda/error.hpp"
#include "psitoda/multipoly.hpp"

namespace psitoda {

std::string MumfordDivisor::str() const {
    std::ostringstream os;
    os << "(u=" << MultiPoly::from_x_dense(u).str() << ", v=" << MultiPoly::from_x_dense(v).str()
       << ")";
    return os.str();
}

bool is_valid_divisor(const Genus2Curve &c, const MumfordDivisor &d) {
    if (up_is_zero(d.u) || d.u.back() != Rational(1)) return false;
    if (up_degree(d.u) > 2) return false;
    if (!up_is_zero(d.v) && up_degree(d.v) >= up_degree(d.u)) return false;
    UPoly rem = up_mod(up_sub(up_mul(d.v, d.v), c.f()), d.u);
    return up_is_zero(rem);
}

void require_valid_divisor(const Genus2Curve &c, const MumfordDivisor &d) {
    if (!is_valid_divisor(c, d)) throw DomainError("MumfordDivisor: u | v^2 - f violated");
}

MumfordDivisor cantor_neg(const Genus2Curve &c, const MumfordDivisor &a) {
    require_valid_divisor(c, a);
    return {a.u, up_neg(a.v)};
}

MumfordDivisor cantor_add(const Genus2Curve &c, const MumfordDivisor &a, const MumfordDivisor &b) {
    require_valid_divisor(c, a);
    require_valid_divisor(c, b);
    const UPoly f = c.f();

    // composition (Cantor): d = gcd(u1, u2, v1 + v2) with Bezout data
    UPoly d1, e1, e2;
    up_xgcd(a.u, b.u, d1, e1, e2);
    UPoly d, c1, c2;
    up_xgcd(d1, up_add(a.v, b.v), d, c1, c2);
    // s1 = c1 e1, s2 = c1 e2, s3 = c2
    UPoly s1 = up_mul(c1, e1), s2 = up_mul(c1, e2), s3 = c2;

    UPoly u = up_divmod(up_mul(a.u, b.u), up_mul(d, d)).first;
    // v = (s1 u1 v2 + s2 u2 v1 + s3 (v1 v2 + f)) / d mod u
    UPoly num = up_add(up_add(up_mul(up_mul(s1, a.u), b.v), up_mul(up_mul(s2, b.u), a.v)),
                       up_mul(s3, up_add(up_mul(a.v, b.v), f)));
    auto [vq, vr] = up_divmod(num, d);
    if (!up_is_zero(vr)) throw InternalError("cantor_add: composition division not exact");
    UPoly v = up_mod(vq, u);

    // reduction to deg u <= 2
    while (up_degree(u) > 2) {
        auto [q2, r2] = up_divmod(up_sub(f, up_mul(v, v)), u);
        if (!up_is_zero(r2)) throw InternalError("cantor_add: reduction division not exact");
        UPoly unext = up_monic(q2);
        v = up_mod(up_neg(v), unext);
        u = std::move(unext);
    }
    u = up_monic(u);
    MumfordDivisor out{u, up_mod(v, u)};
    if (!is_valid_divisor(c, out)) throw InternalError("cantor_add: unreduced or invalid output");
    return out;
}

MumfordDivisor cantor_mul(const Genus2Curve &c, const MumfordDivisor &a, long k) {
    MumfordDivisor base = k < 0 ? cantor_neg(c, a) : a;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    MumfordDivisor acc = MumfordDivisor::identity();
    while (e) {
        if (e & 1ul) acc = cantor_add(c, acc, base);
        e >>= 1ul;
        if (e) base = cantor_add(c, base, base);
    }
    return acc;
}

namespace {

/// F(x, z) = sum_{j=0..2} x^j z^j (l_{2j+1} (x + z) + 2 l_{2j}) with l5 = 1
/// (the monic x^5 coefficient; the formula's top weight term).
QuadExt f_kernel(const Genus2Curve &c, const QuadExt &x, const QuadExt &z) {
    QuadExt acc(Rational(0));
    QuadExt xz = x * z;
    QuadExt xzj(Rational(1));
    for (int j = 0; j <= 2; ++j) {
        Rational l_odd = (2 * j + 1 == 5) ? Rational(1) : c.lambda(2 * j + 1);
        QuadExt term = QuadExt(l_odd) * (x + z) + QuadExt(c.lambda(2 * j) * Rational(2));
        acc += xzj * term;
        xzj *= xz;
    }
    return acc;
}

} // namespace

WpTriple wp_values(const Genus2Curve &c, const MumfordDivisor &d) {
    require_valid_divisor(c, d);
    if (up_degree(d.u) != 2)
        throw DomainError("wp_values: divisor outside the generic stratum (deg u != 2)");
    const Rational a1 = d.u[1], a0 = d.u[0];
    const Rational disc = a1 * a1 - Rational(4) * a0;
    if (disc.is_zero()) throw DomainError("wp_values: coincident points (x1 = x2)");

    WpTriple t;
    t.wp22 = -a1;
    t.wp12 = a0;

    // split: x_{1,2} = (-a1 +- theta)/2 with theta^2 = disc
    const QuadExt th = QuadExt::theta(disc);
    const QuadExt half(Rational(1, 2));
    QuadExt x1 = (QuadExt(-a1) + th) * half;
    QuadExt x2 = (QuadExt(-a1) - th) * half;
    QuadExt y1 = up_eval(d.v, x1);
    QuadExt y2 = up_eval(d.v, x2);
    QuadExt num = f_kernel(c, x1, x2) - QuadExt(Rational(2)) * y1 * y2;
    QuadExt w11 = num / QuadExt(disc); // (x1 - x2)^2 = disc
    if (!w11.is_rational())
        throw InternalError("wp_values: symmetric value fell outside the base field");
    t.wp11 = w11.rational_value();
    return t;
}

Rational q_from_triples(const WpTriple &a, const WpTriple &b) {
    return -(a.wp11 - b.wp11 + a.wp12 * b.wp22 - b.wp12 * a.wp22);
}

Rational q_function(const Genus2Curve &c, const MumfordDivisor &du, const MumfordDivisor &dv) {
    return q_from_triples(wp_values(c, du), wp_values(c, dv));
}

ScalarPsi::ScalarPsi(std::vector<QuadExt> values) : v_(std::move(values)) {
    if (v_.empty() || !v_[0].is_zero()) throw DomainError("ScalarPsi: values[0] must be psi_0 = 0");
}

QuadExt ScalarPsi::at(long n) const {
    long k = n < 0 ? -n : n;
    if (k >= static_cast<long>(v_.size())) throw DomainError("ScalarPsi: index beyond the supplied data");
    const QuadExt &v = v_[static_cast<std::size_t>(k)];
    return n < 0 ? -v : v;
}

bool seq_recursion_holds(const ScalarPsi &psi, long m, long n) {
    QuadExt lhs = psi.at(n + m) * psi.at(m - n);
    QuadExt rhs = psi.at(m + 1) * psi.at(m - 1) * psi.at(n) * psi.at(n) -
                  psi.at(n + 1) * psi.at(n - 1) * psi.at(m) * psi.at(m);
    return (lhs - rhs).is_zero();
}

Dtoda3Report dtoda3_grid(const ScalarPsi &psi, int p, int q, int n0, int i_lo, int i_hi,
                         int j_lo, int j_hi) {
    Dtoda3Report rep;
    QuadExt vp = psi.at(p), vq = psi.at(q);
    if (vp.is_zero() || vq.is_zero())
        throw DomainError("dtoda3_grid: psi_p and psi_q must be nonzero");
    QuadExt k = psi.at(p + q) * psi.at(p - q); // psi_p^2 c(1-delta^2) = -psi_q^2 c(1-delta^-2)
    rep.matched_form =
        "delta^-2 phi(j+1)phi(j-1) + c(1-delta^-2) phi^2 - phi(i+1)phi(i-1) = 0 with "
        "c(1-delta^-2) = -psi_{p+q}psi_{p-q}/psi_q^2";
    auto phi = [&](int i, int j) {
        return psi.at(n0 + static_cast<long>(p) * i + static_cast<long>(q) * j);
    };
    for (int j = j_lo; j <= j_hi; ++j) {
        for (int i = i_lo; i <= i_hi; ++i) {
            // multiplied through by psi_p^2 psi_q^2 / (psi_q^2):
            // psi_p^2 phi^{j+1}phi^{j-1} - K phi^2 - psi_q^2 phi_{i+1}phi_{i-1} = 0
            QuadExt lhs = vp * vp * phi(i, j + 1) * phi(i, j - 1) - k * phi(i, j) * phi(i, j) -
                          vq * vq * phi(i + 1, j) * phi(i - 1, j);
            bool holds = lhs.is_zero();
            rep.all_hold = rep.all_hold && holds;
            if (!holds) rep.failures.emplace_back(i, j);
            ++rep.checked;
        }
    }
    return rep;
}

} // namespace psitoda
