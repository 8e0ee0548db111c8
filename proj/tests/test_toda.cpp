#include <doctest.h>

#include "psitoda/reference_data.hpp"
#include "psitoda/toda.hpp"
#include "testutil.hpp"

using namespace psitoda;

namespace {

void check_u_table(const UTable &t) {
    PsiSequence seq = ref_sequence(RefCurveId::A3);
    TodaContext ctx(seq, table1_point(), t.p, t.q, t.n0);
    CHECK(ctx.delta2() == QuadExt(t.delta2));
    CHECK(ctx.c1md2() == QuadExt(t.c1md2));
    TodaGrid g = build_grid(ctx, GridKind::U, GridRange{0, 3, 0, 3});
    for (int j = 0; j <= 3; ++j) {
        for (int i = 0; i <= 3; ++i) {
            const auto &exp = t.rows[static_cast<std::size_t>(j)].cells[static_cast<std::size_t>(i)];
            const GridValue &got = g.at(i, j);
            if (exp) {
                CHECK(!got.inf);
                CHECK(got.v == QuadExt(*exp));
            } else {
                CHECK(got.inf);
            }
        }
    }
}

} // namespace

TEST_CASE("U grids reproduce the reference 4x4 tables with infinity placement") {
    check_u_table(table2_expected());
    check_u_table(table3_expected());
}

TEST_CASE("phi value at (1,1) for the (3,2) window is psi_5 at the point") {
    PsiSequence seq = ref_sequence(RefCurveId::A3);
    TodaContext ctx(seq, table1_point(), 3, 2, 0);
    CHECK(ctx.phi(1, 1) == QuadExt(Rational(1)));
}

TEST_CASE("context preconditions") {
    PsiSequence seq = ref_sequence(RefCurveId::A3);
    CHECK_THROWS_AS(TodaContext(seq, table1_point(), 4, 2, 0), DomainError); // not coprime
    // psi_6 vanishes at the table point: p = 6 violates the nonvanishing assumption
    CHECK_THROWS_AS(TodaContext(seq, table1_point(), 6, 1, 0), DomainError);
}

TEST_CASE("spot check of the quadratic relation from reference values") {
    // cell n = 5 of the (3,2) window: psi7 psi3 - (1/4) psi5^2 - (-3/4) psi8 psi2 = 0
    PsiSequence seq = ref_sequence(RefCurveId::A3);
    PointValue pt = table1_point();
    QuadExt lhs = element_eval(seq.psi(7), pt) * element_eval(seq.psi(3), pt) -
                  QuadExt(Rational(1, 4)) * element_eval(seq.psi(5), pt) * element_eval(seq.psi(5), pt) -
                  QuadExt(Rational(-3, 4)) * element_eval(seq.psi(8), pt) * element_eval(seq.psi(2), pt);
    CHECK(lhs.is_zero());
}

TEST_CASE("master identity as curve elements") {
    // symbolic, the (3,2,5) instance
    EllipticCurve sym = EllipticCurve::symbolic();
    PsiSequence seq = PsiSequence::canonical(sym);
    CHECK(master_identity_holds(seq, 3, 2, 5));
    // and on a reference curve with the listed seeds
    PsiSequence a2 = ref_sequence(RefCurveId::A2);
    CHECK(master_identity_holds(a2, 3, 2, 5));
    CHECK(master_identity_holds(a2, 5, 2, 7));
}

TEST_CASE("exact discrete-Toda verification on grids") {
    PsiSequence seq = ref_sequence(RefCurveId::A3);
    TodaContext ctx(seq, table1_point(), 3, 2, 0);
    TodaReport rep = verify_dtoda_phi(ctx, GridRange{0, 3, 0, 3});
    CHECK(rep.all_hold);
    CHECK(rep.checked == 16);
}

TEST_CASE("ratio form holds where all factors are finite") {
    PsiSequence seq = ref_sequence(RefCurveId::A3);
    TodaContext ctx(seq, table1_point(), 3, 2, 0);
    CHECK(ctx.c() == QuadExt(Rational(1, 7))); // (1/4) / (1 + 3/4)
    TodaReport rep = verify_dtodaV(ctx, GridRange{0, 3, 1, 2});
    CHECK(rep.all_hold);
    CHECK(rep.checked > 0);
    CHECK(rep.skipped > 0); // the infinity rows are covered at the phi level

    TodaContext ctx3(seq, table1_point(), 2, 3, 0);
    TodaReport rep3 = verify_dtodaV(ctx3, GridRange{0, 3, 0, 3});
    CHECK(rep3.all_hold);
}

TEST_CASE("constant V grids satisfy the ratio form trivially") {
    // any cell set where U is constant: rows j = 1, 2 of table 2 have column
    // period 2; the identity on the constant-in-j strip still holds exactly,
    // which the previous case covers. Here check a synthetic constant grid
    // through the same structure: c + v on both sides.
    QuadExt c(Rational(1, 7)), v(Rational(2, 3)), d2(Rational(-3, 4));
    QuadExt lhs = (c + v) * (c + v) * (c + d2 * v) * (c + d2 * v);
    QuadExt rhs = (c + d2 * v) * (c + d2 * v) * (c + v) * (c + v);
    CHECK(lhs == rhs);
}

TEST_CASE("0/0 cells are indeterminate and name their position") {
    // For honest psi grids the zero set of n -> psi_n(pt) is the set of
    // multiples of the point's order, so a 0/0 cell would force psi_p = 0 and
    // the context precondition already rejects it. The defensive path is
    // exercised with a degenerate seeded sequence vanishing at n = 3, 4, 5.
    EllipticCurve c = ref_curve(RefCurveId::A2);
    PointValue pt(c, Rational(2), QuadExt::theta(Rational(6)));
    MultiPoly lin = MultiPoly::variable(Var::X) - MultiPoly::constant(Rational(2));
    PsiSequence seq = PsiSequence::with_seeds(
        c, CurveElement::y(c).scaled(Rational(-2)),
        CurveElement::from_parts(c, lin * lin, {}),
        CurveElement::from_parts(c, {}, lin.scaled(Rational(-2))));
    TodaContext ctx(seq, pt, 1, 2, 0); // psi_1 = 1, psi_2 = -2y: both nonzero
    try {
        (void)build_grid(ctx, GridKind::U, GridRange{4, 4, 0, 0}); // cell n = 4
        FAIL("expected IndeterminateError");
    } catch (const IndeterminateError &e) {
        CHECK(std::string(e.what()).find("(i=4, j=0)") != std::string::npos);
    }
}

TEST_CASE("U grid infinity where only the denominator vanishes") {
    PsiSequence seq = ref_sequence(RefCurveId::A3);
    TodaContext ctx(seq, table1_point(), 3, 2, 0);
    TodaGrid u = build_grid(ctx, GridKind::U, GridRange{0, 0, 0, 0});
    CHECK(u.at(0, 0).inf); // psi_3 psi_-3 / psi_0^2
}

TEST_CASE("U is invariant under re-gauging phi -> lambda^n phi") {
    // U = phi_{i+1} phi_{i-1} / phi_i^2 kills lambda^{n+p} lambda^{n-p} / lambda^{2n}
    PsiSequence seq = ref_sequence(RefCurveId::A3);
    TodaContext ctx(seq, table1_point(), 3, 2, 0);
    const Rational lam(2, 3);
    for (int j = 1; j <= 2; ++j) {
        for (int i = 0; i <= 3; ++i) {
            QuadExt num = ctx.phi(i + 1, j) * ctx.phi(i - 1, j);
            QuadExt den = ctx.phi(i, j) * ctx.phi(i, j);
            if (den.is_zero()) continue;
            QuadExt u = num / den;
            // scaled grid
            auto scale = [&](int ii, int jj) {
                long n = ctx.n_at(ii, jj);
                Rational s(1);
                Rational base = n >= 0 ? lam : lam.inverse();
                for (long k = 0; k < std::labs(n); ++k) s *= base;
                return ctx.phi(ii, jj) * QuadExt(s);
            };
            QuadExt u2 = (scale(i + 1, j) * scale(i - 1, j)) / (scale(i, j) * scale(i, j));
            CHECK(u == u2);
        }
    }
}

TEST_CASE("U and the derived constants are branch-independent") {
    PsiSequence seq = ref_sequence(RefCurveId::A3);
    PointValue pt = table1_point();
    PointValue conj = pt.conjugate_branch();
    TodaContext a(seq, pt, 3, 2, 0), b(seq, conj, 3, 2, 0);
    CHECK(a.delta2() == b.delta2());
    CHECK(a.c1md2() == b.c1md2());
    TodaGrid ua = build_grid(a, GridKind::U, GridRange{0, 3, 0, 3});
    TodaGrid ub = build_grid(b, GridKind::U, GridRange{0, 3, 0, 3});
    for (int j = 0; j <= 3; ++j)
        for (int i = 0; i <= 3; ++i) CHECK(ua.at(i, j) == ub.at(i, j));
}

TEST_CASE("unit-coefficient condition check") {
    PsiSequence a3 = ref_sequence(RefCurveId::A3);
    CHECK(!check_c1(a3, table1_point(), 3, 2));
    // the root-scan point (0, 1/2) of A1 satisfies the condition for (2,1)
    EllipticCurve a1c = ref_curve(RefCurveId::A1);
    PsiSequence a1 = PsiSequence::canonical(a1c);
    PointValue pt(a1c, Rational(0), QuadExt(Rational(1, 2)));
    CHECK(check_c1(a1, pt, 2, 1));
}

TEST_CASE("dtoda verification at random points") {
    testutil::Rng rng(41);
    PsiSequence seq = ref_sequence(RefCurveId::A1);
    int done = 0;
    while (done < 2) {
        PointValue pt = testutil::rand_point(rng, ref_curve(RefCurveId::A1));
        if (element_eval(seq.psi(3), pt).is_zero() || element_eval(seq.psi(2), pt).is_zero())
            continue;
        TodaContext ctx(seq, pt, 3, 2, 0);
        TodaReport rep = verify_dtoda_phi(ctx, GridRange{0, 2, 0, 2});
        CHECK(rep.all_hold);
        ++done;
    }
}

TEST_CASE("exceptional point satisfies the condition through cancellation") {
    // canonical sequence on y^2 = x^3 - x at the 2-torsion point (0,0):
    // psi_{p+q} and psi_{p-q} vanish (even indices) and psi_3^2 = psi_1^2 = 1
    EllipticCurve c = ref_curve(RefCurveId::A2);
    PsiSequence seq = PsiSequence::canonical(c);
    PointValue two_torsion(c, Rational(0), QuadExt(Rational(0)));
    CHECK(element_eval(seq.psi(4), two_torsion).is_zero());
    CHECK(element_eval(seq.psi(3), two_torsion) == QuadExt(Rational(-1)));
    CHECK(check_c1(seq, two_torsion, 3, 1));
}

TEST_CASE("dtoda verification for the swapped window (2,3) on every sample curve") {
    testutil::Rng rng(97);
    for (RefCurveId id : {RefCurveId::A1, RefCurveId::A2, RefCurveId::A3}) {
        PsiSequence seq = ref_sequence(id);
        EllipticCurve curve = ref_curve(id);
        int done = 0;
        while (done < 3) {
            PointValue pt = testutil::rand_point(rng, curve);
            if (element_eval(seq.psi(2), pt).is_zero() || element_eval(seq.psi(3), pt).is_zero())
                continue;
            TodaContext ctx(seq, pt, 2, 3, 0);
            CHECK(verify_dtoda_phi(ctx, GridRange{0, 3, 0, 3}).all_hold);
            ++done;
        }
    }
}
