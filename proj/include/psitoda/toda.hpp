#ifndef PSITODA_TODA_HPP
#define PSITODA_TODA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psitoda/psi.hpp"
#include "psitoda/quadext.hpp"

namespace psitoda {

/// Inclusive index window of a grid.
struct GridRange {
    int i_lo, i_hi, j_lo, j_hi;
};

/// phi_i^j = psi_{n0 + p i + q j} evaluated at a fixed point, plus the
/// derived constants delta^2 = (psi_q/psi_p)^2 and
/// c(1-delta^2) = psi_{p+q} psi_{p-q} / psi_p^2.
class TodaContext {
  public:
    TodaContext(PsiSequence &seq, const PointValue &pt, int p, int q, int n0);

    int p() const { return p_; }
    int q() const { return q_; }
    int n0() const { return n0_; }
    const PointValue &point() const { return pt_; }
    const QuadExt &delta2() const { return delta2_; }
    const QuadExt &c1md2() const { return c1md2_; }
    /// c = c(1-delta^2) / (1-delta^2); requires delta^2 != 1.
    QuadExt c() const;

    long n_at(int i, int j) const { return n0_ + static_cast<long>(p_) * i + static_cast<long>(q_) * j; }
    /// Exact phi value (memoized per index n).
    QuadExt phi(int i, int j);

  private:
    PsiSequence &seq_;
    PointValue pt_;
    int p_, q_, n0_;
    QuadExt delta2_, c1md2_;
    std::map<long, QuadExt> cache_;
};

/// Grid cell: an exact value or the projective infinity marker (display
/// only; all verification is denominator-free at the phi level).
struct GridValue {
    bool inf = false;
    QuadExt v;
    static GridValue infinity() { return GridValue{true, QuadExt(0)}; }
    static GridValue of(QuadExt x) { return GridValue{false, std::move(x)}; }
    friend bool operator==(const GridValue &a, const GridValue &b) {
        return a.inf == b.inf && (a.inf || a.v == b.v);
    }
};

enum class GridKind { Phi, U, V };

struct TodaGrid {
    GridKind kind;
    GridRange range;
    std::vector<std::vector<GridValue>> cells; // [j - j_lo][i - i_lo]
    const GridValue &at(int i, int j) const {
        return cells.at(static_cast<std::size_t>(j - range.j_lo))
            .at(static_cast<std::size_t>(i - range.i_lo));
    }
};

struct TodaGrids {
    TodaGrid phi, u, v;
};

/// Build phi/U/V over the window. U_i^j = phi_{i+1} phi_{i-1} / phi_i^2 with
/// an explicit infinity when only the denominator vanishes; a 0/0 cell
/// raises IndeterminateError naming (i, j). V = U - c.
TodaGrids build_grids(TodaContext &ctx, const GridRange &range);
TodaGrid build_grid(TodaContext &ctx, GridKind kind, const GridRange &range);

struct CellCheck {
    int i, j;
    bool holds;
};
struct TodaReport {
    std::vector<CellCheck> cells;
    bool all_hold = true;
    std::size_t checked = 0, skipped = 0;
};

/// phi_i^{j+1} phi_i^{j-1} - c(1-d^2) (phi_i^j)^2 - d^2 phi_{i+1} phi_{i-1} = 0
/// exactly at every cell of the window; the denominator-free master check.
TodaReport verify_dtoda_phi(TodaContext &ctx, const GridRange &range);

/// Cross-multiplied ratio form
/// (c+V)^2 (c+d^2 V_{i+1})(c+d^2 V_{i-1}) = (c+d^2 V)^2 (c+V^{j+1})(c+V^{j-1})
/// at cells whose six factors are finite; infinity-touching cells are counted
/// as skipped (the phi-level check covers them).
TodaReport verify_dtodaV(TodaContext &ctx, const GridRange &range);

/// True iff psi_{p+q} psi_{p-q} + psi_p^2 - psi_q^2 vanishes at the point
/// (the unit-coefficient solution condition).
bool check_c1(PsiSequence &seq, const PointValue &pt, long p, long q);

/// psi_p^2 psi_{N+q} psi_{N-q} - psi_q^2 psi_{N+p} psi_{N-p}
///   = psi_N^2 psi_{p+q} psi_{p-q} as CurveElements.
bool master_identity_holds(PsiSequence &seq, long p, long q, long N);

} // namespace psitoda

#endif
