#ifndef PSITODA_TROPICAL_HPP
#define PSITODA_TROPICAL_HPP

#include <string>
#include <vector>

#include "psitoda/extint.hpp"
#include "psitoda/toda.hpp"
#include "psitoda/valuation.hpp"

namespace psitoda {

/// Extended-integer grid of the ultradiscrete layer, indexed like the Toda
/// grids: entry (i, j) with the same window conventions.
struct TropicalGrid {
    GridRange range;
    std::vector<std::vector<ExtInt>> cells; // [j - j_lo][i - i_lo]
    ExtInt d = ExtInt(0);
    const ExtInt &at(int i, int j) const {
        return cells.at(static_cast<std::size_t>(j - range.j_lo))
            .at(static_cast<std::size_t>(i - range.i_lo));
    }
};

struct FGridResult {
    TropicalGrid grid;
    std::vector<ExtInt> g;  // g_n for n = 0..max used
    ExtInt val_c1md2;       // val(psi_{p+q} psi_{p-q} / psi_p^2)
    bool unit_condition;    // val_c1md2 == 0, the standing assumption
};

/// f_i^j = g_{i+1,j} - 2 g_{i,j} + g_{i-1,j} with g_{i,j} = val(psi_{n0+pi+qj});
/// d = -val(delta^2) = -2 (g_q - g_p). When `negate` is set the grid is
/// emitted with the opposite sign (the literal -val(U) reading); the default
/// matches the bundled reference tables.
FGridResult f_grid(PsiSequence &seq, const ValuationPoint &pt, int p, int q, int n0,
                   const GridRange &range, bool negate = false);

struct UdteCell {
    int i, j;
    enum class Status { Holds, Fails, SkippedInf, Indeterminate } status;
};
struct UdteReport {
    std::vector<UdteCell> cells;
    bool all_finite_hold = true;
    std::size_t checked = 0, skipped_inf = 0, indeterminate = 0;
};

/// f_i^{j+1} - 2 f_i^j + f_i^{j-1} =
///   max(0, f_{i+1}^j + d) - 2 max(0, f_i^j + d) + max(0, f_{i-1}^j + d)
/// over the interior of the grid. Cells whose nine referenced entries are not
/// all finite are listed separately (max(0, +inf) = +inf, max(0, -inf) = 0;
/// inf - inf is an indeterminate finding, never a value).
UdteReport verify_uDTE(const TropicalGrid &grid);

enum class Boundary { Fixed, Periodic };

/// Run the update as an explicit evolver from two seed rows (j-1 and j).
/// Fixed boundaries pin the supplied flanking values; periodic wraps.
/// Throws IndeterminateError on an inf - inf update, naming the cell.
TropicalGrid evolve(const std::vector<ExtInt> &row_jm1, const std::vector<ExtInt> &row_j,
                    const ExtInt &d, int steps, Boundary boundary,
                    const ExtInt &left = ExtInt(0), const ExtInt &right = ExtInt(0));

struct GenericityCell {
    int i, j;
    ExtInt val_sum, val_a, val_b; // val(c(1-d^2) + d^2 U), val parts
    bool flagged;                 // strict super-minimality: min rule broken
};
struct GenericityReport {
    std::vector<GenericityCell> cells;
    std::vector<GenericityCell> flags;
};

/// Flags cells where val(c(1-delta^2) + delta^2 U_i^j) exceeds
/// min(val c(1-delta^2), val(delta^2 U_i^j)) strictly, i.e. where the
/// ultradiscretization of the discrete equation is not justified.
GenericityReport genericity_check(PsiSequence &seq, const ValuationPoint &pt, int p, int q,
                                  int n0, const GridRange &range);

} // namespace psitoda

#endif
