#include "psitoda/tropical.hpp"

#include <numeric>

#include "psitoda/error.hpp"

namespace psitoda {

namespace {

ExtInt zero_max(const ExtInt &x) {
    if (x.is_pos_inf()) return ExtInt::pos_inf();
    if (x.is_neg_inf()) return ExtInt(0);
    return max(ExtInt(0), x);
}

} // namespace

FGridResult f_grid(PsiSequence &seq, const ValuationPoint &pt, int p, int q, int n0,
                   const GridRange &range, bool negate) {
    if (p <= 0 || q <= 0 || std::gcd(p, q) != 1)
        throw DomainError("f_grid: p, q must be coprime positive integers");
    FGridResult res;
    long max_n = 0;
    for (int j = range.j_lo; j <= range.j_hi; ++j)
        for (int i = range.i_lo - 1; i <= range.i_hi + 1; ++i)
            max_n = std::max(max_n, std::labs(n0 + static_cast<long>(p) * i + static_cast<long>(q) * j));
    max_n = std::max({max_n, static_cast<long>(p + q), static_cast<long>(p)});
    res.g = g_sequence(seq, pt, max_n);
    auto g_at = [&](long n) {
        // g_{-n} = g_n: psi is odd in n, valuation ignores the sign
        return res.g.at(static_cast<std::size_t>(std::labs(n)));
    };
    if (!g_at(p).is_finite() || !g_at(q).is_finite())
        throw DomainError("f_grid: psi_p and psi_q must not vanish identically at the place");

    res.val_c1md2 = g_at(p + q) + g_at(p - q) - (2 * g_at(p));
    res.unit_condition = (res.val_c1md2 == ExtInt(0));

    res.grid.range = range;
    res.grid.d = -(2 * (g_at(q) - g_at(p)));
    for (int j = range.j_lo; j <= range.j_hi; ++j) {
        std::vector<ExtInt> row;
        for (int i = range.i_lo; i <= range.i_hi; ++i) {
            const long n = n0 + static_cast<long>(p) * i + static_cast<long>(q) * j;
            ExtInt f = g_at(n + p) + g_at(n - p) - (2 * g_at(n));
            row.push_back(negate ? -f : f);
        }
        res.grid.cells.push_back(std::move(row));
    }
    return res;
}

UdteReport verify_uDTE(const TropicalGrid &grid) {
    UdteReport rep;
    const ExtInt &d = grid.d;
    const GridRange &r = grid.range;
    for (int j = r.j_lo + 1; j <= r.j_hi - 1; ++j) {
        for (int i = r.i_lo + 1; i <= r.i_hi - 1; ++i) {
            const ExtInt &fc = grid.at(i, j);
            const ExtInt refs[5] = {fc, grid.at(i, j + 1), grid.at(i, j - 1), grid.at(i + 1, j),
                                    grid.at(i - 1, j)};
            bool finite = d.is_finite();
            for (const auto &v : refs) finite = finite && v.is_finite();
            if (!finite) {
                // attempt under the max conventions; inf - inf is a finding
                try {
                    ExtInt lhs = grid.at(i, j + 1) - (2 * fc) + grid.at(i, j - 1);
                    ExtInt rhs = zero_max(grid.at(i + 1, j) + d) - (2 * zero_max(fc + d)) +
                                 zero_max(grid.at(i - 1, j) + d);
                    rep.cells.push_back({i, j,
                                         lhs == rhs ? UdteCell::Status::SkippedInf
                                                    : UdteCell::Status::Fails});
                } catch (const IndeterminateError &) {
                    rep.cells.push_back({i, j, UdteCell::Status::Indeterminate});
                    ++rep.indeterminate;
                }
                ++rep.skipped_inf;
                continue;
            }
            ExtInt lhs = grid.at(i, j + 1) - (2 * fc) + grid.at(i, j - 1);
            ExtInt rhs = zero_max(grid.at(i + 1, j) + d) - (2 * zero_max(fc + d)) +
                         zero_max(grid.at(i - 1, j) + d);
            bool holds = (lhs == rhs);
            rep.cells.push_back({i, j, holds ? UdteCell::Status::Holds : UdteCell::Status::Fails});
            rep.all_finite_hold = rep.all_finite_hold && holds;
            ++rep.checked;
        }
    }
    return rep;
}

TropicalGrid evolve(const std::vector<ExtInt> &row_jm1, const std::vector<ExtInt> &row_j,
                    const ExtInt &d, int steps, Boundary boundary, const ExtInt &left,
                    const ExtInt &right) {
    if (row_jm1.size() != row_j.size() || row_j.empty())
        throw DomainError("evolve: seed rows must be nonempty and of equal length");
    if (steps < 0) throw DomainError("evolve: steps must be nonnegative");
    const int width = static_cast<int>(row_j.size());

    TropicalGrid g;
    g.range = GridRange{1, width, -1, steps};
    g.d = d;
    g.cells.push_back(row_jm1);
    g.cells.push_back(row_j);

    auto fetch = [&](const std::vector<ExtInt> &row, int i) -> ExtInt {
        if (i >= 0 && i < width) return row[static_cast<std::size_t>(i)];
        if (boundary == Boundary::Periodic)
            return row[static_cast<std::size_t>(((i % width) + width) % width)];
        return i < 0 ? left : right;
    };

    for (int step = 0; step < steps; ++step) {
        const auto &prev = g.cells[g.cells.size() - 2];
        const auto &cur = g.cells.back();
        std::vector<ExtInt> next;
        next.reserve(row_j.size());
        for (int i = 0; i < width; ++i) {
            try {
                ExtInt v = (2 * cur[static_cast<std::size_t>(i)]) - prev[static_cast<std::size_t>(i)] +
                           zero_max(fetch(cur, i + 1) + d) -
                           (2 * zero_max(cur[static_cast<std::size_t>(i)] + d)) +
                           zero_max(fetch(cur, i - 1) + d);
                next.push_back(v);
            } catch (const IndeterminateError &) {
                throw IndeterminateError("evolve: inf - inf at (i=" + std::to_string(i + 1) +
                                         ", j=" + std::to_string(step + 1) + ")");
            }
        }
        g.cells.push_back(std::move(next));
    }
    return g;
}

GenericityReport genericity_check(PsiSequence &seq, const ValuationPoint &pt, int p, int q,
                                  int n0, const GridRange &range) {
    GenericityReport rep;
    long max_n = 0;
    for (int j = range.j_lo; j <= range.j_hi; ++j)
        for (int i = range.i_lo - 1; i <= range.i_hi + 1; ++i)
            max_n = std::max(max_n, std::labs(n0 + static_cast<long>(p) * i +
                                              static_cast<long>(q) * j) + std::max(p, q));
    max_n = std::max(max_n, static_cast<long>(p + q));
    std::vector<ExtInt> g = g_sequence(seq, pt, max_n);
    auto g_at = [&](long n) { return g.at(static_cast<std::size_t>(std::labs(n))); };
    if (!g_at(p).is_finite() || !g_at(q).is_finite())
        throw DomainError("genericity_check: psi_p and psi_q must not vanish identically");

    // val(c(1-d^2)) is a constant; val(d^2 U) and val of the sum are grid
    // functions of the g table. The sum c(1-d^2) + d^2 U equals
    // phi^{j+1} phi^{j-1} / phi^2 identically (the discrete bilinear
    // identity), which is what makes this exact without leading-coefficient
    // arithmetic in extension fields.
    const ExtInt val_cd = g_at(p + q) + g_at(p - q) - (2 * g_at(p));
    for (int j = range.j_lo; j <= range.j_hi; ++j) {
        for (int i = range.i_lo; i <= range.i_hi; ++i) {
            const long n = n0 + static_cast<long>(p) * i + static_cast<long>(q) * j;
            GenericityCell cell;
            cell.i = i;
            cell.j = j;
            ExtInt two_gn = 2 * g_at(n);
            try {
                cell.val_a = val_cd;
                cell.val_b = (2 * (g_at(q) - g_at(p))) + g_at(n + p) + g_at(n - p) - two_gn;
                cell.val_sum = g_at(n + q) + g_at(n - q) - two_gn;
            } catch (const IndeterminateError &) {
                // both phi_i^j and a neighbor vanish: the U cell itself is 0/0
                throw IndeterminateError("genericity_check: 0/0 cell at (i=" + std::to_string(i) +
                                         ", j=" + std::to_string(j) + ")");
            }
            cell.flagged = min(cell.val_a, cell.val_b) < cell.val_sum;
            rep.cells.push_back(cell);
            if (cell.flagged) rep.flags.push_back(cell);
        }
    }
    return rep;
}

} // namespace psitoda
