#include <algorithm>

#include "psitoda/multipoly.hpp"
#include "psitoda/numtheory.hpp"
#include "psitoda/upoly.hpp"

namespace psitoda {

int root_multiplicity(const MultiPoly &p, const Rational &x0) {
    if (p.is_zero()) throw DomainError("root_multiplicity: zero polynomial");
    UPoly u = p.x_dense();
    int mult = 0;
    while (true) {
        // synthetic division by (x - x0); exact iff remainder vanishes
        Rational rem(0);
        UPoly q(u.size() > 1 ? u.size() - 1 : 0, Rational(0));
        for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i) {
            Rational cur = u[static_cast<std::size_t>(i)] + rem * x0;
            if (i == 0) { rem = cur; break; }
            q[static_cast<std::size_t>(i) - 1] = cur;
            rem = cur;
        }
        if (!rem.is_zero()) return mult;
        ++mult;
        u = up_normalize(std::move(q));
        if (u.empty()) throw InternalError("root_multiplicity: exhausted polynomial");
    }
}

std::vector<std::pair<Rational, int>> rational_roots(const MultiPoly &p) {
    if (p.is_zero()) throw DomainError("rational_roots: zero polynomial");
    UPoly u = p.x_dense();

    std::vector<std::pair<Rational, int>> out;

    // factor out x^k
    std::size_t k = 0;
    while (k < u.size() && u[k].is_zero()) ++k;
    if (k > 0) {
        out.emplace_back(Rational(0), static_cast<int>(k));
        u.erase(u.begin(), u.begin() + static_cast<long>(k));
    }
    if (up_degree(u) < 1) {
        std::sort(out.begin(), out.end());
        return out;
    }

    // cleared-denominator primitive form
    Integer lcm(1);
    for (const auto &c : u) if (!c.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Integer> z;
    z.reserve(u.size());
    for (const auto &c : u) z.push_back(c.num() * (lcm / c.den()));
    Integer content(0);
    for (const auto &c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    for (auto &c : z) c /= content;

    Integer a0 = ::abs(z.front());
    Integer an = ::abs(z.back());
    auto nums = divisors(a0);
    auto dens = divisors(an);

    for (const auto &n : nums) {
        for (const auto &d : dens) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
            if (g != 1) continue; // only lowest terms, avoids duplicates
            for (int sign : {1, -1}) {
                Rational cand(sign > 0 ? n : -n, d);
                if (!up_eval(u, cand).is_zero()) continue;
                MultiPoly mp = MultiPoly::from_x_dense(u);
                out.emplace_back(cand, root_multiplicity(mp, cand));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace psitoda
