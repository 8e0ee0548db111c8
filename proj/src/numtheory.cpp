#include "psitoda/numtheory.hpp"

#include <algorithm>

#include "psitoda/error.hpp"

namespace psitoda {

namespace {

Integer pollard_rho(const Integer &n, unsigned long c0) {
    // Brent's variant; n composite, odd, not a prime power of interest.
    Integer x(2), y(2), d(1), c(c0);
    auto f = [&](const Integer &v) { return Integer((v * v + c) % n); };
    Integer diff;
    while (d == 1) {
        x = f(x);
        y = f(f(y));
        diff = x > y ? x - y : y - x;
        if (diff == 0) return Integer(0); // cycle without factor; retry with new c
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    return d == n ? Integer(0) : d;
}

void factor_rec(Integer n, std::map<Integer, int> &out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        out[n] += 1;
        return;
    }
    // Perfect powers first, then rho.
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                std::map<Integer, int> sub;
                factor_rec(root, sub);
                for (auto &[p, e] : sub) out[p] += e * static_cast<int>(k);
                return;
            }
        }
    }
    for (unsigned long c = 1; c < 64; ++c) {
        Integer d = pollard_rho(n, c);
        if (d != 0) {
            factor_rec(d, out);
            factor_rec(n / d, out);
            return;
        }
    }
    throw DomainError("factorize: failed to factor " + n.get_str());
}

} // namespace

std::map<Integer, int> factorize(Integer n) {
    if (n <= 0) throw DomainError("factorize: need n > 0");
    std::map<Integer, int> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Integer(p)] += 1;
            n /= p;
        }
    }
    long p = 17;
    while (n > 1 && p < 100000 && Integer(p) * p <= n) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Integer(p)] += 1;
            n /= p;
        }
        p += 2;
    }
    if (n > 1) factor_rec(n, out);
    return out;
}

std::vector<Integer> divisors(const Integer &n, std::size_t cap) {
    auto fac = factorize(n);
    std::vector<Integer> out{Integer(1)};
    for (const auto &[prime, e] : fac) {
        std::size_t grown = out.size() * static_cast<std::size_t>(e + 1);
        if (grown > cap) throw DomainError("divisors: too many divisors");
        std::vector<Integer> next;
        next.reserve(grown);
        Integer pk(1);
        for (int k = 0; k <= e; ++k) {
            for (const auto &d : out) next.push_back(d * pk);
            pk *= prime;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace psitoda
