#include "psitoda/upoly.hpp"

#include "psitoda/error.hpp"

namespace psitoda {

UPoly up_normalize(UPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

UPoly up_from(std::initializer_list<long> coeffs) {
    UPoly p;
    p.reserve(coeffs.size());
    for (long c : coeffs) p.emplace_back(c);
    return up_normalize(std::move(p));
}

int up_degree(const UPoly &p) { return static_cast<int>(p.size()) - 1; }

bool up_is_zero(const UPoly &p) { return p.empty(); }

UPoly up_add(const UPoly &a, const UPoly &b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return up_normalize(std::move(r));
}

UPoly up_neg(const UPoly &a) {
    UPoly r = a;
    for (auto &c : r) c = -c;
    return r;
}

UPoly up_sub(const UPoly &a, const UPoly &b) { return up_add(a, up_neg(b)); }

UPoly up_mul(const UPoly &a, const UPoly &b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return up_normalize(std::move(r));
}

UPoly up_scale(const UPoly &a, const Rational &c) {
    if (c.is_zero()) return {};
    UPoly r = a;
    for (auto &x : r) x *= c;
    return r;
}

std::pair<UPoly, UPoly> up_divmod(const UPoly &a, const UPoly &b) {
    if (b.empty()) throw DomainError("UPoly: division by zero polynomial");
    UPoly rem = a;
    if (a.size() < b.size()) return {{}, rem};
    UPoly q(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        if (rem.size() <= static_cast<std::size_t>(i) || rem[i].is_zero()) continue;
        Rational f = rem[i] / lead;
        q[i - (b.size() - 1)] = f;
        for (std::size_t j = 0; j < b.size(); ++j) rem[i - (b.size() - 1) + j] -= f * b[j];
    }
    return {up_normalize(std::move(q)), up_normalize(std::move(rem))};
}

UPoly up_mod(const UPoly &a, const UPoly &b) { return up_divmod(a, b).second; }

UPoly up_monic(const UPoly &a) {
    if (a.empty()) return a;
    return up_scale(a, a.back().inverse());
}

UPoly up_gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = up_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return up_monic(a);
}

void up_xgcd(const UPoly &a, const UPoly &b, UPoly &g, UPoly &s, UPoly &t) {
    UPoly r0 = a, r1 = b;
    UPoly s0 = up_from({1}), s1 = {};
    UPoly t0 = {}, t1 = up_from({1});
    while (!r1.empty()) {
        auto [q, r] = up_divmod(r0, r1);
        UPoly s2 = up_sub(s0, up_mul(q, s1));
        UPoly t2 = up_sub(t0, up_mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.empty()) { g = {}; s = {}; t = {}; return; }
    Rational inv = r0.back().inverse();
    g = up_scale(r0, inv);
    s = up_scale(s0, inv);
    t = up_scale(t0, inv);
}

Rational up_eval(const UPoly &p, const Rational &x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QuadExt up_eval(const UPoly &p, const QuadExt &x) {
    QuadExt acc(Rational(0), Rational(0), x.r());
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + QuadExt(*it);
    return acc;
}

UPoly up_derivative(const UPoly &p) {
    if (p.size() <= 1) return {};
    UPoly r(p.size() - 1, Rational(0));
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<long>(i));
    return up_normalize(std::move(r));
}

UPoly up_shift(const UPoly &p, const Rational &x0) {
    // Horner: p(x0 + t) accumulated as a polynomial in t.
    UPoly acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        // acc = acc * (x0 + t) + coeff
        UPoly next(acc.size() + 1, Rational(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * x0;
            next[i + 1] += acc[i];
        }
        if (next.empty()) next.emplace_back(0);
        next[0] += *it;
        acc = up_normalize(std::move(next));
    }
    return acc;
}

bool up_square_free(const UPoly &p) {
    if (up_degree(p) <= 0) return true;
    return up_degree(up_gcd(p, up_derivative(p))) == 0;
}

} // namespace psitoda
