#include "psitoda/multipoly.hpp"

#include <limits>
#include <ostream>
#include <sstream>

namespace psitoda {

namespace {

constexpr std::int32_t kMaxExp = 1 << 28;

Exps add_exps(const Exps &a, const Exps &b) {
    Exps r{};
    for (int i = 0; i < kNumVars; ++i) {
        r[i] = a[i] + b[i];
        if (r[i] > kMaxExp) throw DomainError("MultiPoly: exponent overflow");
    }
    return r;
}

bool divides_exps(const Exps &d, const Exps &m) {
    for (int i = 0; i < kNumVars; ++i)
        if (d[i] > m[i]) return false;
    return true;
}

Exps sub_exps(const Exps &m, const Exps &d) {
    Exps r{};
    for (int i = 0; i < kNumVars; ++i) r[i] = m[i] - d[i];
    return r;
}

} // namespace

const char *var_name(Var v) {
    static const char *names[kNumVars] = {"x", "l0", "l1", "l2", "l3", "l4"};
    return names[static_cast<int>(v)];
}

void MultiPoly::insert_term(const Exps &e, const Rational &c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::constant(const Rational &c) {
    MultiPoly p;
    p.insert_term(Exps{}, c);
    return p;
}

MultiPoly MultiPoly::variable(Var v) {
    Exps e{};
    e[static_cast<int>(v)] = 1;
    return monomial(Rational(1), e);
}

MultiPoly MultiPoly::monomial(const Rational &c, const Exps &e) {
    for (auto x : e)
        if (x < 0 || x > kMaxExp) throw DomainError("MultiPoly: bad exponent");
    MultiPoly p;
    p.insert_term(e, c);
    return p;
}

MultiPoly MultiPoly::x_power(const Rational &c, int k) {
    Exps e{};
    e[0] = k;
    return monomial(c, e);
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exps{};
}

Rational MultiPoly::constant_value() const { return coeff(Exps{}); }

Rational MultiPoly::coeff(const Exps &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree(Var v) const {
    int d = -1;
    const int i = static_cast<int>(v);
    for (const auto &[e, c] : terms_)
        if (e[i] > d) d = e[i];
    return terms_.empty() ? -1 : d;
}

bool MultiPoly::univariate_in(Var v) const {
    const int keep = static_cast<int>(v);
    for (const auto &[e, c] : terms_)
        for (int i = 0; i < kNumVars; ++i)
            if (i != keep && e[i] != 0) return false;
    return true;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p;
    for (const auto &[e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPoly operator+(const MultiPoly &p, const MultiPoly &q) {
    MultiPoly r = p;
    for (const auto &[e, c] : q.terms_) r.insert_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly &p, const MultiPoly &q) {
    MultiPoly r = p;
    for (const auto &[e, c] : q.terms_) r.insert_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly &p, const MultiPoly &q) {
    MultiPoly r;
    for (const auto &[ep, cp] : p.terms_)
        for (const auto &[eq, cq] : q.terms_) r.insert_term(add_exps(ep, eq), cp * cq);
    return r;
}

MultiPoly MultiPoly::scaled(const Rational &c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto &[e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

Rational MultiPoly::eval(const std::array<std::optional<Rational>, kNumVars> &binding) const {
    Rational acc(0);
    for (const auto &[e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (!binding[i])
                throw DomainError(std::string("MultiPoly: unbound variable ") +
                                  var_name(static_cast<Var>(i)));
            t *= binding[i]->pow(static_cast<unsigned long>(e[i]));
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(Var v, const Rational &value) const {
    const int i = static_cast<int>(v);
    MultiPoly r;
    for (const auto &[e, c] : terms_) {
        Exps ne = e;
        ne[i] = 0;
        r.insert_term(ne, e[i] == 0 ? c : c * value.pow(static_cast<unsigned long>(e[i])));
    }
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
    const int i = static_cast<int>(v);
    MultiPoly r;
    for (const auto &[e, c] : terms_) {
        if (e[i] == 0) continue;
        Exps ne = e;
        ne[i] -= 1;
        r.insert_term(ne, c * Rational(e[i]));
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::x_coefficients() const {
    std::vector<MultiPoly> out;
    const int dx = degree_x();
    if (dx < 0) return out;
    out.resize(static_cast<std::size_t>(dx) + 1);
    for (const auto &[e, c] : terms_) {
        Exps ne = e;
        const int k = ne[0];
        ne[0] = 0;
        out[static_cast<std::size_t>(k)].insert_term(ne, c);
    }
    return out;
}

MultiPoly MultiPoly::from_x_coefficients(const std::vector<MultiPoly> &coeffs) {
    MultiPoly r;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto &[e, c] : coeffs[k].terms_) {
            if (e[0] != 0) throw DomainError("from_x_coefficients: coefficient uses x");
            Exps ne = e;
            ne[0] = static_cast<std::int32_t>(k);
            r.insert_term(ne, c);
        }
    }
    return r;
}

std::vector<Rational> MultiPoly::x_dense() const {
    if (!univariate_in(Var::X)) throw DomainError("MultiPoly: not univariate in x");
    std::vector<Rational> out(static_cast<std::size_t>(std::max(0, degree_x() + 1)), Rational(0));
    for (const auto &[e, c] : terms_) out[static_cast<std::size_t>(e[0])] = c;
    return out;
}

MultiPoly MultiPoly::from_x_dense(const std::vector<Rational> &coeffs) {
    MultiPoly r;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        r.insert_term([&] { Exps e{}; e[0] = static_cast<std::int32_t>(k); return e; }(), coeffs[k]);
    return r;
}

std::optional<MultiPoly> MultiPoly::divided_exactly_by(const MultiPoly &d) const {
    if (d.is_zero()) throw DomainError("MultiPoly: division by zero polynomial");
    MultiPoly q;
    MultiPoly rem = *this;
    const auto &dlt = *d.terms_.begin(); // leading term, grlex
    while (!rem.is_zero()) {
        const auto &rlt = *rem.terms_.begin();
        if (!divides_exps(dlt.first, rlt.first)) return std::nullopt;
        MultiPoly t = monomial(rlt.second / dlt.second, sub_exps(rlt.first, dlt.first));
        q += t;
        rem -= t * d;
    }
    return q;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        Rational cc = c;
        if (first) {
            if (cc.sign() < 0) { os << "-"; cc = -cc; }
        } else {
            os << (cc.sign() < 0 ? " - " : " + ");
            if (cc.sign() < 0) cc = -cc;
        }
        first = false;
        bool has_vars = e != Exps{};
        if (!has_vars || cc != Rational(1)) os << cc.str() << (has_vars ? "*" : "");
        bool leading = true;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (!leading) os << "*";
            leading = false;
            os << var_name(static_cast<Var>(i));
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const MultiPoly &p) { return os << p.str(); }

} // namespace psitoda
