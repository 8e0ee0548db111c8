#include "psitoda/rational.hpp"

#include <cctype>
#include <ostream>

namespace psitoda {

Rational Rational::from_string(const std::string &s) {
    if (s.empty()) throw DomainError("Rational: empty string");
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '/')
            throw DomainError("Rational: bad character in \"" + s + "\"");
    }
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument &) {
        throw DomainError("Rational: cannot parse \"" + s + "\"");
    }
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(r.get_num(), r.get_den());
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace psitoda
