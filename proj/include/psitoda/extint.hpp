#ifndef PSITODA_EXTINT_HPP
#define PSITODA_EXTINT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "psitoda/error.hpp"

namespace psitoda {

/// Integer extended by +inf and -inf, the value domain of discrete
/// valuations and of the max-plus grids built on them.
///
/// finite + finite is finite, k + (+inf) = +inf for finite k, and
/// (+inf) + (-inf) throws IndeterminateError -- never a silent value.
class ExtInt {
  public:
    ExtInt() : kind_(Kind::Finite), v_(0) {}
    ExtInt(std::int64_t v) : kind_(Kind::Finite), v_(v) {}

    static ExtInt pos_inf() { return ExtInt(Kind::PosInf); }
    static ExtInt neg_inf() { return ExtInt(Kind::NegInf); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    std::int64_t finite_value() const {
        if (!is_finite()) throw DomainError("ExtInt: not finite");
        return v_;
    }

    ExtInt operator-() const {
        switch (kind_) {
            case Kind::PosInf: return neg_inf();
            case Kind::NegInf: return pos_inf();
            default: return ExtInt(-v_);
        }
    }

    friend ExtInt operator+(const ExtInt &a, const ExtInt &b) {
        if (a.is_finite() && b.is_finite()) return ExtInt(a.v_ + b.v_);
        if (a.is_pos_inf()) {
            if (b.is_neg_inf()) throw IndeterminateError("ExtInt: (+inf) + (-inf)");
            return pos_inf();
        }
        if (a.is_neg_inf()) {
            if (b.is_pos_inf()) throw IndeterminateError("ExtInt: (-inf) + (+inf)");
            return neg_inf();
        }
        return b.is_pos_inf() ? pos_inf() : neg_inf();
    }
    friend ExtInt operator-(const ExtInt &a, const ExtInt &b) { return a + (-b); }
    friend ExtInt operator*(std::int64_t k, const ExtInt &a) {
        if (a.is_finite()) return ExtInt(k * a.v_);
        if (k == 0) throw IndeterminateError("ExtInt: 0 * inf");
        return (k > 0) == a.is_pos_inf() ? pos_inf() : neg_inf();
    }

    friend bool operator==(const ExtInt &a, const ExtInt &b) {
        if (a.kind_ != b.kind_) return false;
        return !a.is_finite() || a.v_ == b.v_;
    }
    friend bool operator!=(const ExtInt &a, const ExtInt &b) { return !(a == b); }
    friend bool operator<(const ExtInt &a, const ExtInt &b) {
        if (a.kind_ == b.kind_) return a.is_finite() && a.v_ < b.v_;
        if (a.is_neg_inf() || b.is_pos_inf()) return true;
        return false;
    }
    friend bool operator<=(const ExtInt &a, const ExtInt &b) { return a < b || a == b; }
    friend bool operator>(const ExtInt &a, const ExtInt &b) { return b < a; }
    friend bool operator>=(const ExtInt &a, const ExtInt &b) { return b <= a; }

    friend ExtInt min(const ExtInt &a, const ExtInt &b) { return a < b ? a : b; }
    friend ExtInt max(const ExtInt &a, const ExtInt &b) { return a < b ? b : a; }

    std::string str() const {
        if (is_pos_inf()) return "inf";
        if (is_neg_inf()) return "-inf";
        return std::to_string(v_);
    }

  private:
    enum class Kind { Finite, PosInf, NegInf };
    explicit ExtInt(Kind k) : kind_(k), v_(0) {}
    Kind kind_;
    std::int64_t v_;
};

std::ostream &operator<<(std::ostream &os, const ExtInt &v);

} // namespace psitoda

#endif
