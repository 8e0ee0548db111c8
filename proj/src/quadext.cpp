#include "psitoda/quadext.hpp"

#include <ostream>
#include <sstream>

namespace psitoda {

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    std::ostringstream os;
    if (!a_.is_zero()) os << a_.str() << (b_.sign() > 0 ? "+" : "");
    os << b_.str() << "*sqrt(" << r_.str() << ")";
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const QuadExt &q) { return os << q.str(); }

} // namespace psitoda
