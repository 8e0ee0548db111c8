#include "psitoda/extint.hpp"

#include <ostream>

namespace psitoda {

std::ostream &operator<<(std::ostream &os, const ExtInt &v) { return os << v.str(); }

} // namespace psitoda
