#include "jgpi/rational.hpp"

#include <ostream>

namespace jgpi {

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace jgpi
