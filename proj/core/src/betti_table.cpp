#include "gfsuper/betti_table.hpp"

#include <sstream>

namespace gfsuper {

std::string BettiTable::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) os << ',';
        os << dims[i];
    }
    os << ')';
    if (empty_space) os << " [empty]";
    return os.str();
}

}  // namespace gfsuper
