#include "tripleint/laurent.hpp"

#include <stdexcept>

namespace tripleint {

Laurent2 reduce_homogeneous(const Laurent3& f) {
    if (!f.is_homogeneous())
        throw std::logic_error("y3 = 1 reduction requires a degree-0 homogeneous input");
    Laurent2 r;
    for (const auto& [e, c] : f.terms()) r.add_term({e[0], e[1]}, c);
    return r;
}

} // namespace tripleint
