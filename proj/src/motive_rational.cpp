#include "motivic/motive_rational.hpp"

namespace motivic {

YRational mr_chi_y(const MotiveRational& m) {
    YLaurent den = YLaurent::monomial(m.den_lpow2);
    for (int s : m.den_factors)
        den *= YLaurent::monomial(2 * s) - YLaurent::one(); // y^s - 1
    return {chi_y(m.num), den};
}

} // namespace motivic
