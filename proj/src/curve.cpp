#include "bidea/curve.hpp"

#include <cmath>

namespace bidea {

void ForceDisplacementCurve::validate() const {
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i].displacement) || !std::isfinite(samples[i].force)) {
            throw DomainError("curve sample " + std::to_string(i) + " is not finite");
        }
        if (i > 0 && !(samples[i].displacement > samples[i - 1].displacement)) {
            throw DomainError("curve displacements must be strictly increasing");
        }
    }
}

} // namespace bidea
