#pragma once

#include "bidea/errors.hpp"

#include <map>
#include <string>
#include <vector>

namespace bidea {

struct CurveSample {
    double displacement = 0.0; ///< m
    double force = 0.0;        ///< N
};

/// Sampled force-displacement curve with provenance metadata.
struct ForceDisplacementCurve {
    std::vector<CurveSample> samples;
    std::string provenance;                 ///< which model produced it
    std::map<std::string, double> params;   ///< parameter snapshot (SI)

    /// Enforces strictly increasing displacements and finite values.
    void validate() const;
};

} // namespace bidea
