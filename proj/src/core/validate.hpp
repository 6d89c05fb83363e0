#pragma once

#include <string>
#include <vector>

namespace softedge {

struct CheckResult {
    std::string name;
    bool passed;
    double measure;    // worst observed deviation
    double threshold;  // allowed deviation (0 for exact checks)
    std::string detail;
};

// Runs the built-in invariant suite (identities, orthonormality, mass, duality,
// exact table identities, reconstruction round trips). Each check is sized to
// finish in well under a second.
std::vector<CheckResult> run_validation();

}  // namespace softedge
