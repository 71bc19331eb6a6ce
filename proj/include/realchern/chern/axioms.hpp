#pragma once

#include <string>
#include <vector>

#include "realchern/chern/bundle.hpp"

namespace realchern {

struct CheckResult {
    std::string id;       ///< "I", "II", "III", "IV'", "COMPAT", "FIXED"
    std::string subject;  ///< model name(s)
    bool pass = false;
    std::string detail;

    /// "AXIOM <id> <subject> PASS|FAIL <detail>"
    std::string line() const;
};

struct AxiomSuite {
    std::vector<RealBundle> bundles;
    std::vector<SpaceMap> maps;
    /// Name of the Hopf bundle over the 2-sphere used for Axiom IV'.
    std::string hopf = "hopf";
};

/// Runs every axiom check on the suite. Checks may run concurrently; the
/// result is sorted by (id, subject) and does not depend on scheduling.
/// Throws MissingHopf when the suite has no bundle named `suite.hopf`.
std::vector<CheckResult> verify_axioms(const AxiomSuite& suite, bool parallel = true);

}  // namespace realchern
