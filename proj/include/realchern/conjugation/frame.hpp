#pragma once

#include <string>

#include "realchern/algebra/upoly.hpp"
#include "realchern/equivariant/equiv_class.hpp"

namespace realchern {

/// Integral lift of the section: the Leray-Hirsch coordinate embedding
/// x -> 1 (x) x.
EquivClass sigma_tilde(const Poly& x, const SpacePtr& space);

/// The F2 section sigma in H*(X;F2)[u] coordinates (x -> x u^0).
UPoly sigma(const Poly& x_mod2, const SpaceModel& space);

/// r(sigma(x)) for homogeneous x of degree 2m:
///   sum_{i=0..m} Sq^i(kappa(x)) u^{m-i}
/// extended additively over the homogeneous parts of x.
UPoly restrict_section(const Poly& x_mod2, const SpaceModel& space);

/// Restriction of an equivariant class to H*(X^tau;F2)[u]: integral parts
/// reduced mod 2 and sent through restrict_section, a -> u^2.
UPoly restrict_fixed(const EquivClass& z);

struct ConjugationCheck {
    bool holds = false;
    int half_degree = 0;
    Poly leading;
    UPoly lower_terms;
    std::string detail;
};

/// r(sigma(x)) = kappa(x) u^m + lower terms, for homogeneous x of degree 2m.
ConjugationCheck conjugation_equation_check(const Poly& x_mod2, const SpaceModel& space);

}  // namespace realchern
