#pragma once

#include "realchern/algebra/poly.hpp"

namespace realchern {

/// Independent Steenrod-square evaluation through the splitting principle.
///
/// Generator g of p's ring is read as the elementary symmetric polynomial
/// e_j(t_1..t_n) with j = deg(g) / unit_degree, where the t's have degree
/// `unit_degree` and total square Sq(t) = t + t^2 (unit 1) or Sq(t) = t + t^2
/// with Sq^1 t = 0 (unit 2). The square is evaluated on symmetric
/// polynomials kept in the monomial-symmetric basis and rewritten in the
/// elementary basis; e_j with no matching generator of the ring maps to 0
/// (the restriction BO(n) -> BO(k)). No SqAction is consulted.
Poly oracle_sq(int i, const Poly& p, int n_vars, int unit_degree = 1);
Poly oracle_total_sq(const Poly& p, int n_vars, int unit_degree = 1);

}  // namespace realchern
