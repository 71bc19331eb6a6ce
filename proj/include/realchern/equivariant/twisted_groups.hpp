#pragma once

#include <string>
#include <vector>

#include "realchern/conjugation/space.hpp"
#include "realchern/equivariant/equiv_class.hpp"

namespace realchern {

/// Abelian group Z^free (+) (Z/2)^torsion.
struct TwistedGroup {
    std::size_t free_rank = 0;
    std::size_t two_torsion = 0;

    bool operator==(const TwistedGroup&) const = default;
    bool is_zero() const { return free_rank == 0 && two_torsion == 0; }
    /// "Z^2 + Z/2", "Z", "(Z/2)^3", "0".
    std::string to_string() const;
};

/// H^k_{C2}(X; Z(eps)) for a spherical conjugation complex, read off the
/// degenerate Serre spectral sequence of X -> X_hC2 -> BC2. Row q = 2m
/// carries the module H^q(X;Z) (x) Z(eps + m); the column p contributes
///   p = 0:        Z^b   when the module is untwisted,
///   p > 0 even:   (Z/2)^b when untwisted,
///   p odd:        (Z/2)^b when twisted.
TwistedGroup twisted_group(const SpaceModel& space, int degree, Twist twist);

struct RankRow {
    int degree = 0;
    Twist twist;
    TwistedGroup group;
    std::size_t lh_free = 0;
    std::size_t lh_torsion = 0;
    bool matches() const { return group.free_rank == lh_free && group.two_torsion == lh_torsion; }
};

struct RankReport {
    std::string space;
    std::vector<RankRow> rows;
    std::size_t mismatches() const;
};

/// Compares twisted_group with a count of Leray-Hirsch monomials
/// a^j (x) x (free for j = 0, torsion for j >= 1), plus e1 a^j (x) x in odd
/// degrees, e1 being the degree-1 class of H^1(BC2;Z(1)).
RankReport rank_reconciliation(const SpaceModel& space, int up_to);

}  // namespace realchern
