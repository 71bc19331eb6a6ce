#include "realchern/equivariant/twisted_groups.hpp"

#include "realchern/algebra/error.hpp"

namespace realchern {

std::string TwistedGroup::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    if (free_rank > 0)
        out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    if (two_torsion > 0) {
        if (!out.empty())
            out += " + ";
        out += two_torsion == 1 ? "Z/2" : "(Z/2)^" + std::to_string(two_torsion);
    }
    return out;
}

namespace {

/// H^p(BC2; Z(tau)) as (free, torsion).
std::pair<std::size_t, std::size_t> classifying_space_group(int p, int tau)
{
    if (tau == 0) {
        if (p == 0)
            return {1, 0};
        return {0, p % 2 == 0 ? 1u : 0u};
    }
    return {0, p % 2 == 1 ? 1u : 0u};
}

}  // namespace

TwistedGroup twisted_group(const SpaceModel& space, int degree, Twist twist)
{
    if (degree < 0 || degree > space.truncation_degree())
        throw Error(ErrorCode::OutOfRange, "degree " + std::to_string(degree) + " outside [0, " +
                                               std::to_string(space.truncation_degree()) + "]");
    TwistedGroup g;
    for (int q = 0; q <= degree; q += 2) {
        const std::size_t b = space.betti(q);
        if (b == 0)
            continue;
        const int p = degree - q;
        // conjugation cells of dimension 2 mod 4 reverse orientation
        const int tau = (twist.parity + q / 2) % 2;
        auto [free, torsion] = classifying_space_group(p, tau);
        g.free_rank += free * b;
        g.two_torsion += torsion * b;
    }
    return g;
}

std::size_t RankReport::mismatches() const
{
    std::size_t n = 0;
    for (const auto& r : rows)
        n += r.matches() ? 0 : 1;
    return n;
}

RankReport rank_reconciliation(const SpaceModel& space, int up_to)
{
    RankReport report;
    report.space = space.name();
    const auto& ring = *space.integral_ring();
    for (int k = 0; k <= up_to; ++k) {
        for (int eps = 0; eps <= 1; ++eps) {
            RankRow row;
            row.degree = k;
            row.twist = Twist(eps);
            row.group = twisted_group(space, k, row.twist);
            // generator e1 of bidegree (1, 1) with e1^2 = a; a carries twist 0
            const int odd = k % 2;
            for (int j = 0; 2 * j + odd <= k; ++j) {
                const int rest = k - 2 * j - odd;
                const int m = rest / 2;
                if ((m + odd) % 2 != eps)
                    continue;
                const std::size_t count = ring.basis(rest).size();
                if (j == 0 && odd == 0)
                    row.lh_free += count;
                else
                    row.lh_torsion += count;
            }
            report.rows.push_back(row);
        }
    }
    return report;
}

}  // namespace realchern
