#include <doctest.h>

#include "realchern/algebra/parser.hpp"
#include "realchern/conjugation/frame.hpp"
#include "realchern/equivariant/twisted_groups.hpp"
#include "support/support.hpp"

using namespace realchern;
using rc_test::Gen;

namespace {

const SpacePtr& space(std::string_view name)
{
    return rc_test::catalogue().space(name);
}

/// H^p(BC2; Z(tau)) from the cellular cochains of RP^infinity: one Z per
/// degree, delta^p = 1 + (-1)^(p+1+tau).
TwistedGroup bc2_group(int p, int tau)
{
    auto delta = [tau](int d) { return d < 0 ? 0 : 1 + ((d + 1 + tau) % 2 == 0 ? 1 : -1); };
    if (delta(p) != 0)
        return {0, 0};
    const int image = delta(p - 1);
    if (image == 0)
        return {1, 0};
    return {0, image == 2 ? 1u : 0u};
}

/// Degenerate E2 page assembled from the cochain computation above.
TwistedGroup e2_oracle(const SpaceModel& sp, int degree, int eps)
{
    TwistedGroup total;
    for (int q = 0; q <= degree; q += 2) {
        const std::size_t b = sp.integral_ring()->basis(q).size();
        const TwistedGroup g = bc2_group(degree - q, (eps + q / 2) % 2);
        total.free_rank += b * g.free_rank;
        total.two_torsion += b * g.two_torsion;
    }
    return total;
}

UPoly upoly(const SpacePtr& sp, std::vector<std::pair<std::string, int>> terms)
{
    UPoly out(sp->mod2_ring(), sp->truncation_degree());
    for (const auto& [text, k] : terms)
        out.add(parse_poly(text, sp->mod2_ring()), k);
    return out;
}

}  // namespace

TEST_CASE("twisted groups: examples")
{
    CHECK(twisted_group(*space("S2"), 2, Twist(0)).to_string() == "Z/2");
    CHECK(twisted_group(*space("S4"), 4, Twist(0)).to_string() == "Z + Z/2");
    CHECK(twisted_group(*space("S2"), 3, Twist(0)).to_string() == "Z/2");
    const auto& pt = *space("point");
    for (int k = 1; 2 * k <= 16; ++k)
        CHECK(twisted_group(pt, 2 * k, Twist(0)) == TwistedGroup{0, 1});
    for (int k = 0; 2 * k + 1 <= 16; ++k) {
        CHECK(twisted_group(pt, 2 * k + 1, Twist(1)) == TwistedGroup{0, 1});
        CHECK(twisted_group(pt, 2 * k + 1, Twist(0)).is_zero());
    }
    CHECK(twisted_group(pt, 0, Twist(0)).to_string() == "Z");
    CHECK(twisted_group(pt, 0, Twist(1)).to_string() == "0");
    CHECK(twisted_group(*space("BU4"), 4, Twist(0)).to_string() == "Z^2 + Z/2");
    CHECK(TwistedGroup{0, 3}.to_string() == "(Z/2)^3");
    CHECK(rc_test::thrown_code([&] { twisted_group(pt, 17, Twist(0)); }) == ErrorCode::OutOfRange);
    CHECK(Twist(1) + Twist(1) == Twist(0));
    CHECK(Twist(-1) == Twist(1));
}

TEST_CASE("twisted groups agree with the cochain oracle on every space")
{
    for (const auto& sp : rc_test::catalogue().spaces())
        for (int k = 0; k <= sp->truncation_degree(); ++k)
            for (int eps = 0; eps <= 1; ++eps) {
                CAPTURE(sp->name());
                CAPTURE(k);
                CAPTURE(eps);
                CHECK(twisted_group(*sp, k, Twist(eps)) == e2_oracle(*sp, k, eps));
            }
}

TEST_CASE("rank reconciliation")
{
    auto bu = rank_reconciliation(*space("BU4"), 12);
    CHECK(bu.mismatches() == 0);
    for (const auto& row : bu.rows)
        if (row.degree == 4 && row.twist == Twist(0)) {
            CHECK(row.lh_free == 2);
            CHECK(row.lh_torsion == 1);
        }
    auto s2 = rank_reconciliation(*space("S2"), 2);
    CHECK(s2.rows.size() == 6);
    for (const auto& row : s2.rows) {
        if (row.degree == 2 && row.twist == Twist(0)) {
            CHECK(row.lh_free == 0);
            CHECK(row.lh_torsion == 1);
        }
        if (row.degree == 0 && row.twist == Twist(0)) {
            CHECK(row.lh_free == 1);
            CHECK(row.lh_torsion == 0);
        }
    }
    for (const auto& sp : rc_test::catalogue().spaces()) {
        CAPTURE(sp->name());
        CHECK(rank_reconciliation(*sp, sp->truncation_degree()).mismatches() == 0);
    }
}

TEST_CASE("property: diagonal free rank is the even Betti number")
{
    for (const auto& sp : rc_test::catalogue().spaces())
        for (int n = 0; 2 * n <= sp->truncation_degree(); ++n)
            CHECK(twisted_group(*sp, 2 * n, Twist(n)).free_rank == sp->betti(2 * n));
}

TEST_CASE("equivariant products and bidegrees")
{
    const auto& s2 = space("S2");
    const EquivClass h = sigma_tilde(s2->integral("h"), s2);
    CHECK((h * h).is_zero());
    CHECK(a_power(s2, 1) * a_power(s2, 1) == a_power(s2, 2));
    CHECK(h.bidegrees() == std::set<std::pair<int, int>>{{2, 1}});
    CHECK((a_power(s2, 1) * h).bidegrees() == std::set<std::pair<int, int>>{{4, 1}});
    CHECK(a_power(s2, 1).is_homogeneous(2, Twist(0)));
    // 2a = 0
    CHECK(a_power(s2, 1).scaled(2).is_zero());
    CHECK((a_power(s2, 1) * sigma_tilde(s2->integral("3*h"), s2)).component(1) == s2->mod2("h"));

    const auto& bu = space("BU4");
    const EquivClass c1 = sigma_tilde(bu->integral("c1"), bu);
    CHECK(c1 * c1 == sigma_tilde(bu->integral("c1^2"), bu));
    CHECK((c1 * c1).is_homogeneous(4, Twist(0)));
    CHECK(c1.is_homogeneous(2, Twist(1)));
    CHECK((a_power(bu, 1) + c1).to_string() == "{k=0: c1; k=1: 1}");

    CHECK(rc_test::thrown_code([&] { h* c1; }) == ErrorCode::SpaceMismatch);
    CHECK(rc_test::thrown_code([&] { a_power(s2, -1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("forget and mod 2 reduction: examples")
{
    const auto& s2 = space("S2");
    CHECK(forget(sigma_tilde(s2->integral("1 + h"), s2)) == s2->integral("1 + h"));
    CHECK(forget(a_power(s2, 1)).is_zero());
    CHECK(reduce_equiv_mod2(sigma_tilde(s2->integral("h"), s2)) == upoly(s2, {{"h", 0}}));
    CHECK(reduce_equiv_mod2(a_power(s2, 1)) == upoly(s2, {{"1", 2}}));
    CHECK(reduce_equiv_mod2(sigma_tilde(s2->integral("2*h"), s2)).is_zero());
    CHECK(sigma(s2->mod2("h"), *s2) == upoly(s2, {{"h", 0}}));
}

TEST_CASE("integral lift: examples and errors")
{
    const auto& s2 = space("S2");
    const auto h = s2->integral("h");
    CHECK(integral_lift(h, upoly(s2, {{"h", 0}}), s2) == sigma_tilde(h, s2));
    CHECK(integral_lift(Poly(s2->integral_ring()), upoly(s2, {{"1", 2}}), s2) == a_power(s2, 1));
    CHECK(integral_lift(h, upoly(s2, {{"h", 0}, {"1", 2}}), s2) == sigma_tilde(h, s2) + a_power(s2, 1));
    CHECK(rc_test::thrown_code([&] { integral_lift(h, upoly(s2, {{"1", 0}}), s2); }) ==
          ErrorCode::IncompatiblePair);
    CHECK(rc_test::thrown_code([&] { integral_lift(h, upoly(s2, {{"h", 0}, {"1", 1}}), s2); }) ==
          ErrorCode::OddDegree);
    CHECK(rc_test::thrown_code([&] { integral_lift(space("BU4")->integral("c1"), upoly(s2, {}), s2); }) ==
          ErrorCode::RingMismatch);
}

TEST_CASE("property: forget and reduction are ring homomorphisms")
{
    Gen g(31);
    for (const auto& sp : rc_test::catalogue().spaces()) {
        for (int trial = 0; trial < 25; ++trial) {
            EquivClass z = rc_test::random_equiv(g, sp, 8);
            EquivClass w = rc_test::random_equiv(g, sp, 8);
            CHECK(forget(z * w) == forget(z) * forget(w));
            CHECK(forget(z + w) == forget(z) + forget(w));
            CHECK(reduce_equiv_mod2(z * w) == reduce_equiv_mod2(z) * reduce_equiv_mod2(w));
            CHECK(reduce_equiv_mod2(z + w) == reduce_equiv_mod2(z) + reduce_equiv_mod2(w));
        }
    }
}

TEST_CASE("property: section law and pullback square")
{
    Gen g(32);
    for (const auto& sp : rc_test::catalogue().spaces()) {
        for (int trial = 0; trial < 100; ++trial) {
            const Poly x = rc_test::random_poly(g, sp->integral_ring(), sp->truncation_degree(), 4, 9);
            CHECK(forget(sigma_tilde(x, sp)) == x);
            EquivClass z = rc_test::random_equiv(g, sp, sp->truncation_degree());
            CHECK(integral_lift(forget(z), reduce_equiv_mod2(z), sp) == z);
        }
        // sigma~ is the lift of sigma on the monomial basis
        for (const auto& m : rc_test::all_monomials(sp->integral_ring(), sp->truncation_degree())) {
            const Poly x = Poly::term(sp->integral_ring(), m);
            CHECK(integral_lift(x, sigma(reduce_mod2(x), *sp), sp) == sigma_tilde(x, sp));
        }
    }
}
