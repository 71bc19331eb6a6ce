#include "realchern/conjugation/frame.hpp"

#include <map>

#include "realchern/algebra/error.hpp"

namespace realchern {

EquivClass sigma_tilde(const Poly& x, const SpacePtr& space)
{
    EquivClass z(space);
    z.add(0, x);
    return z;
}

UPoly sigma(const Poly& x_mod2, const SpaceModel& space)
{
    if (!same_ring(x_mod2.ring(), space.mod2_ring()))
        throw Error(ErrorCode::RingMismatch, "sigma takes a mod 2 class of " + space.name());
    return UPoly::from_coefficient(x_mod2, 0, space.truncation_degree());
}

UPoly restrict_section(const Poly& x_mod2, const SpaceModel& space)
{
    if (!same_ring(x_mod2.ring(), space.mod2_ring()))
        throw Error(ErrorCode::RingMismatch, "restriction takes a mod 2 class of " + space.name());
    const int cap = space.truncation_degree();
    UPoly out(space.fixed_ring(), cap);
    std::map<int, Poly> parts;
    for (const auto& [m, c] : x_mod2.terms())
        parts.try_emplace(m.degree(), x_mod2.ring()).first->second.add_term(m, c);
    for (const auto& [degree, part] : parts) {
        const int half = degree / 2;
        const Poly k = kappa_apply(part, space);
        for (int i = 0; i <= half; ++i)
            out.add(space.fixed_squares().sq(i, k), half - i);
    }
    return out;
}

UPoly restrict_fixed(const EquivClass& z)
{
    const auto& space = *z.space();
    UPoly out(space.fixed_ring(), space.truncation_degree());
    for (const auto& [k, p] : z.components()) {
        const Poly reduced = k == 0 ? reduce_mod2(p, space.mod2_ring()) : p;
        UPoly image = restrict_section(reduced, space);
        for (const auto& [power, coefficient] : image.coefficients())
            out.add(coefficient, power + 2 * k);
    }
    return out;
}

ConjugationCheck conjugation_equation_check(const Poly& x_mod2, const SpaceModel& space)
{
    ConjugationCheck check{false, 0, Poly(space.fixed_ring()), UPoly(space.fixed_ring(), space.truncation_degree()),
                           ""};
    if (x_mod2.is_zero()) {
        check.holds = true;
        check.detail = "zero class";
        return check;
    }
    if (!x_mod2.is_homogeneous() || x_mod2.min_degree() % 2 != 0) {
        check.detail = "class is not homogeneous of even degree";
        return check;
    }
    const int m = x_mod2.min_degree() / 2;
    check.half_degree = m;
    const UPoly image = restrict_section(x_mod2, space);
    check.leading = image.coefficient(m);
    for (const auto& [power, coefficient] : image.coefficients())
        if (power != m)
            check.lower_terms.add(coefficient, power);
    const Poly expected = kappa_apply(x_mod2, space);
    const bool degree_ok = image.u_degree() <= m;
    check.holds = degree_ok && check.leading == expected;
    if (!degree_ok)
        check.detail = "u-degree " + std::to_string(image.u_degree()) + " exceeds " + std::to_string(m);
    else if (!check.holds)
        check.detail = "leading coefficient " + check.leading.to_string() + " differs from kappa(x) = " +
                       expected.to_string();
    else
        check.detail = "leading " + check.leading.to_string() + ", lower terms " + check.lower_terms.to_string();
    return check;
}

}  // namespace realchern
