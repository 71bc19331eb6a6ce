#include "realchern/chern/bundle.hpp"

#include "realchern/algebra/error.hpp"

namespace realchern {

namespace {

void check_unital(const Poly& p, const std::string& what)
{
    if (p.constant_term() != 1)
        throw Error(ErrorCode::NotUnital, what + " must have constant term 1");
}

}  // namespace

RealBundle RealBundle::unchecked(std::string name, SpacePtr base, Poly total_chern, Poly total_sw_fixed)
{
    if (!base)
        throw Error(ErrorCode::InvalidModel, name + ": bundle without a base");
    if (!same_ring(total_chern.ring(), base->integral_ring()))
        throw Error(ErrorCode::RingMismatch, name + ": total Chern class must be an integral class of " + base->name());
    if (!same_ring(total_sw_fixed.ring(), base->fixed_ring()))
        throw Error(ErrorCode::RingMismatch,
                    name + ": fixed Stiefel-Whitney class must live in the fixed ring of " + base->name());
    check_unital(total_chern, name + ": total Chern class");
    check_unital(total_sw_fixed, name + ": total fixed Stiefel-Whitney class");

    RealBundle b(std::move(name), std::move(base), std::move(total_chern), std::move(total_sw_fixed));
    const Poly expected = kappa_apply(reduce_mod2(b.chern_, b.base_->mod2_ring()), *b.base_);
    b.compatible_ = expected == b.sw_;
    if (!b.compatible_)
        b.compatibility_detail_ = "kappa(red c) = " + expected.to_string() + " but w = " + b.sw_.to_string();
    return b;
}

RealBundle RealBundle::create(std::string name, SpacePtr base, Poly total_chern, Poly total_sw_fixed)
{
    RealBundle b = unchecked(std::move(name), std::move(base), std::move(total_chern), std::move(total_sw_fixed));
    if (!b.compatible())
        throw Error(ErrorCode::InvalidModel, b.name() + ": " + b.compatibility_detail());
    return b;
}

Poly RealBundle::chern(int n) const
{
    if (n < 0 || 2 * n > base_->truncation_degree())
        throw Error(ErrorCode::DegreeOverflow, "c_" + std::to_string(n) + " is above the truncation degree");
    return homogeneous_part(chern_, 2 * n);
}

Poly RealBundle::sw_fixed(int n) const
{
    if (n < 0 || n > base_->fixed_ring()->truncation_degree())
        throw Error(ErrorCode::DegreeOverflow, "w_" + std::to_string(n) + " is above the truncation degree");
    return homogeneous_part(sw_, n);
}

EquivClass equivariant_chern(const RealBundle& b, int n)
{
    return sigma_tilde(b.chern(n), b.base());
}

EquivClass total_equivariant_chern(const RealBundle& b)
{
    return sigma_tilde(b.total_chern(), b.base());
}

RealBundle whitney_sum(const RealBundle& a, const RealBundle& b, const std::string& name)
{
    if (a.base() != b.base() && a.base()->name() != b.base()->name())
        throw Error(ErrorCode::SpaceMismatch, "Whitney sum of bundles over " + a.base()->name() + " and " +
                                                  b.base()->name());
    return RealBundle::unchecked(name.empty() ? a.name() + "+" + b.name() : name, a.base(),
                                 a.total_chern() * b.total_chern(), a.total_sw_fixed() * b.total_sw_fixed());
}

Poly forget_chern(const RealBundle& b, int n)
{
    return forget(equivariant_chern(b, n));
}

UPoly restriction_formula(const RealBundle& b, int n)
{
    const auto& space = *b.base();
    UPoly out(space.fixed_ring(), space.truncation_degree());
    if (n > space.fixed_ring()->truncation_degree())
        return out;
    const Poly w = b.sw_fixed(n);
    for (int i = 0; i <= n; ++i)
        out.add(space.fixed_squares().sq(i, w), n - i);
    return out;
}

UPoly restrict_chern(const RealBundle& b, int n)
{
    UPoly via_frame = restrict_fixed(equivariant_chern(b, n));
    UPoly direct = restriction_formula(b, n);
    if (!(via_frame == direct))
        throw Error(ErrorCode::InternalMismatch, b.name() + ": r(c~_" + std::to_string(n) + ") = " +
                                                     via_frame.to_string() + " but the Sq formula gives " +
                                                     direct.to_string());
    return via_frame;
}

Poly kahn_reduction(const RealBundle& b, int n)
{
    if (!b.base()->trivial_involution())
        throw Error(ErrorCode::NotTrivialInvolution, b.base()->name() + " is not flagged trivial_involution");
    return restrict_chern(b, n).coefficient(n);
}

SpaceMap::SpaceMap(std::string name, SpacePtr source, SpacePtr target, std::vector<Poly> integral_images,
                   std::vector<Poly> fixed_images)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)),
      integral_images_(std::move(integral_images)), fixed_images_(std::move(fixed_images))
{
    if (integral_images_.size() != target_->integral_ring()->size() ||
        fixed_images_.size() != target_->fixed_ring()->size())
        throw Error(ErrorCode::MissingImage, name_ + ": one image per generator of " + target_->name() + " required");
    // degree checks happen inside apply_ring_map; run them once up front
    apply_ring_map(Poly(target_->integral_ring()), source_->integral_ring(), integral_images_);
    apply_ring_map(Poly(target_->fixed_ring()), source_->fixed_ring(), fixed_images_);
    for (const auto& p : integral_images_)
        mod2_images_.push_back(reduce_mod2(p, source_->mod2_ring()));
}

Poly SpaceMap::pull_integral(const Poly& x) const
{
    return apply_ring_map(x, source_->integral_ring(), integral_images_);
}

Poly SpaceMap::pull_mod2(const Poly& x) const
{
    return apply_ring_map(x, source_->mod2_ring(), mod2_images_);
}

Poly SpaceMap::pull_fixed(const Poly& x) const
{
    return apply_ring_map(x, source_->fixed_ring(), fixed_images_);
}

EquivClass SpaceMap::pull(const EquivClass& z) const
{
    EquivClass out(source_);
    for (const auto& [k, p] : z.components())
        out.add(k, k == 0 ? pull_integral(p) : pull_mod2(p));
    return out;
}

UPoly SpaceMap::pull(const UPoly& y) const
{
    const bool fixed_side = same_ring(y.coefficient_ring(), target_->fixed_ring());
    UPoly out(fixed_side ? source_->fixed_ring() : source_->mod2_ring(), source_->truncation_degree());
    for (const auto& [k, p] : y.coefficients())
        out.add(fixed_side ? pull_fixed(p) : pull_mod2(p), k);
    return out;
}

RealBundle SpaceMap::pull(const RealBundle& b) const
{
    if (b.base()->name() != target_->name())
        throw Error(ErrorCode::SpaceMismatch, name_ + " pulls back bundles over " + target_->name() + ", not " +
                                                  b.base()->name());
    return RealBundle::unchecked(name_ + "*" + b.name(), source_, pull_integral(b.total_chern()),
                                 pull_fixed(b.total_sw_fixed()));
}

bool SpaceMap::commutes_with_kappa(std::string* detail) const
{
    const auto& gens = target_->mod2_ring()->generators();
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const Poly x = Poly::generator(target_->mod2_ring(), g);
        const Poly lhs = kappa_apply(pull_mod2(x), *source_);
        const Poly rhs = pull_fixed(kappa_apply(x, *target_));
        if (!(lhs == rhs)) {
            if (detail)
                *detail = "kappa(f*" + gens[g].name + ") = " + lhs.to_string() + " but f*kappa(" + gens[g].name +
                          ") = " + rhs.to_string();
            return false;
        }
    }
    return true;
}

}  // namespace realchern
