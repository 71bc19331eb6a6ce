#pragma once

#include <string>
#include <vector>

#include "realchern/conjugation/frame.hpp"
#include "realchern/equivariant/equiv_class.hpp"

namespace realchern {

/// A Real bundle over a conjugation-space model, recorded by its total
/// Chern class and the total Stiefel-Whitney class of its fixed real bundle.
class RealBundle {
public:
    /// Validated: both classes unital, kappa(red c) = w.
    static RealBundle create(std::string name, SpacePtr base, Poly total_chern, Poly total_sw_fixed);
    /// Skips the compatibility requirement (still checks rings and units);
    /// the verdict is kept in compatible().
    static RealBundle unchecked(std::string name, SpacePtr base, Poly total_chern, Poly total_sw_fixed);

    const std::string& name() const noexcept { return name_; }
    const SpacePtr& base() const noexcept { return base_; }
    const Poly& total_chern() const noexcept { return chern_; }
    const Poly& total_sw_fixed() const noexcept { return sw_; }

    /// Ordinary c_n: degree-2n part of the total class.
    Poly chern(int n) const;
    /// w_n of the fixed bundle.
    Poly sw_fixed(int n) const;

    bool compatible() const noexcept { return compatible_; }
    const std::string& compatibility_detail() const noexcept { return compatibility_detail_; }

private:
    RealBundle(std::string name, SpacePtr base, Poly chern, Poly sw)
        : name_(std::move(name)), base_(std::move(base)), chern_(std::move(chern)), sw_(std::move(sw))
    {
    }

    std::string name_;
    SpacePtr base_;
    Poly chern_;
    Poly sw_;
    bool compatible_ = true;
    std::string compatibility_detail_;
};

/// c~_n(b) = sigma~(c_n(b)), bidegree (2n, n mod 2).
EquivClass equivariant_chern(const RealBundle& b, int n);
/// 1 + c~_1 + c~_2 + ... up to the cap.
EquivClass total_equivariant_chern(const RealBundle& b);

RealBundle whitney_sum(const RealBundle& a, const RealBundle& b, const std::string& name = "");

Poly forget_chern(const RealBundle& b, int n);

/// sum_{i=0..n} Sq^i(w_n) u^{n-i} from the fixed Stiefel-Whitney class,
/// with Sq from the fixed ring's action.
UPoly restriction_formula(const RealBundle& b, int n);

/// r(c~_n(b)), computed through the frame and checked against
/// restriction_formula. Throws InternalMismatch when they differ.
UPoly restrict_chern(const RealBundle& b, int n);

/// Leading u^n coefficient of restrict_chern(b, n) over a base with trivial
/// involution; equals w_n of the bundle.
Poly kahn_reduction(const RealBundle& b, int n);

/// Equivariant map Y -> X recorded by the pullbacks of X's integral and
/// fixed generators.
class SpaceMap {
public:
    SpaceMap(std::string name, SpacePtr source, SpacePtr target, std::vector<Poly> integral_images,
             std::vector<Poly> fixed_images);

    const std::string& name() const noexcept { return name_; }
    const SpacePtr& source() const noexcept { return source_; }
    const SpacePtr& target() const noexcept { return target_; }

    Poly pull_integral(const Poly& x) const;
    Poly pull_mod2(const Poly& x) const;
    Poly pull_fixed(const Poly& x) const;
    EquivClass pull(const EquivClass& z) const;
    UPoly pull(const UPoly& y) const;
    RealBundle pull(const RealBundle& b) const;

    /// kappa_Y(f^* g) = (f^tau)^* kappa_X(g) on every generator g of X.
    bool commutes_with_kappa(std::string* detail = nullptr) const;

private:
    std::string name_;
    SpacePtr source_;
    SpacePtr target_;
    std::vector<Poly> integral_images_;
    std::vector<Poly> mod2_images_;
    std::vector<Poly> fixed_images_;
};

}  // namespace realchern
