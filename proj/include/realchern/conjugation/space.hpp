#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "realchern/algebra/poly.hpp"
#include "realchern/steenrod/sq_action.hpp"

namespace realchern {

class SpaceModel;
using SpacePtr = std::shared_ptr<const SpaceModel>;

/// Everything needed to build a SpaceModel. Polynomials in `mod2_squares`
/// must live in the Mod2 companion of `integral_ring`; `fixed_squares` and
/// `kappa` values in `fixed_ring`.
struct SpaceDefinition {
    std::string name;
    RingPtr integral_ring;
    RingPtr fixed_ring;
    SqDeclarations mod2_squares;
    SqDeclarations fixed_squares;
    std::map<std::string, Poly> kappa;
    bool trivial_involution = false;
};

/// Cohomological description of a conjugation space X: H*(X;Z) with even
/// generators, its mod 2 reduction, H*(X^tau;F2), Steenrod actions on both
/// F2 rings, and the degree-halving isomorphism kappa on generators.
class SpaceModel {
public:
    /// Validates the definition: even integral generators, fixed cap equal to
    /// half the integral cap, kappa images of half degree, kappa killing every
    /// relation, and kappa bijective in every even degree <= cap.
    static SpacePtr create(SpaceDefinition definition);

    const std::string& name() const noexcept { return name_; }
    const RingPtr& integral_ring() const noexcept { return integral_; }
    const RingPtr& mod2_ring() const noexcept { return mod2_; }
    const RingPtr& fixed_ring() const noexcept { return fixed_; }
    const SqAction& mod2_squares() const noexcept { return *mod2_sq_; }
    const SqAction& fixed_squares() const noexcept { return *fixed_sq_; }
    const SqActionPtr& mod2_squares_ptr() const noexcept { return mod2_sq_; }
    const SqActionPtr& fixed_squares_ptr() const noexcept { return fixed_sq_; }
    const std::vector<Poly>& kappa_images() const noexcept { return kappa_; }
    bool trivial_involution() const noexcept { return trivial_involution_; }
    int truncation_degree() const noexcept { return integral_->truncation_degree(); }

    /// Rank of H^degree(X;Z) in the model.
    std::size_t betti(int degree) const { return integral_->rank(degree); }

    Poly one() const { return Poly::one(integral_); }
    Poly integral(std::string_view text) const;
    Poly mod2(std::string_view text) const;
    Poly fixed(std::string_view text) const;

private:
    friend class SpaceModelBuilder;
    SpaceModel() = default;

    std::string name_;
    RingPtr integral_;
    RingPtr mod2_;
    RingPtr fixed_;
    SqActionPtr mod2_sq_;
    SqActionPtr fixed_sq_;
    std::vector<Poly> kappa_;
    bool trivial_involution_ = false;
};

/// Rank over F2 of a list of vectors (each a set of column indices).
std::size_t rank_mod2(std::vector<std::vector<bool>> rows);

/// Multiplicative extension of kappa: a mod 2 class of even degree to the
/// fixed ring, halving degrees. Throws OddDegree on odd components.
Poly kappa_apply(const Poly& x, const SpaceModel& space);

/// Product model X x Y: tensor of the integral, fixed and Sq data, kappa
/// the tensor of the factors' kappa. Generator names must be disjoint.
SpacePtr product_space(const SpaceModel& a, const SpaceModel& b, const std::string& name);

}  // namespace realchern
