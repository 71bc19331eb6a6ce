#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "realchern/algebra/upoly.hpp"
#include "realchern/conjugation/space.hpp"

namespace realchern {

/// Parity of the coefficient module Z(eps).
struct Twist {
    int parity = 0;

    Twist() = default;
    explicit Twist(int p) : parity(((p % 2) + 2) % 2) {}

    friend Twist operator+(Twist a, Twist b) { return Twist(a.parity + b.parity); }
    bool operator==(const Twist&) const = default;
};

/// Element of the twisted equivariant algebra in Leray-Hirsch coordinates
/// Z[a]/(2a) (x) H*(X;Z): a-exponent k -> class. k = 0 is integral; k >= 1
/// is a mod 2 class since 2a = 0. A degree-2m piece of component k sits in
/// bidegree (2m + 2k, m mod 2).
class EquivClass {
public:
    explicit EquivClass(SpacePtr space);

    const SpacePtr& space() const noexcept { return space_; }
    const std::map<int, Poly>& components() const noexcept { return components_; }
    Poly component(int k) const;
    bool is_zero() const noexcept { return components_.empty(); }

    /// Adds `value` into component k (integral for k = 0, mod 2 otherwise;
    /// an integral value for k >= 1 is reduced). Parts above the cap drop.
    void add(int k, const Poly& value);

    EquivClass& operator+=(const EquivClass& other);
    friend EquivClass operator+(EquivClass a, const EquivClass& b) { return a += b; }
    EquivClass scaled(const Integer& c) const;

    bool operator==(const EquivClass& other) const;

    /// Every (total degree, twist) carrying a nonzero piece.
    std::set<std::pair<int, int>> bidegrees() const;
    bool is_homogeneous(int degree, Twist twist) const;

    /// "{k=0: h; k=1: h}" in increasing k; "0" for zero.
    std::string to_string() const;

private:
    SpacePtr space_;
    std::map<int, Poly> components_;
};

/// a^k (x) 1.
EquivClass a_power(const SpacePtr& space, int k);

EquivClass equiv_mul(const EquivClass& a, const EquivClass& b);
inline EquivClass operator*(const EquivClass& a, const EquivClass& b) { return equiv_mul(a, b); }

/// Restriction to the fiber: the a^0 component.
Poly forget(const EquivClass& z);

/// Mod 2 reduction into H*(X;F2)[u], a -> u^2.
UPoly reduce_equiv_mod2(const EquivClass& z);

/// The unique z with forget(z) = x and reduce_equiv_mod2(z) = y. Throws
/// IncompatiblePair when y at u = 0 is not red(x), and OddDegree when y has
/// odd powers of u.
EquivClass integral_lift(const Poly& x, const UPoly& y, const SpacePtr& space);

}  // namespace realchern
