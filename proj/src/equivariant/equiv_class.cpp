#include "realchern/equivariant/equiv_class.hpp"

#include <sstream>

#include "realchern/algebra/error.hpp"

namespace realchern {

EquivClass::EquivClass(SpacePtr space) : space_(std::move(space))
{
    if (!space_)
        throw Error(ErrorCode::InvalidModel, "equivariant class without a space");
}

Poly EquivClass::component(int k) const
{
    auto it = components_.find(k);
    if (it != components_.end())
        return it->second;
    return Poly(k == 0 ? space_->integral_ring() : space_->mod2_ring());
}

void EquivClass::add(int k, const Poly& value)
{
    if (k < 0)
        throw Error(ErrorCode::OutOfRange, "negative power of a");
    const int cap = space_->truncation_degree() - 2 * k;
    if (cap < 0)
        return;
    Poly piece = [&] {
        if (k == 0) {
            if (!same_ring(value.ring(), space_->integral_ring()))
                throw Error(ErrorCode::RingMismatch, "a^0 component must be an integral class of " + space_->name());
            return truncate(value, cap);
        }
        if (same_ring(value.ring(), space_->mod2_ring()))
            return truncate(value, cap);
        if (same_ring(value.ring(), space_->integral_ring()))
            return truncate(reduce_mod2(value, space_->mod2_ring()), cap);
        throw Error(ErrorCode::RingMismatch, "a-power component from another ring");
    }();
    if (piece.is_zero())
        return;
    auto [it, inserted] = components_.try_emplace(k, piece);
    if (!inserted) {
        it->second += piece;
        if (it->second.is_zero())
            components_.erase(it);
    }
}

EquivClass& EquivClass::operator+=(const EquivClass& other)
{
    if (space_ != other.space_ && space_->name() != other.space_->name())
        throw Error(ErrorCode::SpaceMismatch, "classes over different spaces");
    for (const auto& [k, p] : other.components_)
        add(k, p);
    return *this;
}

EquivClass EquivClass::scaled(const Integer& c) const
{
    EquivClass out(space_);
    for (const auto& [k, p] : components_)
        out.add(k, p.scaled(c));
    return out;
}

bool EquivClass::operator==(const EquivClass& other) const
{
    return space_->name() == other.space_->name() && components_ == other.components_;
}

std::set<std::pair<int, int>> EquivClass::bidegrees() const
{
    std::set<std::pair<int, int>> out;
    for (const auto& [k, p] : components_)
        for (const auto& [m, c] : p.terms())
            out.emplace(m.degree() + 2 * k, (m.degree() / 2) % 2);
    return out;
}

bool EquivClass::is_homogeneous(int degree, Twist twist) const
{
    for (const auto& [d, t] : bidegrees())
        if (d != degree || t != twist.parity)
            return false;
    return true;
}

std::string EquivClass::to_string() const
{
    if (components_.empty())
        return "0";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, p] : components_) {
        os << (first ? "" : "; ") << "k=" << k << ": " << p.to_string();
        first = false;
    }
    os << "}";
    return os.str();
}

EquivClass a_power(const SpacePtr& space, int k)
{
    EquivClass z(space);
    if (k == 0)
        z.add(0, Poly::one(space->integral_ring()));
    else
        z.add(k, Poly::one(space->mod2_ring()));
    return z;
}

EquivClass equiv_mul(const EquivClass& a, const EquivClass& b)
{
    if (a.space() != b.space() && a.space()->name() != b.space()->name())
        throw Error(ErrorCode::SpaceMismatch, "product of classes over different spaces");
    const auto& space = a.space();
    EquivClass out(space);
    for (const auto& [j, x] : a.components()) {
        for (const auto& [k, y] : b.components()) {
            if (j + k == 0) {
                out.add(0, x * y);
                continue;
            }
            // 2a = 0: anything carrying a positive a-power is reduced
            const Poly xr = j == 0 ? reduce_mod2(x, space->mod2_ring()) : x;
            const Poly yr = k == 0 ? reduce_mod2(y, space->mod2_ring()) : y;
            out.add(j + k, xr * yr);
        }
    }
    return out;
}

Poly forget(const EquivClass& z)
{
    return z.component(0);
}

UPoly reduce_equiv_mod2(const EquivClass& z)
{
    const auto& space = z.space();
    UPoly out(space->mod2_ring(), space->truncation_degree());
    for (const auto& [k, p] : z.components())
        out.add(k == 0 ? reduce_mod2(p, space->mod2_ring()) : p, 2 * k);
    return out;
}

EquivClass integral_lift(const Poly& x, const UPoly& y, const SpacePtr& space)
{
    if (!same_ring(x.ring(), space->integral_ring()))
        throw Error(ErrorCode::RingMismatch, "integral part must be a class of " + space->name());
    if (!same_ring(y.coefficient_ring(), space->mod2_ring()))
        throw Error(ErrorCode::RingMismatch, "mod 2 part must lie in H*(" + space->name() + ";F2)[u]");
    for (const auto& [power, p] : y.coefficients())
        if (power % 2 != 0)
            throw Error(ErrorCode::OddDegree, "odd power of u is not in the image of the twisted algebra");
    if (!(y.at_zero() == reduce_mod2(x, space->mod2_ring())))
        throw Error(ErrorCode::IncompatiblePair, "mod 2 reduction of the integral part (" +
                                                     reduce_mod2(x, space->mod2_ring()).to_string() +
                                                     ") differs from the u^0 coefficient (" +
                                                     y.at_zero().to_string() + ")");
    EquivClass z(space);
    z.add(0, x);
    for (const auto& [power, p] : y.coefficients())
        if (power > 0)
            z.add(power / 2, p);
    return z;
}

}  // namespace realchern
