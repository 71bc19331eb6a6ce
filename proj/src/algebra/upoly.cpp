#include "realchern/algebra/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "realchern/algebra/error.hpp"

namespace realchern {

UPoly::UPoly(RingPtr coefficient_ring, int total_cap) : ring_(std::move(coefficient_ring)), cap_(total_cap)
{
    if (!ring_ || !ring_->is_mod2())
        throw Error(ErrorCode::RingMismatch, "u-polynomials need an F2 coefficient ring");
}

UPoly UPoly::from_coefficient(const Poly& p, int u_power, int total_cap)
{
    UPoly out(p.ring(), total_cap);
    out.add(p, u_power);
    return out;
}

Poly UPoly::coefficient(int k) const
{
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Poly(ring_) : it->second;
}

int UPoly::u_degree() const
{
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

void UPoly::add(const Poly& p, int u_power)
{
    if (!same_ring(p.ring(), ring_))
        throw Error(ErrorCode::RingMismatch, "u-polynomial coefficient from another ring");
    if (u_power < 0)
        throw Error(ErrorCode::OutOfRange, "negative power of u");
    Poly trimmed = truncate(p, cap_ - u_power);
    if (trimmed.is_zero())
        return;
    auto [it, inserted] = coeffs_.try_emplace(u_power, trimmed);
    if (!inserted) {
        it->second += trimmed;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

UPoly& UPoly::operator+=(const UPoly& other)
{
    if (!same_ring(ring_, other.ring_))
        throw Error(ErrorCode::RingMismatch, "u-polynomials over different rings");
    for (const auto& [k, p] : other.coeffs_)
        add(p, k);
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (!same_ring(a.ring_, b.ring_))
        throw Error(ErrorCode::RingMismatch, "u-polynomials over different rings");
    UPoly out(a.ring_, std::min(a.cap_, b.cap_));
    for (const auto& [i, p] : a.coeffs_)
        for (const auto& [j, q] : b.coeffs_)
            if (i + j <= out.cap_)
                out.add(p * q, i + j);
    return out;
}

bool UPoly::operator==(const UPoly& other) const
{
    return same_ring(ring_, other.ring_) && coeffs_ == other.coeffs_;
}

std::string UPoly::variable_name() const
{
    return ring_->index_of("u") ? "U" : "u";
}

std::string UPoly::to_string() const
{
    if (coeffs_.empty())
        return "0";
    const std::string u = variable_name();
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [k, p] = *it;
        if (!first)
            os << " + ";
        first = false;
        std::string power = k == 0 ? "" : (k == 1 ? u : u + "^" + std::to_string(k));
        std::string c = p.to_string();
        if (k == 0)
            os << c;
        else if (c == "1")
            os << power;
        else if (p.terms().size() == 1)
            os << c << "*" << power;
        else
            os << "(" << c << ")*" << power;
    }
    return os.str();
}

}  // namespace realchern
