#pragma once

#include <map>
#include <string>

#include "realchern/algebra/poly.hpp"

namespace realchern {

/// Element of R[u] for an F2 ring R, u a formal variable of degree 1.
/// Stored as u-exponent -> coefficient in R; total degree is capped.
class UPoly {
public:
    UPoly(RingPtr coefficient_ring, int total_cap);

    static UPoly from_coefficient(const Poly& p, int u_power, int total_cap);

    const RingPtr& coefficient_ring() const noexcept { return ring_; }
    int total_cap() const noexcept { return cap_; }
    const std::map<int, Poly>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of u^k (zero if absent).
    Poly coefficient(int k) const;
    /// Highest u-power with a nonzero coefficient; -1 for zero.
    int u_degree() const;

    void add(const Poly& p, int u_power);

    UPoly& operator+=(const UPoly& other);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);

    bool operator==(const UPoly& other) const;

    /// Evaluate at u = 0.
    Poly at_zero() const { return coefficient(0); }

    /// "w2*u^2 + (w1*w2 + w3)*u + w2^2": descending u-powers. The formal
    /// variable prints as `u` unless R has a generator of that name.
    std::string to_string() const;
    std::string variable_name() const;

private:
    RingPtr ring_;
    int cap_;
    std::map<int, Poly> coeffs_;
};

}  // namespace realchern
