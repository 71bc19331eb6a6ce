#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "realchern/algebra/ring.hpp"

namespace realchern {

using Integer = mpz_class;

/// An element of a RingPresentation: a sparse map from surviving monomials
/// to nonzero coefficients. Over F2 every stored coefficient is 1.
class Poly {
public:
    using Terms = std::map<Monomial, Integer>;

    explicit Poly(RingPtr ring);

    static Poly constant(RingPtr ring, const Integer& c);
    static Poly one(RingPtr ring) { return constant(std::move(ring), 1); }
    static Poly generator(RingPtr ring, std::string_view name);
    static Poly generator(RingPtr ring, std::size_t index);
    static Poly term(RingPtr ring, const Monomial& m, const Integer& c = 1);

    const RingPtr& ring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const Monomial& m) const;
    Integer constant_term() const;

    /// Lowest/highest degree carrying a term; -1 for zero.
    int min_degree() const;
    int max_degree() const;
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const Integer& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly operator-() const;
    Poly scaled(const Integer& c) const;
    Poly pow(unsigned exponent) const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    bool operator==(const Poly& other) const;

    /// Canonical text: terms in graded-lex order joined by " + " / " - ",
    /// parseable back by parse_poly.
    std::string to_string() const;

private:
    void require_same_ring(const Poly& other, const char* op) const;

    RingPtr ring_;
    Terms terms_;
};

/// Product that also reports whether any partial product had degree above
/// the cap before truncation.
Poly multiply_tracking_overflow(const Poly& a, const Poly& b, bool& overflow);

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);
Poly homogeneous_part(const Poly& p, int degree);

/// Coefficientwise reduction into an F2 ring with the same generators.
/// Without a target the Mod2 companion of p's ring is used.
Poly reduce_mod2(const Poly& p);
Poly reduce_mod2(const Poly& p, const RingPtr& target);

/// Ring-homomorphic substitution; `images[i]` is the image of generator i
/// and must live in `target` with degree equal to that generator's degree.
Poly apply_ring_map(const Poly& p, const RingPtr& target, const std::vector<Poly>& images);
Poly apply_ring_map(const Poly& p, const RingPtr& target, const std::map<std::string, Poly>& images);

/// Truncate to the given degree (keeps parts of degree <= cap).
Poly truncate(const Poly& p, int cap);

}  // namespace realchern
