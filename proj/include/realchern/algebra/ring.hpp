#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace realchern {

enum class Coefficients { Integer, Mod2 };

struct Generator {
    std::string name;
    int degree = 1;

    bool operator==(const Generator&) const = default;
};

/// Dense exponent vector over the generators of one ring presentation.
/// The cached total degree drives the canonical (graded) order.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<std::uint16_t> exponents, int degree)
        : exponents_(std::move(exponents)), degree_(degree)
    {
    }

    static Monomial one(std::size_t n_generators) { return Monomial(std::vector<std::uint16_t>(n_generators, 0), 0); }

    const std::vector<std::uint16_t>& exponents() const noexcept { return exponents_; }
    std::uint16_t exponent(std::size_t i) const { return exponents_[i]; }
    std::size_t size() const noexcept { return exponents_.size(); }
    int degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    bool divides(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }

    /// Graded lexicographic: lower degree first; within a degree, larger
    /// exponent on an earlier generator first (c1^2 before c2).
    bool operator<(const Monomial& other) const
    {
        if (degree_ != other.degree_)
            return degree_ < other.degree_;
        return exponents_ > other.exponents_;
    }

private:
    std::vector<std::uint16_t> exponents_;
    int degree_ = 0;
};

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

/// Truncated polynomial ring on named generators, quotiented by monomial
/// relations. Everything of degree above the truncation degree is zero.
class RingPresentation {
public:
    static RingPtr create(Coefficients coefficients, std::vector<Generator> generators, int truncation_degree,
                          std::vector<Monomial> relations = {});

    Coefficients coefficients() const noexcept { return coefficients_; }
    bool is_mod2() const noexcept { return coefficients_ == Coefficients::Mod2; }
    const std::vector<Generator>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    int truncation_degree() const noexcept { return truncation_degree_; }
    const std::vector<Monomial>& relations() const noexcept { return relations_; }

    std::optional<std::size_t> index_of(std::string_view name) const;

    Monomial make_monomial(std::vector<std::uint16_t> exponents) const;
    Monomial generator_monomial(std::size_t index, std::uint16_t power = 1) const;
    Monomial multiply(const Monomial& a, const Monomial& b) const;

    /// True if the monomial vanishes in the quotient (above the cap or
    /// divisible by a relation).
    bool kills(const Monomial& m) const;

    /// Surviving monomials of the given degree, in canonical order.
    std::vector<Monomial> basis(int degree) const;
    /// Rank of the degree-`degree` part.
    std::size_t rank(int degree) const { return basis(degree).size(); }

    /// Same generators and relations over the other coefficient domain.
    RingPtr companion(Coefficients coefficients) const;
    /// Same presentation with a different cap; relations above it are dropped.
    RingPtr with_truncation(int truncation_degree) const;

    bool operator==(const RingPresentation& other) const;

    std::string describe() const;

private:
    RingPresentation() = default;

    Coefficients coefficients_ = Coefficients::Integer;
    std::vector<Generator> generators_;
    int truncation_degree_ = 0;
    std::vector<Monomial> relations_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Tensor product presentation: generator union (names must not clash),
/// relation union, caps added. Each factor stays truncated at its own cap
/// through extra monomial relations.
RingPtr tensor(const RingPresentation& a, const RingPresentation& b);

bool is_identifier(std::string_view name);

}  // namespace realchern
