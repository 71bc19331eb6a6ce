#include "realchern/algebra/poly.hpp"

#include <sstream>

#include "realchern/algebra/error.hpp"

namespace realchern {

Poly::Poly(RingPtr ring) : ring_(std::move(ring))
{
    if (!ring_)
        throw Error(ErrorCode::InvalidPresentation, "polynomial without a ring");
}

Poly Poly::constant(RingPtr ring, const Integer& c)
{
    Poly p(std::move(ring));
    p.add_term(Monomial::one(p.ring_->size()), c);
    return p;
}

Poly Poly::generator(RingPtr ring, std::string_view name)
{
    auto index = ring->index_of(name);
    if (!index)
        throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + std::string(name) + "'");
    return generator(std::move(ring), *index);
}

Poly Poly::generator(RingPtr ring, std::size_t index)
{
    if (index >= ring->size())
        throw Error(ErrorCode::OutOfRange, "generator index out of range");
    Poly p(ring);
    p.add_term(ring->generator_monomial(index), 1);
    return p;
}

Poly Poly::term(RingPtr ring, const Monomial& m, const Integer& c)
{
    Poly p(std::move(ring));
    p.add_term(m, c);
    return p;
}

Integer Poly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer Poly::constant_term() const
{
    return coefficient(Monomial::one(ring_->size()));
}

int Poly::min_degree() const
{
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int Poly::max_degree() const
{
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

bool Poly::is_homogeneous() const
{
    return min_degree() == max_degree();
}

void Poly::add_term(const Monomial& m, const Integer& c)
{
    if (m.size() != ring_->size())
        throw Error(ErrorCode::RingMismatch, "monomial does not belong to this ring");
    if (c == 0 || ring_->kills(m))
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted)
        it->second += c;
    if (ring_->is_mod2())
        it->second = (it->second % 2 != 0) ? 1 : 0;
    if (it->second == 0)
        terms_.erase(it);
}

void Poly::require_same_ring(const Poly& other, const char* op) const
{
    if (!same_ring(ring_, other.ring_))
        throw Error(ErrorCode::RingMismatch, std::string("ring mismatch in ") + op + ": " + ring_->describe() +
                                                 " vs " + other.ring_->describe());
}

Poly& Poly::operator+=(const Poly& other)
{
    require_same_ring(other, "addition");
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    require_same_ring(other, "subtraction");
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const
{
    return scaled(-1);
}

Poly Poly::scaled(const Integer& c) const
{
    Poly out(ring_);
    for (const auto& [m, k] : terms_)
        out.add_term(m, k * c);
    return out;
}

Poly multiply_tracking_overflow(const Poly& a, const Poly& b, bool& overflow)
{
    if (!same_ring(a.ring(), b.ring()))
        throw Error(ErrorCode::RingMismatch,
                    "ring mismatch in multiplication: " + a.ring()->describe() + " vs " + b.ring()->describe());
    const auto& ring = *a.ring();
    const int cap = ring.truncation_degree();
    Poly out(a.ring());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            // terms are sorted by degree, so the rest of b only gets bigger
            if (ma.degree() + mb.degree() > cap) {
                overflow = true;
                break;
            }
            out.add_term(ring.multiply(ma, mb), ca * cb);
        }
    }
    return out;
}

Poly operator*(const Poly& a, const Poly& b)
{
    bool overflow = false;
    return multiply_tracking_overflow(a, b, overflow);
}

Poly& Poly::operator*=(const Poly& other)
{
    *this = *this * other;
    return *this;
}

Poly Poly::pow(unsigned exponent) const
{
    Poly result = one(ring_);
    Poly base = *this;
    while (exponent) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent)
            base *= base;
    }
    return result;
}

bool Poly::operator==(const Poly& other) const
{
    return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Integer magnitude = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (magnitude != 1 || m.is_one()) {
            os << magnitude.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m.exponent(i) == 0)
                continue;
            if (wrote)
                os << "*";
            os << ring_->generators()[i].name;
            if (m.exponent(i) > 1)
                os << "^" << m.exponent(i);
            wrote = true;
        }
    }
    return os.str();
}

Poly poly_add(const Poly& p, const Poly& q)
{
    return p + q;
}

Poly poly_mul(const Poly& p, const Poly& q)
{
    return p * q;
}

Poly homogeneous_part(const Poly& p, int degree)
{
    if (degree < 0 || degree > p.ring()->truncation_degree())
        throw Error(ErrorCode::OutOfRange, "degree " + std::to_string(degree) + " outside [0, " +
                                               std::to_string(p.ring()->truncation_degree()) + "]");
    Poly out(p.ring());
    for (const auto& [m, c] : p.terms())
        if (m.degree() == degree)
            out.add_term(m, c);
    return out;
}

Poly truncate(const Poly& p, int cap)
{
    Poly out(p.ring());
    for (const auto& [m, c] : p.terms())
        if (m.degree() <= cap)
            out.add_term(m, c);
    return out;
}

Poly reduce_mod2(const Poly& p)
{
    return reduce_mod2(p, p.ring()->companion(Coefficients::Mod2));
}

Poly reduce_mod2(const Poly& p, const RingPtr& target)
{
    if (!target->is_mod2())
        throw Error(ErrorCode::RingMismatch, "mod 2 reduction needs an F2 target ring");
    if (target->generators() != p.ring()->generators())
        throw Error(ErrorCode::RingMismatch, "mod 2 companion must have the same generators");
    Poly out(target);
    for (const auto& [m, c] : p.terms())
        out.add_term(m, c);
    return out;
}

Poly apply_ring_map(const Poly& p, const RingPtr& target, const std::vector<Poly>& images)
{
    const auto& source = *p.ring();
    if (images.size() != source.size())
        throw Error(ErrorCode::MissingImage, "ring map needs one image per generator");
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!same_ring(images[i].ring(), target))
            throw Error(ErrorCode::RingMismatch, "image of '" + source.generators()[i].name + "' is in another ring");
        for (const auto& [m, c] : images[i].terms())
            if (m.degree() != source.generators()[i].degree)
                throw Error(ErrorCode::DegreeMismatch, "image of '" + source.generators()[i].name +
                                                           "' has degree " + std::to_string(m.degree()) +
                                                           ", expected " +
                                                           std::to_string(source.generators()[i].degree));
    }
    // cache generator powers
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](std::size_t i, unsigned e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(Poly::one(target));
        while (cache.size() <= e)
            cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    Poly out(target);
    for (const auto& [m, c] : p.terms()) {
        Poly t = Poly::constant(target, c);
        for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i)
            if (m.exponent(i))
                t *= power(i, m.exponent(i));
        out += t;
    }
    return out;
}

Poly apply_ring_map(const Poly& p, const RingPtr& target, const std::map<std::string, Poly>& images)
{
    std::vector<Poly> ordered;
    ordered.reserve(p.ring()->size());
    for (const auto& g : p.ring()->generators()) {
        auto it = images.find(g.name);
        if (it == images.end())
            throw Error(ErrorCode::MissingImage, "no image for generator '" + g.name + "'");
        ordered.push_back(it->second);
    }
    return apply_ring_map(p, target, ordered);
}

}  // namespace realchern
