#include "realchern/algebra/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "realchern/algebra/error.hpp"

namespace realchern {

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::RingMismatch: return "ring-mismatch";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::InvalidPresentation: return "invalid-presentation";
    case ErrorCode::DegreeMismatch: return "degree-mismatch";
    case ErrorCode::MissingImage: return "missing-image";
    case ErrorCode::SyntaxError: return "syntax-error";
    case ErrorCode::UnknownGenerator: return "unknown-generator";
    case ErrorCode::DegreeOverflow: return "degree-overflow";
    case ErrorCode::UnknownName: return "unknown-name";
    case ErrorCode::DuplicateName: return "duplicate-name";
    case ErrorCode::InvalidModel: return "invalid-model";
    case ErrorCode::NotUnital: return "not-unital";
    case ErrorCode::OddDegree: return "odd-degree";
    case ErrorCode::IncompatiblePair: return "incompatible-pair";
    case ErrorCode::InternalMismatch: return "internal-mismatch";
    case ErrorCode::OracleFailure: return "oracle-failure";
    case ErrorCode::SpaceMismatch: return "space-mismatch";
    case ErrorCode::NotTrivialInvolution: return "not-trivial-involution";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::MissingSqRule: return "missing-sq-rule";
    case ErrorCode::MissingHopf: return "missing-hopf";
    }
    return "unknown";
}

bool is_identifier(std::string_view name)
{
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front())))
        return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > other.exponents_[i])
            return false;
    return true;
}

RingPtr RingPresentation::create(Coefficients coefficients, std::vector<Generator> generators, int truncation_degree,
                                 std::vector<Monomial> relations)
{
    if (truncation_degree < 0)
        throw Error(ErrorCode::InvalidPresentation, "truncation degree must be nonnegative");
    std::set<std::string> seen;
    for (const auto& g : generators) {
        if (!is_identifier(g.name))
            throw Error(ErrorCode::InvalidPresentation, "invalid generator name '" + g.name + "'");
        if (g.degree < 1)
            throw Error(ErrorCode::InvalidPresentation, "generator '" + g.name + "' must have degree >= 1");
        if (!seen.insert(g.name).second)
            throw Error(ErrorCode::InvalidPresentation, "duplicate generator '" + g.name + "'");
    }

    auto ring = std::shared_ptr<RingPresentation>(new RingPresentation());
    ring->coefficients_ = coefficients;
    ring->generators_ = std::move(generators);
    ring->truncation_degree_ = truncation_degree;

    std::vector<Monomial> checked;
    for (const auto& r : relations) {
        if (r.size() != ring->generators_.size())
            throw Error(ErrorCode::InvalidPresentation, "relation has wrong number of exponents");
        Monomial m = ring->make_monomial(r.exponents());
        if (m.is_one())
            throw Error(ErrorCode::InvalidPresentation, "the unit cannot be a relation");
        if (m.degree() > truncation_degree)
            throw Error(ErrorCode::InvalidPresentation,
                        "relation of degree " + std::to_string(m.degree()) + " exceeds the truncation degree " +
                            std::to_string(truncation_degree));
        checked.push_back(std::move(m));
    }
    std::sort(checked.begin(), checked.end());
    checked.erase(std::unique(checked.begin(), checked.end()), checked.end());
    // keep only minimal relations
    for (const auto& m : checked) {
        bool redundant = std::any_of(ring->relations_.begin(), ring->relations_.end(),
                                     [&](const Monomial& r) { return r.divides(m); });
        if (!redundant)
            ring->relations_.push_back(m);
    }
    return ring;
}

std::optional<std::size_t> RingPresentation::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return i;
    return std::nullopt;
}

Monomial RingPresentation::make_monomial(std::vector<std::uint16_t> exponents) const
{
    int degree = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        degree += static_cast<int>(exponents[i]) * generators_[i].degree;
    return Monomial(std::move(exponents), degree);
}

Monomial RingPresentation::generator_monomial(std::size_t index, std::uint16_t power) const
{
    std::vector<std::uint16_t> e(generators_.size(), 0);
    e[index] = power;
    return Monomial(std::move(e), generators_[index].degree * power);
}

Monomial RingPresentation::multiply(const Monomial& a, const Monomial& b) const
{
    std::vector<std::uint16_t> e(a.exponents());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = static_cast<std::uint16_t>(e[i] + b.exponent(i));
    return Monomial(std::move(e), a.degree() + b.degree());
}

bool RingPresentation::kills(const Monomial& m) const
{
    if (m.degree() > truncation_degree_)
        return true;
    return std::any_of(relations_.begin(), relations_.end(), [&](const Monomial& r) { return r.divides(m); });
}

std::vector<Monomial> RingPresentation::basis(int degree) const
{
    std::vector<Monomial> out;
    if (degree < 0 || degree > truncation_degree_)
        return out;
    std::vector<std::uint16_t> e(generators_.size(), 0);
    // depth-first over exponent vectors with exact degree
    auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == generators_.size()) {
            if (remaining == 0) {
                Monomial m(e, degree);
                if (!kills(m))
                    out.push_back(std::move(m));
            }
            return;
        }
        const int d = generators_[i].degree;
        for (int k = remaining / d; k >= 0; --k) {
            e[i] = static_cast<std::uint16_t>(k);
            self(self, i + 1, remaining - k * d);
        }
        e[i] = 0;
    };
    recurse(recurse, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

RingPtr RingPresentation::companion(Coefficients coefficients) const
{
    return create(coefficients, generators_, truncation_degree_, relations_);
}

RingPtr RingPresentation::with_truncation(int truncation_degree) const
{
    std::vector<Monomial> kept;
    for (const auto& r : relations_)
        if (r.degree() <= truncation_degree)
            kept.push_back(r);
    return create(coefficients_, generators_, truncation_degree, kept);
}

bool RingPresentation::operator==(const RingPresentation& other) const
{
    return coefficients_ == other.coefficients_ && generators_ == other.generators_ &&
           truncation_degree_ == other.truncation_degree_ && relations_ == other.relations_;
}

std::string RingPresentation::describe() const
{
    std::ostringstream os;
    os << (is_mod2() ? "F2[" : "Z[");
    for (std::size_t i = 0; i < generators_.size(); ++i)
        os << (i ? "," : "") << generators_[i].name << ":" << generators_[i].degree;
    os << "]";
    if (!relations_.empty()) {
        os << "/(";
        for (std::size_t r = 0; r < relations_.size(); ++r) {
            if (r)
                os << ",";
            bool first = true;
            for (std::size_t i = 0; i < generators_.size(); ++i) {
                if (relations_[r].exponent(i) == 0)
                    continue;
                os << (first ? "" : "*") << generators_[i].name;
                if (relations_[r].exponent(i) > 1)
                    os << "^" << relations_[r].exponent(i);
                first = false;
            }
        }
        os << ")";
    }
    os << " deg<=" << truncation_degree_;
    return os.str();
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

namespace {

/// Minimal monomials of degree above the ring's cap, i.e. the extra
/// relations that keep a factor truncated inside a product with a larger
/// cap. Only degrees up to `limit` are listed.
std::vector<Monomial> cap_relations(const RingPresentation& r, int limit)
{
    std::vector<Monomial> out;
    int top_generator = 0;
    for (const auto& g : r.generators())
        top_generator = std::max(top_generator, g.degree);
    const int cap = r.truncation_degree();
    const int upper = std::min(limit, cap + top_generator);
    if (upper <= cap)
        return out;
    auto wide = RingPresentation::create(r.coefficients(), r.generators(), upper, r.relations());
    for (int d = cap + 1; d <= upper; ++d)
        for (const auto& m : wide->basis(d)) {
            bool minimal = true;
            for (std::size_t g = 0; g < m.size() && minimal; ++g)
                minimal = m.exponent(g) == 0 || d - r.generators()[g].degree <= cap;
            if (minimal)
                out.push_back(m);
        }
    return out;
}

}  // namespace

RingPtr tensor(const RingPresentation& a, const RingPresentation& b)
{
    if (a.coefficients() != b.coefficients())
        throw Error(ErrorCode::RingMismatch, "tensor of rings over different coefficients");
    std::vector<Generator> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    std::vector<Monomial> rels;
    const std::size_t n = gens.size();
    const int cap = a.truncation_degree() + b.truncation_degree();
    std::vector<Monomial> a_rels = a.relations(), b_rels = b.relations();
    for (auto& m : cap_relations(a, cap))
        a_rels.push_back(std::move(m));
    for (auto& m : cap_relations(b, cap))
        b_rels.push_back(std::move(m));
    for (const auto& r : a_rels) {
        std::vector<std::uint16_t> e(r.exponents());
        e.resize(n, 0);
        rels.emplace_back(std::move(e), r.degree());
    }
    for (const auto& r : b_rels) {
        std::vector<std::uint16_t> e(a.size(), 0);
        e.insert(e.end(), r.exponents().begin(), r.exponents().end());
        rels.emplace_back(std::move(e), r.degree());
    }
    return RingPresentation::create(a.coefficients(), std::move(gens), cap, std::move(rels));
}

}  // namespace realchern
