#include "realchern/conjugation/space.hpp"

#include <set>

#include "realchern/algebra/error.hpp"
#include "realchern/algebra/parser.hpp"

namespace realchern {

std::size_t rank_mod2(std::vector<std::vector<bool>> rows)
{
    std::size_t rank = 0;
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][c])
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][c]) {
                for (std::size_t k = c; k < cols; ++k)
                    rows[r][k] = rows[r][k] != rows[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

namespace {

/// kappa on a monomial of the free algebra (no relation applied on the source
/// side), evaluated in the fixed ring.
Poly kappa_of_monomial(const Monomial& m, const std::vector<Poly>& images, const RingPtr& fixed)
{
    Poly out = Poly::one(fixed);
    for (std::size_t g = 0; g < m.size() && !out.is_zero(); ++g)
        if (m.exponent(g))
            out *= images[g].pow(m.exponent(g));
    return out;
}

void validate_frame(const std::string& name, const RingPtr& mod2, const RingPtr& fixed,
                    const std::vector<Poly>& images)
{
    const int cap = mod2->truncation_degree();
    for (std::size_t g = 0; g < mod2->size(); ++g) {
        const auto& gen = mod2->generators()[g];
        const Poly& image = images[g];
        if (!image.is_zero() && (!image.is_homogeneous() || image.min_degree() * 2 != gen.degree))
            throw Error(ErrorCode::DegreeMismatch, name + ": kappa(" + gen.name + ") must have degree " +
                                                       std::to_string(gen.degree / 2));
    }
    for (const auto& r : mod2->relations())
        if (!kappa_of_monomial(r, images, fixed).is_zero())
            throw Error(ErrorCode::InvalidModel, name + ": kappa does not kill a relation of the even ring");
    for (int m = 0; 2 * m <= cap; ++m) {
        const auto source = mod2->basis(2 * m);
        const auto target = fixed->basis(m);
        if (source.size() != target.size())
            throw Error(ErrorCode::InvalidModel, name + ": kappa cannot be bijective in degree " +
                                                     std::to_string(2 * m) + " (ranks " +
                                                     std::to_string(source.size()) + " and " +
                                                     std::to_string(target.size()) + ")");
        std::vector<std::vector<bool>> rows;
        for (const auto& mono : source) {
            Poly image = kappa_of_monomial(mono, images, fixed);
            std::vector<bool> row(target.size(), false);
            for (std::size_t t = 0; t < target.size(); ++t)
                row[t] = image.coefficient(target[t]) != 0;
            rows.push_back(std::move(row));
        }
        if (rank_mod2(rows) != target.size())
            throw Error(ErrorCode::InvalidModel, name + ": kappa is not bijective in degree " + std::to_string(2 * m));
    }
}

SpacePtr assemble(std::string name, RingPtr integral, RingPtr fixed, SqActionPtr mod2_sq, SqActionPtr fixed_sq,
                  std::vector<Poly> kappa, bool trivial_involution);

}  // namespace

class SpaceModelBuilder {
public:
    static SpacePtr build(std::string name, RingPtr integral, RingPtr fixed, SqActionPtr mod2_sq, SqActionPtr fixed_sq,
                          std::vector<Poly> kappa, bool trivial_involution)
    {
        auto space = std::shared_ptr<SpaceModel>(new SpaceModel());
        space->name_ = std::move(name);
        space->integral_ = std::move(integral);
        space->mod2_ = mod2_sq->ring();
        space->fixed_ = std::move(fixed);
        space->mod2_sq_ = std::move(mod2_sq);
        space->fixed_sq_ = std::move(fixed_sq);
        space->kappa_ = std::move(kappa);
        space->trivial_involution_ = trivial_involution;
        return space;
    }
};

namespace {

SpacePtr assemble(std::string name, RingPtr integral, RingPtr fixed, SqActionPtr mod2_sq, SqActionPtr fixed_sq,
                  std::vector<Poly> kappa, bool trivial_involution)
{
    if (integral->is_mod2())
        throw Error(ErrorCode::InvalidModel, name + ": the integral ring must have integer coefficients");
    if (!fixed->is_mod2())
        throw Error(ErrorCode::InvalidModel, name + ": the fixed-point ring must have F2 coefficients");
    for (const auto& g : integral->generators())
        if (g.degree % 2 != 0)
            throw Error(ErrorCode::InvalidModel, name + ": integral generator '" + g.name + "' has odd degree");
    if (fixed->truncation_degree() != integral->truncation_degree() / 2)
        throw Error(ErrorCode::InvalidModel, name + ": fixed ring cap must be half the integral cap");
    validate_frame(name, mod2_sq->ring(), fixed, kappa);
    return SpaceModelBuilder::build(std::move(name), std::move(integral), std::move(fixed), std::move(mod2_sq),
                                    std::move(fixed_sq), std::move(kappa), trivial_involution);
}

}  // namespace

SpacePtr SpaceModel::create(SpaceDefinition def)
{
    if (!def.integral_ring || !def.fixed_ring)
        throw Error(ErrorCode::InvalidModel, def.name + ": missing ring");
    RingPtr mod2 = def.integral_ring->companion(Coefficients::Mod2);
    for (const auto& [key, value] : def.kappa)
        if (!mod2->index_of(key))
            throw Error(ErrorCode::UnknownGenerator, def.name + ": kappa for unknown generator '" + key + "'");
    std::vector<Poly> images;
    for (const auto& g : mod2->generators()) {
        auto it = def.kappa.find(g.name);
        if (it == def.kappa.end())
            throw Error(ErrorCode::MissingImage, def.name + ": no kappa image for '" + g.name + "'");
        if (!same_ring(it->second.ring(), def.fixed_ring))
            throw Error(ErrorCode::RingMismatch, def.name + ": kappa image of '" + g.name + "' outside fixed ring");
        images.push_back(it->second);
    }
    auto mod2_sq = resolve_sq_action(mod2, def.mod2_squares, true);
    auto fixed_sq = resolve_sq_action(def.fixed_ring, def.fixed_squares, false);
    return assemble(def.name, def.integral_ring, def.fixed_ring, std::move(mod2_sq), std::move(fixed_sq),
                    std::move(images), def.trivial_involution);
}

Poly SpaceModel::integral(std::string_view text) const
{
    return parse_poly(text, integral_);
}

Poly SpaceModel::mod2(std::string_view text) const
{
    return parse_poly(text, mod2_);
}

Poly SpaceModel::fixed(std::string_view text) const
{
    return parse_poly(text, fixed_);
}

Poly kappa_apply(const Poly& x, const SpaceModel& space)
{
    if (!same_ring(x.ring(), space.mod2_ring()))
        throw Error(ErrorCode::RingMismatch, "kappa takes a mod 2 class of " + space.name());
    for (const auto& [m, c] : x.terms())
        if (m.degree() % 2 != 0)
            throw Error(ErrorCode::OddDegree, "kappa of a class with an odd-degree component");
    Poly out(space.fixed_ring());
    for (const auto& [m, c] : x.terms())
        out += kappa_of_monomial(m, space.kappa_images(), space.fixed_ring());
    return out;
}

namespace {

std::vector<Generator> renamed(const std::vector<Generator>& gens, const std::string& suffix)
{
    std::vector<Generator> out = gens;
    for (auto& g : out)
        g.name += suffix;
    return out;
}

bool clash(const RingPresentation& a, const RingPresentation& b)
{
    for (const auto& g : a.generators())
        if (b.index_of(g.name))
            return true;
    return false;
}

/// Images of a factor's generators in the product ring (offset embedding).
std::vector<Poly> embedding(const RingPresentation& factor, const RingPtr& product, std::size_t offset)
{
    std::vector<Poly> out;
    for (std::size_t g = 0; g < factor.size(); ++g)
        out.push_back(Poly::generator(product, offset + g));
    return out;
}

RingPtr tensor_renamed(const RingPresentation& a, const RingPresentation& b, bool rename)
{
    if (!rename)
        return tensor(a, b);
    auto ra = RingPresentation::create(a.coefficients(), renamed(a.generators(), "_1"), a.truncation_degree(),
                                       a.relations());
    auto rb = RingPresentation::create(b.coefficients(), renamed(b.generators(), "_2"), b.truncation_degree(),
                                       b.relations());
    return tensor(*ra, *rb);
}

std::vector<std::vector<Poly>> carried_rules(const SqAction& a, const SqAction& b, const RingPtr& product)
{
    const auto& ra = *a.ring();
    const auto& rb = *b.ring();
    auto ea = embedding(ra, product, 0);
    auto eb = embedding(rb, product, ra.size());
    std::vector<std::vector<Poly>> rules;
    for (std::size_t g = 0; g < ra.size(); ++g) {
        std::vector<Poly> list;
        for (int i = 0; i <= ra.generators()[g].degree; ++i)
            list.push_back(apply_ring_map(a.generator_rule(g, i), product, ea));
        rules.push_back(std::move(list));
    }
    for (std::size_t g = 0; g < rb.size(); ++g) {
        std::vector<Poly> list;
        for (int i = 0; i <= rb.generators()[g].degree; ++i)
            list.push_back(apply_ring_map(b.generator_rule(g, i), product, eb));
        rules.push_back(std::move(list));
    }
    return rules;
}

}  // namespace

SpacePtr product_space(const SpaceModel& a, const SpaceModel& b, const std::string& name)
{
    const bool rename = clash(*a.integral_ring(), *b.integral_ring()) || clash(*a.fixed_ring(), *b.fixed_ring());
    RingPtr integral = tensor_renamed(*a.integral_ring(), *b.integral_ring(), rename);
    RingPtr mod2 = integral->companion(Coefficients::Mod2);
    RingPtr fixed = tensor_renamed(*a.fixed_ring(), *b.fixed_ring(), rename);
    // the fixed cap must stay half the integral cap
    if (fixed->truncation_degree() != integral->truncation_degree() / 2)
        fixed = fixed->with_truncation(integral->truncation_degree() / 2);

    auto mod2_sq = SqAction::create(mod2, carried_rules(a.mod2_squares(), b.mod2_squares(), mod2));
    auto fixed_sq = SqAction::create(fixed, carried_rules(a.fixed_squares(), b.fixed_squares(), fixed));

    auto fa = embedding(*a.fixed_ring(), fixed, 0);
    auto fb = embedding(*b.fixed_ring(), fixed, a.fixed_ring()->size());
    std::vector<Poly> kappa;
    for (const auto& image : a.kappa_images())
        kappa.push_back(apply_ring_map(image, fixed, fa));
    for (const auto& image : b.kappa_images())
        kappa.push_back(apply_ring_map(image, fixed, fb));
    return assemble(name, integral, fixed, std::move(mod2_sq), std::move(fixed_sq), std::move(kappa),
                    a.trivial_involution() && b.trivial_involution());
}

}  // namespace realchern
