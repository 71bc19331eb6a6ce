#include "realchern/steenrod/sq_action.hpp"

#include <charconv>

#include "realchern/algebra/error.hpp"

namespace realchern {

bool binomial_mod2(long n, long k)
{
    if (k < 0)
        return false;
    if (n < 0)
        return binomial_mod2(k - n - 1, k);
    if (k > n)
        return false;
    return (n & k) == k;
}

SqActionPtr SqAction::create(RingPtr ring, std::vector<std::vector<Poly>> rules)
{
    if (!ring->is_mod2())
        throw Error(ErrorCode::RingMismatch, "Steenrod squares need an F2 ring");
    if (rules.size() != ring->size())
        throw Error(ErrorCode::MissingSqRule, "one Sq rule list per generator required");
    for (std::size_t g = 0; g < ring->size(); ++g) {
        const auto& gen = ring->generators()[g];
        auto& list = rules[g];
        if (list.size() != static_cast<std::size_t>(gen.degree) + 1)
            throw Error(ErrorCode::MissingSqRule, "generator '" + gen.name + "' needs Sq^0..Sq^" +
                                                      std::to_string(gen.degree));
        const Poly x = Poly::generator(ring, g);
        for (int i = 0; i <= gen.degree; ++i) {
            const Poly& value = list[i];
            if (!same_ring(value.ring(), ring))
                throw Error(ErrorCode::RingMismatch, "Sq rule for '" + gen.name + "' in another ring");
            if (!value.is_zero() && (!value.is_homogeneous() || value.min_degree() != gen.degree + i))
                throw Error(ErrorCode::DegreeMismatch, "Sq^" + std::to_string(i) + "(" + gen.name +
                                                           ") must be homogeneous of degree " +
                                                           std::to_string(gen.degree + i));
        }
        if (!(list.front() == x))
            throw Error(ErrorCode::InvalidPresentation, "Sq^0(" + gen.name + ") must be " + gen.name);
        if (!(list.back() == x * x))
            throw Error(ErrorCode::InvalidPresentation,
                        "Sq^" + std::to_string(gen.degree) + "(" + gen.name + ") must be " + gen.name + "^2");
    }
    auto action = std::shared_ptr<SqAction>(new SqAction(ring, std::move(rules)));
    for (std::size_t g = 0; g < ring->size(); ++g) {
        Poly total(ring);
        for (const auto& v : action->rules_[g])
            total += v;
        action->generator_totals_.push_back(std::move(total));
    }
    return action;
}

Poly SqAction::total_of_monomial(const Monomial& m) const
{
    {
        std::lock_guard lock(memo_mutex_);
        auto it = memo_.find(m);
        if (it != memo_.end())
            return it->second;
    }
    // Cartan: Sq(xy) = Sq(x) Sq(y); peel off one generator factor at a time.
    Poly result = Poly::one(ring_);
    if (!m.is_one()) {
        std::size_t g = 0;
        while (m.exponent(g) == 0)
            ++g;
        std::vector<std::uint16_t> rest(m.exponents());
        --rest[g];
        Monomial smaller = ring_->make_monomial(std::move(rest));
        result = generator_totals_[g] * total_of_monomial(smaller);
    }
    std::lock_guard lock(memo_mutex_);
    memo_.emplace(m, result);
    return result;
}

Poly SqAction::total(const Poly& p) const
{
    if (!same_ring(p.ring(), ring_))
        throw Error(ErrorCode::RingMismatch, "Sq applied to a class of another ring");
    Poly out(ring_);
    for (const auto& [m, c] : p.terms())
        out += total_of_monomial(m);
    return out;
}

Poly SqAction::sq(int i, const Poly& p) const
{
    if (!same_ring(p.ring(), ring_))
        throw Error(ErrorCode::RingMismatch, "Sq applied to a class of another ring");
    if (i < 0)
        throw Error(ErrorCode::OutOfRange, "negative Steenrod square");
    Poly out(ring_);
    if (i == 0)
        return p;
    for (const auto& [m, c] : p.terms()) {
        const int target = m.degree() + i;
        if (i > m.degree() || target > ring_->truncation_degree())
            continue;
        const Poly total = total_of_monomial(m);
        for (const auto& [tm, tc] : total.terms())
            if (tm.degree() == target)
                out.add_term(tm, tc);
    }
    return out;
}

Poly sq(int i, const Poly& p, const SqAction& action)
{
    return action.sq(i, p);
}

Poly total_sq(const Poly& p, const SqAction& action)
{
    return action.total(p);
}

Poly invert_total_sq(const Poly& w, const SqAction& action)
{
    const auto& ring = action.ring();
    if (!same_ring(w.ring(), ring))
        throw Error(ErrorCode::RingMismatch, "total class from another ring");
    if (w.constant_term() != 1)
        throw Error(ErrorCode::NotUnital, "total class must have constant term 1");
    // v_n = w_n + sum over k < n of Sq^{n-k}(v_k); only k >= n-k contributes
    std::vector<Poly> v;
    v.push_back(Poly::one(ring));
    Poly result = Poly::one(ring);
    for (int n = 1; n <= ring->truncation_degree(); ++n) {
        Poly vn = homogeneous_part(w, n);
        for (int k = (n + 1) / 2; k < n; ++k)
            vn += action.sq(n - k, v[k]);
        result += vn;
        v.push_back(std::move(vn));
    }
    return result;
}

namespace {

Poly indexed_class(const RingPtr& ring, const std::string& prefix, int index, int unit)
{
    if (index == 0)
        return Poly::one(ring);
    auto g = ring->index_of(prefix + std::to_string(index));
    if (!g || ring->generators()[*g].degree != index * unit)
        return Poly(ring);
    return Poly::generator(ring, *g);
}

/// Parses "<prefix><j>" with j >= 1 and no leading zero.
std::optional<int> indexed_name(const std::string& name, const std::string& prefix)
{
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size();
    if (*first == '0')
        return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < 1)
        return std::nullopt;
    return value;
}

}  // namespace

Poly wu_formula(int i, int j, const RingPtr& ring, const std::string& prefix, int unit)
{
    Poly out(ring);
    if (i < 0 || i > j)
        return out;
    for (int t = 0; t <= i; ++t) {
        if (!binomial_mod2(j - i + t - 1, t))
            continue;
        out += indexed_class(ring, prefix, i - t, unit) * indexed_class(ring, prefix, j + t, unit);
    }
    return out;
}

SqActionPtr wu_rule_for_bo(int n_max, int truncation)
{
    if (n_max < 1)
        throw Error(ErrorCode::OutOfRange, "n_max must be at least 1");
    std::vector<Generator> gens;
    for (int j = 1; j <= n_max; ++j)
        gens.push_back({"w" + std::to_string(j), j});
    auto ring = RingPresentation::create(Coefficients::Mod2, gens, truncation);
    return resolve_sq_action(ring, {}, false);
}

SqActionPtr resolve_sq_action(const RingPtr& ring, const SqDeclarations& declared, bool integral_chern_names)
{
    for (const auto& [key, value] : declared) {
        auto g = ring->index_of(key.first);
        if (!g)
            throw Error(ErrorCode::UnknownGenerator, "Sq rule for unknown generator '" + key.first + "'");
        if (key.second < 0 || key.second > ring->generators()[*g].degree)
            throw Error(ErrorCode::OutOfRange, "Sq^" + std::to_string(key.second) + " on '" + key.first +
                                                   "' is outside 0.." +
                                                   std::to_string(ring->generators()[*g].degree));
    }
    bool all_even = true;
    for (const auto& g : ring->generators())
        all_even = all_even && g.degree % 2 == 0;

    std::vector<std::vector<Poly>> rules;
    for (std::size_t g = 0; g < ring->size(); ++g) {
        const auto& gen = ring->generators()[g];
        const Poly x = Poly::generator(ring, g);
        auto w_index = indexed_name(gen.name, "w");
        auto c_index = indexed_name(gen.name, "c");
        const bool wu_family = w_index && *w_index == gen.degree;
        const bool chern_family = integral_chern_names && c_index && 2 * *c_index == gen.degree;

        std::vector<Poly> list;
        for (int i = 0; i <= gen.degree; ++i) {
            auto it = declared.find({gen.name, i});
            if (it != declared.end()) {
                list.push_back(it->second);
            } else if (i == 0) {
                list.push_back(x);
            } else if (i == gen.degree) {
                list.push_back(x * x);
            } else if (wu_family) {
                list.push_back(wu_formula(i, *w_index, ring, "w", 1));
            } else if (chern_family) {
                list.push_back(i % 2 ? Poly(ring) : wu_formula(i / 2, *c_index, ring, "c", 2));
            } else if (all_even && i % 2 == 1) {
                list.push_back(Poly(ring));
            } else if (ring->rank(gen.degree + i) == 0) {
                list.push_back(Poly(ring));
            } else {
                throw Error(ErrorCode::MissingSqRule, "no rule for Sq^" + std::to_string(i) + "(" + gen.name + ")");
            }
        }
        rules.push_back(std::move(list));
    }
    return SqAction::create(ring, std::move(rules));
}

}  // namespace realchern
