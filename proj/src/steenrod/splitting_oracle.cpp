#include "realchern/steenrod/splitting_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "realchern/algebra/error.hpp"

namespace realchern {
namespace {

/// Exponent multiset sorted in decreasing order, zeros stripped.
using Partition = std::vector<int>;

int weight(const Partition& p)
{
    int s = 0;
    for (int x : p)
        s += x;
    return s;
}

struct GradedLex {
    bool operator()(const Partition& a, const Partition& b) const
    {
        const int wa = weight(a), wb = weight(b);
        if (wa != wb)
            return wa < wb;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Symmetric polynomial over F2 in n variables: set of partitions whose
/// monomial symmetric function has coefficient 1.
using SymPoly = std::set<Partition, GradedLex>;

void toggle(SymPoly& f, const Partition& p)
{
    auto [it, inserted] = f.insert(p);
    if (!inserted)
        f.erase(it);
}

Partition normalize(std::vector<int> v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    return v;
}

class SplittingOracle {
public:
    SplittingOracle(int n_vars, int cap) : n_(n_vars), cap_(cap) {}

    /// f * e_j, truncated at weight cap.
    SymPoly times_elementary(const SymPoly& f, int j) const
    {
        SymPoly out;
        if (j > n_)
            return out;
        std::set<Partition, GradedLex> candidates;
        for (const auto& lambda : f) {
            if (weight(lambda) + j > cap_)
                continue;
            std::vector<int> padded(lambda);
            padded.resize(n_, 0);
            for_each_subset(j, [&](const std::vector<int>& subset) {
                std::vector<int> mu(padded);
                for (int s : subset)
                    ++mu[s];
                candidates.insert(normalize(std::move(mu)));
            });
        }
        for (const auto& mu : candidates) {
            std::vector<int> padded(mu);
            padded.resize(n_, 0);
            bool parity = false;
            for_each_subset(j, [&](const std::vector<int>& subset) {
                std::vector<int> nu(padded);
                for (int s : subset) {
                    if (nu[s] == 0)
                        return;
                    --nu[s];
                }
                if (f.count(normalize(std::move(nu))))
                    parity = !parity;
            });
            if (parity)
                out.insert(mu);
        }
        return out;
    }

    /// Total square with Sq(t) = t + t^2 on each variable, truncated.
    SymPoly total_square(const SymPoly& f) const
    {
        std::set<Partition, GradedLex> candidates;
        for (const auto& lambda : f) {
            std::vector<int> mu(lambda);
            expand_square_choices(lambda, 0, mu, weight(lambda), candidates);
        }
        SymPoly out;
        for (const auto& mu : candidates)
            if (square_coefficient(f, mu))
                out.insert(mu);
        return out;
    }

    /// Expansion of prod_j e_j^{k_j} (k indexed from 1), memoized.
    const SymPoly& elementary_product(std::vector<int> k)
    {
        while (!k.empty() && k.back() == 0)
            k.pop_back();
        auto it = products_.find(k);
        if (it != products_.end())
            return it->second;
        SymPoly value;
        const int last = static_cast<int>(k.size());
        if (last == 0) {
            value.insert(Partition{});
        } else {
            std::vector<int> smaller(k.begin(), k.begin() + last);
            --smaller[last - 1];
            value = times_elementary(elementary_product(smaller), last);
        }
        return products_.emplace(k, std::move(value)).first->second;
    }

    /// Rewrites f in the elementary basis: returns exponent vectors k
    /// (k[j-1] = power of e_j) of the terms with coefficient 1.
    std::vector<std::vector<int>> to_elementary(SymPoly f)
    {
        std::vector<std::vector<int>> out;
        while (!f.empty()) {
            const Partition lead = *f.rbegin();
            if (static_cast<int>(lead.size()) > n_)
                throw Error(ErrorCode::OracleFailure, "symmetric rewrite failed: too many parts");
            std::vector<int> k(lead.size(), 0);
            for (std::size_t j = 0; j < lead.size(); ++j)
                k[j] = lead[j] - (j + 1 < lead.size() ? lead[j + 1] : 0);
            const SymPoly& expansion = elementary_product(k);
            if (expansion.empty() || *expansion.rbegin() != lead)
                throw Error(ErrorCode::OracleFailure, "symmetric rewrite failed: leading term mismatch");
            for (const auto& p : expansion)
                toggle(f, p);
            out.push_back(std::move(k));
        }
        return out;
    }

private:
    template <class F>
    void for_each_subset(int size, F&& visit) const
    {
        std::vector<int> subset;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(subset.size()) == size) {
                visit(subset);
                return;
            }
            for (int s = start; s <= n_ - (size - static_cast<int>(subset.size())); ++s) {
                subset.push_back(s);
                rec(s + 1);
                subset.pop_back();
            }
        };
        rec(0);
    }

    void expand_square_choices(const Partition& lambda, std::size_t i, std::vector<int>& mu, int w,
                               std::set<Partition, GradedLex>& out) const
    {
        if (w > cap_)
            return;
        if (i == lambda.size()) {
            out.insert(normalize(mu));
            return;
        }
        for (int k = 0; k <= lambda[i]; ++k) {
            if ((lambda[i] & k) != k)
                continue;
            mu[i] = lambda[i] + k;
            expand_square_choices(lambda, i + 1, mu, w + k, out);
        }
        mu[i] = lambda[i];
    }

    /// Coefficient of t^mu in Sq(f): sum over nu with nu <= mu <= 2 nu of
    /// f(nu) * prod binom(nu_i, mu_i - nu_i).
    bool square_coefficient(const SymPoly& f, const Partition& mu) const
    {
        bool parity = false;
        std::vector<int> nu(mu.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == mu.size()) {
                if (f.count(normalize(nu)))
                    parity = !parity;
                return;
            }
            for (int v = (mu[i] + 1) / 2; v <= mu[i]; ++v) {
                const int k = mu[i] - v;
                if ((v & k) != k)
                    continue;
                nu[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
        return parity;
    }

    int n_;
    int cap_;
    std::map<std::vector<int>, SymPoly> products_;
};

struct IndexedRing {
    std::vector<int> index_of_generator;  // j for each generator
    std::map<int, std::size_t> generator_of_index;
};

IndexedRing index_generators(const RingPresentation& ring, int unit)
{
    IndexedRing out;
    for (std::size_t g = 0; g < ring.size(); ++g) {
        const auto& gen = ring.generators()[g];
        if (gen.degree % unit != 0)
            throw Error(ErrorCode::InvalidPresentation,
                        "generator '" + gen.name + "' has degree not divisible by the variable degree");
        const int j = gen.degree / unit;
        if (!out.generator_of_index.emplace(j, g).second)
            throw Error(ErrorCode::InvalidPresentation, "two generators in elementary degree " + std::to_string(j));
        out.index_of_generator.push_back(j);
    }
    return out;
}

}  // namespace

Poly oracle_total_sq(const Poly& p, int n_vars, int unit_degree)
{
    const auto& ring = p.ring();
    if (!ring->is_mod2())
        throw Error(ErrorCode::RingMismatch, "splitting oracle works over F2");
    if (n_vars < 1 || unit_degree < 1 || unit_degree > 2)
        throw Error(ErrorCode::OutOfRange, "oracle needs n_vars >= 1 and variable degree 1 or 2");
    const IndexedRing indexed = index_generators(*ring, unit_degree);
    const int cap = ring->truncation_degree() / unit_degree;
    // elementary expansions are reused across calls; one table per thread
    thread_local std::map<std::pair<int, int>, SplittingOracle> oracles;
    SplittingOracle& oracle = oracles.try_emplace({n_vars, cap}, n_vars, cap).first->second;

    // Translate p to the symmetric-polynomial side.
    SymPoly f;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> k(n_vars, 0);
        bool vanishes = false;
        for (std::size_t g = 0; g < m.size(); ++g) {
            if (m.exponent(g) == 0)
                continue;
            const int j = indexed.index_of_generator[g];
            if (j > n_vars) {
                vanishes = true;
                break;
            }
            k[j - 1] += m.exponent(g);
        }
        if (vanishes)
            continue;
        for (const auto& part : oracle.elementary_product(k))
            toggle(f, part);
    }

    // With degree-2 variables Sq^2 t = t^2 and Sq^1 t = 0, so the same
    // combinatorics apply with all degrees doubled.
    SymPoly squared = oracle.total_square(f);

    Poly out(ring);
    for (const auto& k : oracle.to_elementary(std::move(squared))) {
        std::vector<std::uint16_t> e(ring->size(), 0);
        bool vanishes = false;
        for (std::size_t j = 0; j < k.size(); ++j) {
            if (k[j] == 0)
                continue;
            auto it = indexed.generator_of_index.find(static_cast<int>(j) + 1);
            if (it == indexed.generator_of_index.end()) {
                vanishes = true;
                break;
            }
            e[it->second] = static_cast<std::uint16_t>(e[it->second] + k[j]);
        }
        if (!vanishes)
            out.add_term(ring->make_monomial(std::move(e)), 1);
    }
    return out;
}

Poly oracle_sq(int i, const Poly& p, int n_vars, int unit_degree)
{
    if (i < 0)
        throw Error(ErrorCode::OutOfRange, "negative Steenrod square");
    const auto& ring = p.ring();
    Poly out(ring);
    if (i % unit_degree != 0)
        return out;
    // per homogeneous part: Sq^i lands in degree deg + i
    std::map<int, Poly> parts;
    for (const auto& [m, c] : p.terms())
        parts.try_emplace(m.degree(), ring).first->second.add_term(m, c);
    for (const auto& [degree, part] : parts) {
        const int target = degree + i;
        if (target > ring->truncation_degree())
            continue;
        Poly total = oracle_total_sq(part, n_vars, unit_degree);
        for (const auto& [m, c] : total.terms())
            if (m.degree() == target)
                out.add_term(m, c);
    }
    return out;
}

}  // namespace realchern
