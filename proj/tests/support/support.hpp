#pragma once

// Shared by the unit and acceptance tests: seeded generators for random
// classes and oracles that do not go through the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "realchern/algebra/error.hpp"
#include "realchern/algebra/poly.hpp"
#include "realchern/equivariant/equiv_class.hpp"
#include "realchern/io/workspace.hpp"

namespace rc_test {

using namespace realchern;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }
    template <typename T>
    const T& pick(const std::vector<T>& items) { return items[uniform(0, static_cast<int>(items.size()) - 1)]; }

private:
    std::mt19937_64 rng_;
};

/// The code of the Error thrown by f, or nothing.
inline std::optional<ErrorCode> thrown_code(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

/// The shipped catalogue, loaded once.
inline const Workspace& catalogue()
{
    static const Workspace ws = [] {
        Workspace w;
        w.load_catalogue();
        return w;
    }();
    return ws;
}

/// Random homogeneous mod 2 class of the given degree.
inline Poly random_mod2_homogeneous(Gen& g, const RingPtr& ring, int degree)
{
    Poly p(ring);
    for (const auto& m : ring->basis(degree))
        if (g.coin())
            p.add_term(m, 1);
    return p;
}

inline long binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// <w_lambda, [RP^n]>: w_k = binom(n+1, k) u^k and u^n evaluates to 1.
inline bool rp_sw_number(int n, const std::vector<int>& parts)
{
    long product = 1;
    for (int p : parts)
        product *= binomial(n + 1, p) % 2;
    return product % 2 == 1;
}

/// <w_lambda, [CP^n]>: only even indices, w_{2k} = binom(n+1, k) h^k.
inline bool cp_sw_number(int n, const std::vector<int>& parts)
{
    long product = 1;
    for (int p : parts)
        product *= p % 2 == 0 ? binomial(n + 1, p / 2) % 2 : 0;
    return product % 2 == 1;
}

/// F2[w1..wn], w_j of degree j.
inline RingPtr w_ring(int n, int cap)
{
    std::vector<Generator> gens;
    for (int j = 1; j <= n; ++j)
        gens.push_back({"w" + std::to_string(j), j});
    return RingPresentation::create(Coefficients::Mod2, gens, cap);
}

/// Every surviving monomial of degree <= top.
inline std::vector<Monomial> all_monomials(const RingPtr& ring, int top)
{
    std::vector<Monomial> out;
    for (int d = 0; d <= std::min(top, ring->truncation_degree()); ++d)
        for (auto& m : ring->basis(d))
            out.push_back(m);
    return out;
}

/// Sum of up to `terms` surviving monomials of degree <= max_degree with
/// coefficients in [-range, range] (bits over F2).
inline Poly random_poly(Gen& g, const RingPtr& ring, int max_degree, int terms = 4, int range = 5)
{
    Poly p(ring);
    const int top = std::min(max_degree, ring->truncation_degree());
    for (int t = 0; t < terms; ++t) {
        const auto basis = ring->basis(g.uniform(0, top));
        if (basis.empty())
            continue;
        p.add_term(g.pick(basis), g.uniform(-range, range));
    }
    return p;
}

inline Poly random_homogeneous(Gen& g, const RingPtr& ring, int degree, int terms = 3)
{
    Poly p(ring);
    const auto basis = ring->basis(degree);
    if (basis.empty())
        return p;
    for (int t = 0; t < terms; ++t)
        p.add_term(g.pick(basis), g.uniform(-3, 3));
    return p;
}

inline Poly random_unital(Gen& g, const RingPtr& ring, int max_degree, int terms = 4)
{
    Poly p = random_poly(g, ring, max_degree, terms);
    p -= Poly::constant(ring, p.constant_term());
    p += Poly::one(ring);
    return p;
}

inline EquivClass random_equiv(Gen& g, const SpacePtr& space, int max_degree)
{
    EquivClass z(space);
    const int top = std::min(max_degree, space->truncation_degree());
    z.add(0, random_poly(g, space->integral_ring(), top, 3, 7));
    for (int k = 1; 2 * k <= top; ++k)
        if (g.coin())
            z.add(k, random_poly(g, space->mod2_ring(), top - 2 * k, 2, 1));
    return z;
}

// ---- naive arithmetic oracle: exponent vectors -> coefficients, no
// canonical order, relations checked by divisibility at the end

using Dense = std::map<std::vector<int>, mpz_class>;

inline Dense to_dense(const Poly& p)
{
    Dense d;
    for (const auto& [m, c] : p.terms())
        d[std::vector<int>(m.exponents().begin(), m.exponents().end())] = c;
    return d;
}

inline bool dense_killed(const std::vector<int>& e, const RingPresentation& ring)
{
    int degree = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        degree += e[i] * ring.generators()[i].degree;
    if (degree > ring.truncation_degree())
        return true;
    for (const auto& r : ring.relations()) {
        bool divides = true;
        for (std::size_t i = 0; i < e.size(); ++i)
            divides = divides && r.exponent(i) <= e[i];
        if (divides)
            return true;
    }
    return false;
}

inline Dense dense_normalize(Dense d, const RingPresentation& ring)
{
    Dense out;
    for (auto& [e, c] : d) {
        if (ring.is_mod2())
            c = ((c % 2) + 2) % 2;
        if (c != 0 && !dense_killed(e, ring))
            out[e] = c;
    }
    return out;
}

inline Dense dense_mul(const Dense& a, const Dense& b, const RingPresentation& ring)
{
    Dense out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    return dense_normalize(out, ring);
}

inline Dense dense_add(const Dense& a, const Dense& b, const RingPresentation& ring)
{
    Dense out = a;
    for (const auto& [e, c] : b)
        out[e] += c;
    return dense_normalize(out, ring);
}

// ---- brute-force splitting-principle square: expand in variables
// t_1..t_n, apply Sq(t) = t + t^2, then solve for the elementary-symmetric
// expression by Gaussian elimination over F2. Generators of `p`'s ring must
// be w1..wk with w_j of degree j. Only practical for small degrees.

using TPoly = std::set<std::vector<std::uint8_t>>;  // F2 coefficients: presence

inline void toggle(TPoly& p, const std::vector<std::uint8_t>& m)
{
    auto [it, inserted] = p.insert(m);
    if (!inserted)
        p.erase(it);
}

inline TPoly t_mul(const TPoly& a, const TPoly& b)
{
    TPoly out;
    for (const auto& x : a)
        for (const auto& y : b) {
            std::vector<std::uint8_t> m(x.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = static_cast<std::uint8_t>(x[i] + y[i]);
            toggle(out, m);
        }
    return out;
}

inline TPoly elementary(int j, int n)
{
    TPoly out;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) == j) {
            std::vector<std::uint8_t> m(n, 0);
            for (int i = 0; i < n; ++i)
                m[i] = (mask >> i) & 1;
            toggle(out, m);
        }
    return out;
}

/// Products of e_1..e_n of total degree d, as exponent vectors over e_1..e_n.
inline void e_monomials(int d, int n, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int j = start; j <= std::min(n, d); ++j) {
        ++cur[j - 1];
        e_monomials(d - j, n, j, cur, out);
        --cur[j - 1];
    }
}

inline TPoly e_product(const std::vector<int>& exps, int n)
{
    TPoly out{std::vector<std::uint8_t>(n, 0)};
    for (int j = 1; j <= static_cast<int>(exps.size()); ++j)
        for (int k = 0; k < exps[j - 1]; ++k)
            out = t_mul(out, elementary(j, n));
    return out;
}

inline Poly brute_force_sq(int i, const Poly& p, int n)
{
    const RingPtr& ring = p.ring();
    Poly result(ring);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> exps(n, 0);
        for (std::size_t g = 0; g < m.size(); ++g)
            exps[ring->generators()[g].degree - 1] += m.exponent(g);
        const int target = m.degree() + i;
        // Sq^i of the expanded monomial: pick i of the degree's factors to square
        TPoly squared;
        for (const auto& tm : e_product(exps, n)) {
            // prod_k (t_k + t_k^2)^{a_k}, degree-target part
            std::vector<std::vector<std::uint8_t>> partial{tm};
            for (int k = 0; k < n; ++k) {
                std::vector<std::vector<std::uint8_t>> next;
                for (const auto& base : partial)
                    for (int extra = 0; extra <= tm[k]; ++extra) {
                        // binom(a_k, extra) mod 2
                        if ((tm[k] & extra) != extra)
                            continue;
                        auto mm = base;
                        mm[k] = static_cast<std::uint8_t>(mm[k] + extra);
                        next.push_back(mm);
                    }
                partial = std::move(next);
            }
            for (const auto& mm : partial) {
                int deg = 0;
                for (auto e : mm)
                    deg += e;
                if (deg == target)
                    toggle(squared, mm);
            }
        }
        // solve squared = sum of e-monomials of degree `target`
        std::vector<std::vector<int>> candidates;
        std::vector<int> cur(n, 0);
        e_monomials(target, n, 1, cur, candidates);
        std::vector<std::vector<std::uint8_t>> columns;  // distinct t-monomials
        std::vector<TPoly> images;
        for (const auto& cand : candidates)
            images.push_back(e_product(cand, n));
        std::set<std::vector<std::uint8_t>> support(squared.begin(), squared.end());
        for (const auto& im : images)
            support.insert(im.begin(), im.end());
        columns.assign(support.begin(), support.end());
        auto index = [&](const std::vector<std::uint8_t>& mm) {
            return static_cast<std::size_t>(std::lower_bound(columns.begin(), columns.end(), mm) - columns.begin());
        };
        // augmented rows: one equation per t-monomial; unknowns = candidates
        const std::size_t unknowns = candidates.size();
        std::vector<std::vector<bool>> rows(columns.size(), std::vector<bool>(unknowns + 1, false));
        for (std::size_t u = 0; u < unknowns; ++u)
            for (const auto& mm : images[u])
                rows[index(mm)][u] = true;
        for (const auto& mm : squared)
            rows[index(mm)][unknowns] = true;
        std::vector<int> pivot_of(unknowns, -1);
        std::size_t r = 0;
        for (std::size_t col = 0; col < unknowns && r < rows.size(); ++col) {
            std::size_t piv = r;
            while (piv < rows.size() && !rows[piv][col])
                ++piv;
            if (piv == rows.size())
                continue;
            std::swap(rows[r], rows[piv]);
            for (std::size_t k = 0; k < rows.size(); ++k)
                if (k != r && rows[k][col])
                    for (std::size_t c2 = 0; c2 <= unknowns; ++c2)
                        rows[k][c2] = rows[k][c2] != rows[r][c2];
            pivot_of[col] = static_cast<int>(r);
            ++r;
        }
        for (std::size_t u = 0; u < unknowns; ++u) {
            if (pivot_of[u] < 0 || !rows[pivot_of[u]][unknowns])
                continue;
            // e-monomial -> ring monomial; e_j without a generator reads 0
            std::vector<std::uint16_t> e(ring->size(), 0);
            bool present = true;
            for (int j = 1; j <= n; ++j) {
                if (!candidates[u][j - 1])
                    continue;
                auto gi = ring->index_of("w" + std::to_string(j));
                if (!gi) {
                    present = false;
                    break;
                }
                e[*gi] = static_cast<std::uint16_t>(candidates[u][j - 1]);
            }
            if (present && target <= ring->truncation_degree()) {
                Monomial mono = ring->make_monomial(e);
                if (!ring->kills(mono))
                    result.add_term(mono, 1);
            }
        }
    }
    return result;
}

}  // namespace rc_test
