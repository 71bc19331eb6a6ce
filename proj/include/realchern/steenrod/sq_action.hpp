#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "realchern/algebra/poly.hpp"

namespace realchern {

/// Binomial coefficient mod 2 (Lucas). Negative tops use
/// binom(n, k) = (-1)^k binom(k - n - 1, k).
bool binomial_mod2(long n, long k);

class SqAction;
using SqActionPtr = std::shared_ptr<const SqAction>;

/// Steenrod squares on an F2 ring presentation, given by their values on
/// generators and extended by the Cartan formula.
class SqAction {
public:
    /// rules[g][i] = Sq^i(generator g) for 0 <= i <= deg(g). Sq^0 must be
    /// the generator, the top square its square, and every entry homogeneous
    /// of degree deg(g) + i.
    static SqActionPtr create(RingPtr ring, std::vector<std::vector<Poly>> rules);

    const RingPtr& ring() const noexcept { return ring_; }
    const Poly& generator_rule(std::size_t generator, int i) const { return rules_.at(generator).at(i); }

    Poly sq(int i, const Poly& p) const;
    Poly total(const Poly& p) const;

private:
    SqAction(RingPtr ring, std::vector<std::vector<Poly>> rules) : ring_(std::move(ring)), rules_(std::move(rules)) {}

    Poly total_of_monomial(const Monomial& m) const;

    RingPtr ring_;
    std::vector<std::vector<Poly>> rules_;
    std::vector<Poly> generator_totals_;

    mutable std::mutex memo_mutex_;
    mutable std::map<Monomial, Poly> memo_;
};

Poly sq(int i, const Poly& p, const SqAction& action);
Poly total_sq(const Poly& p, const SqAction& action);

/// Solves Sq(v) = w degree by degree for unital w.
Poly invert_total_sq(const Poly& w, const SqAction& action);

/// Sq^i(w_j) by the Wu formula in a ring whose generators include some of
/// w1, w2, ... (named `prefix` + index, degree = index * unit). Classes
/// w_k that are not generators of the ring read as zero. With unit 2 the
/// formula is doubled: Sq^{2i}(c_j) = the same sum in the c's, odd squares 0.
Poly wu_formula(int i, int j, const RingPtr& ring, const std::string& prefix = "w", int unit = 1);

/// SqAction on F2[w1..w_nmax] truncated at degree `truncation`.
SqActionPtr wu_rule_for_bo(int n_max, int truncation);

/// Declared values keyed by (generator name, i).
using SqDeclarations = std::map<std::pair<std::string, int>, Poly>;

/// Builds the action for a ring from explicit declarations, filling in
///  - Sq^0 and the top square,
///  - Wu-formula values for generators named w<j> of degree j (or c<j> of
///    degree 2j when `integral_chern_names` is set),
///  - zero for odd squares when every generator has even degree,
///  - zero when the target degree has no surviving monomials.
/// Any other intermediate square must be declared (MissingSqRule).
SqActionPtr resolve_sq_action(const RingPtr& ring, const SqDeclarations& declared, bool integral_chern_names);

}  // namespace realchern
