#pragma once

#include <map>
#include <string>
#include <vector>

#include "realchern/conjugation/space.hpp"

namespace realchern {

enum class Side { M, N };

std::string_view side_name(Side side);

/// Conjugation manifold M^{2n} with fixed submanifold N^n, recorded through
/// the cohomology of the underlying space model, the total SW classes of both
/// and the top monomials that evaluate to 1 on the fundamental classes.
class ManifoldModel {
public:
    /// Validates the Poincare-duality shape (rank one in the top degree,
    /// nothing above) and kappa(w^M_{2k}) = w^N_k.
    static ManifoldModel create(std::string name, SpacePtr space, int dimension, Poly total_sw, Poly fixed_total_sw,
                                Monomial fundamental, Monomial fixed_fundamental);
    /// Same shape checks, but a failing kappa transfer is only recorded.
    static ManifoldModel unchecked(std::string name, SpacePtr space, int dimension, Poly total_sw,
                                   Poly fixed_total_sw, Monomial fundamental, Monomial fixed_fundamental);

    const std::string& name() const noexcept { return name_; }
    const SpacePtr& space() const noexcept { return space_; }
    int dimension(Side side = Side::M) const noexcept { return side == Side::M ? dimension_ : dimension_ / 2; }
    const Poly& total_sw(Side side) const noexcept { return side == Side::M ? sw_ : fixed_sw_; }
    const SqAction& squares(Side side) const;
    const Monomial& fundamental(Side side) const noexcept { return side == Side::M ? fundamental_ : fixed_fundamental_; }

    /// <x, [M]> (or [N]): coefficient of the fundamental monomial.
    bool evaluate(const Poly& x, Side side) const;

private:
    ManifoldModel(std::string name, SpacePtr space, int dimension, Poly sw, Poly fixed_sw, Monomial fundamental,
                  Monomial fixed_fundamental)
        : name_(std::move(name)), space_(std::move(space)), dimension_(dimension), sw_(std::move(sw)),
          fixed_sw_(std::move(fixed_sw)), fundamental_(std::move(fundamental)),
          fixed_fundamental_(std::move(fixed_fundamental))
    {
    }

    std::string name_;
    SpacePtr space_;
    int dimension_;
    Poly sw_;
    Poly fixed_sw_;
    Monomial fundamental_;
    Monomial fixed_fundamental_;
};

/// Total Wu class: the unique unital v with Sq(v) = w.
Poly wu_classes(const ManifoldModel& m, Side side);

struct DualityCheck {
    bool holds = true;
    std::string detail;
};

/// <v_k x> = <Sq^k x> for every k and every basis monomial x of
/// complementary degree.
DualityCheck wu_duality_check(const ManifoldModel& m, Side side);

struct TransferRow {
    char kind;  ///< 'v' or 'w'
    int k;
    bool pass;
    std::string detail;
};

/// kappa(v^M_{2k}) = v^N_k and kappa(w^M_{2k}) = w^N_k for 1 <= k <= n.
std::vector<TransferRow> kappa_transfer_check(const ManifoldModel& m);

/// Partition of the dimension (decreasing parts) -> <w_{l1}...w_{lr}>.
using SWNumbers = std::map<std::vector<int>, bool>;

std::vector<std::vector<int>> partitions(int n);
SWNumbers sw_numbers(const ManifoldModel& m, Side side);
std::string format_partition(const std::vector<int>& parts);

struct CobordismComparison {
    bool m_equal = false;
    bool n_equal = false;
    bool consistent() const { return m_equal == n_equal; }
    std::vector<std::vector<int>> m_differences;
    std::vector<std::vector<int>> n_differences;
};

CobordismComparison cobordism_compare(const ManifoldModel& a, const ManifoldModel& b);

/// M1 x M2 over the product space model; total classes and fundamental
/// monomials multiply.
ManifoldModel product_manifold(const ManifoldModel& a, const ManifoldModel& b, const std::string& name);

}  // namespace realchern
