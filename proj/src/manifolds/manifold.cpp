#include "realchern/manifolds/manifold.hpp"

#include <algorithm>
#include <functional>

#include "realchern/algebra/error.hpp"

namespace realchern {

std::string_view side_name(Side side)
{
    return side == Side::M ? "M" : "N";
}

namespace {

const RingPtr& side_ring(const SpaceModel& space, Side side)
{
    return side == Side::M ? space.mod2_ring() : space.fixed_ring();
}

void check_shape(const std::string& name, const RingPtr& ring, int dim, const Monomial& top, const char* what)
{
    if (dim > ring->truncation_degree())
        throw Error(ErrorCode::InvalidModel, name + ": " + what + " dimension exceeds the degree cap");
    const auto basis = ring->basis(dim);
    if (basis.size() != 1)
        throw Error(ErrorCode::InvalidModel, name + ": " + what + " cohomology must have rank 1 in degree " +
                                                 std::to_string(dim));
    if (!(basis.front() == top) || top.degree() != dim)
        throw Error(ErrorCode::InvalidModel, name + ": " + what + " fundamental monomial is not the top basis class");
    for (int d = dim + 1; d <= ring->truncation_degree(); ++d)
        if (ring->rank(d) != 0)
            throw Error(ErrorCode::InvalidModel, name + ": " + what + " cohomology is nonzero above degree " +
                                                     std::to_string(dim));
}

void check_unital(const std::string& name, const Poly& p, const RingPtr& ring, const char* what)
{
    if (!same_ring(p.ring(), ring))
        throw Error(ErrorCode::RingMismatch, name + ": " + what + " lives in the wrong ring");
    if (p.constant_term() != 1)
        throw Error(ErrorCode::NotUnital, name + ": " + what + " must have constant term 1");
}

}  // namespace

ManifoldModel ManifoldModel::unchecked(std::string name, SpacePtr space, int dimension, Poly total_sw,
                                       Poly fixed_total_sw, Monomial fundamental, Monomial fixed_fundamental)
{
    if (!space)
        throw Error(ErrorCode::InvalidModel, name + ": manifold without a space");
    if (dimension < 0 || dimension % 2 != 0)
        throw Error(ErrorCode::InvalidModel, name + ": dimension must be even and nonnegative");
    check_unital(name, total_sw, space->mod2_ring(), "total_sw");
    check_unital(name, fixed_total_sw, space->fixed_ring(), "fixed_total_sw");
    check_shape(name, space->mod2_ring(), dimension, fundamental, "M");
    check_shape(name, space->fixed_ring(), dimension / 2, fixed_fundamental, "N");
    return ManifoldModel(std::move(name), std::move(space), dimension, std::move(total_sw), std::move(fixed_total_sw),
                         std::move(fundamental), std::move(fixed_fundamental));
}

ManifoldModel ManifoldModel::create(std::string name, SpacePtr space, int dimension, Poly total_sw,
                                    Poly fixed_total_sw, Monomial fundamental, Monomial fixed_fundamental)
{
    ManifoldModel m = unchecked(std::move(name), std::move(space), dimension, std::move(total_sw),
                                std::move(fixed_total_sw), std::move(fundamental), std::move(fixed_fundamental));
    for (const auto& row : kappa_transfer_check(m))
        if (row.kind == 'w' && !row.pass)
            throw Error(ErrorCode::InvalidModel, m.name() + ": " + row.detail);
    return m;
}

const SqAction& ManifoldModel::squares(Side side) const
{
    return side == Side::M ? space_->mod2_squares() : space_->fixed_squares();
}

bool ManifoldModel::evaluate(const Poly& x, Side side) const
{
    if (!same_ring(x.ring(), side_ring(*space_, side)))
        throw Error(ErrorCode::RingMismatch, name_ + ": evaluation of a class from the wrong ring");
    return x.coefficient(fundamental(side)) != 0;
}

Poly wu_classes(const ManifoldModel& m, Side side)
{
    return invert_total_sq(m.total_sw(side), m.squares(side));
}

DualityCheck wu_duality_check(const ManifoldModel& m, Side side)
{
    DualityCheck out;
    const Poly v = wu_classes(m, side);
    const RingPtr& ring = side_ring(*m.space(), side);
    const int dim = m.dimension(side);
    for (int k = 0; k <= dim; ++k) {
        const Poly vk = homogeneous_part(v, k);
        for (const auto& mono : ring->basis(dim - k)) {
            const Poly x = Poly::term(ring, mono);
            const bool lhs = m.evaluate(vk * x, side);
            const bool rhs = m.evaluate(m.squares(side).sq(k, x), side);
            if (lhs != rhs) {
                out.holds = false;
                out.detail = "<v" + std::to_string(k) + " * " + x.to_string() + "> = " + std::to_string(lhs) +
                             " but <Sq^" + std::to_string(k) + "(" + x.to_string() + ")> = " + std::to_string(rhs);
                return out;
            }
        }
    }
    return out;
}

std::vector<TransferRow> kappa_transfer_check(const ManifoldModel& m)
{
    const SpaceModel& space = *m.space();
    std::vector<TransferRow> rows;
    const Poly vm = wu_classes(m, Side::M);
    const Poly vn = wu_classes(m, Side::N);
    const int n = m.dimension(Side::N);
    auto compare = [&](char kind, int k, const Poly& total_m, const Poly& total_n) {
        TransferRow row{kind, k, true, ""};
        const Poly odd = homogeneous_part(total_m, 2 * k - 1);
        const Poly lhs = kappa_apply(homogeneous_part(total_m, 2 * k), space);
        const Poly rhs = homogeneous_part(total_n, k);
        if (!odd.is_zero()) {
            row.pass = false;
            row.detail = std::string(1, kind) + "^M_" + std::to_string(2 * k - 1) + " = " + odd.to_string() +
                         " is nonzero";
        } else if (!(lhs == rhs)) {
            row.pass = false;
            row.detail = "kappa(" + std::string(1, kind) + "^M_" + std::to_string(2 * k) + ") = " + lhs.to_string() +
                         " but " + std::string(1, kind) + "^N_" + std::to_string(k) + " = " + rhs.to_string();
        }
        rows.push_back(std::move(row));
    };
    for (int k = 1; k <= n; ++k) {
        compare('v', k, vm, vn);
        compare('w', k, m.total_sw(Side::M), m.total_sw(Side::N));
    }
    return rows;
}

std::vector<std::vector<int>> partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int rest, int largest) {
        if (rest == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(rest, largest); part >= 1; --part) {
            current.push_back(part);
            rec(rest - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::string format_partition(const std::vector<int>& parts)
{
    if (parts.empty())
        return "1";
    std::string out;
    // ascending index order: w1^2*w2
    for (auto it = parts.rbegin(); it != parts.rend();) {
        auto end = it;
        int count = 0;
        while (end != parts.rend() && *end == *it) {
            ++end;
            ++count;
        }
        if (!out.empty())
            out += "*";
        out += "w" + std::to_string(*it);
        if (count > 1)
            out += "^" + std::to_string(count);
        it = end;
    }
    return out;
}

SWNumbers sw_numbers(const ManifoldModel& m, Side side)
{
    SWNumbers out;
    const Poly& w = m.total_sw(side);
    for (const auto& lambda : partitions(m.dimension(side))) {
        Poly product = Poly::one(w.ring());
        for (int part : lambda)
            product *= homogeneous_part(w, part);
        out[lambda] = m.evaluate(product, side);
    }
    return out;
}

CobordismComparison cobordism_compare(const ManifoldModel& a, const ManifoldModel& b)
{
    if (a.dimension() != b.dimension())
        throw Error(ErrorCode::DimensionMismatch, a.name() + " has dimension " + std::to_string(a.dimension()) +
                                                      ", " + b.name() + " has dimension " +
                                                      std::to_string(b.dimension()));
    CobordismComparison out;
    auto diff = [](const SWNumbers& x, const SWNumbers& y) {
        std::vector<std::vector<int>> d;
        for (const auto& [lambda, bit] : x)
            if (y.at(lambda) != bit)
                d.push_back(lambda);
        return d;
    };
    out.m_differences = diff(sw_numbers(a, Side::M), sw_numbers(b, Side::M));
    out.n_differences = diff(sw_numbers(a, Side::N), sw_numbers(b, Side::N));
    out.m_equal = out.m_differences.empty();
    out.n_equal = out.n_differences.empty();
    return out;
}

namespace {

std::vector<Poly> embedding(const RingPresentation& factor, const RingPtr& product, std::size_t offset)
{
    std::vector<Poly> out;
    for (std::size_t g = 0; g < factor.size(); ++g)
        out.push_back(Poly::generator(product, offset + g));
    return out;
}

Monomial concat(const RingPtr& product, const Monomial& a, const Monomial& b)
{
    auto exps = a.exponents();
    exps.insert(exps.end(), b.exponents().begin(), b.exponents().end());
    return product->make_monomial(std::move(exps));
}

}  // namespace

ManifoldModel product_manifold(const ManifoldModel& a, const ManifoldModel& b, const std::string& name)
{
    const SpaceModel& sa = *a.space();
    const SpaceModel& sb = *b.space();
    SpacePtr space = product_space(sa, sb, sa.name() + "x" + sb.name());
    const RingPtr& mod2 = space->mod2_ring();
    const RingPtr& fixed = space->fixed_ring();
    const Poly w = apply_ring_map(a.total_sw(Side::M), mod2, embedding(*sa.mod2_ring(), mod2, 0)) *
                   apply_ring_map(b.total_sw(Side::M), mod2, embedding(*sb.mod2_ring(), mod2, sa.mod2_ring()->size()));
    const Poly wn =
        apply_ring_map(a.total_sw(Side::N), fixed, embedding(*sa.fixed_ring(), fixed, 0)) *
        apply_ring_map(b.total_sw(Side::N), fixed, embedding(*sb.fixed_ring(), fixed, sa.fixed_ring()->size()));
    return ManifoldModel::create(name, space, a.dimension() + b.dimension(), w, wn,
                                 concat(mod2, a.fundamental(Side::M), b.fundamental(Side::M)),
                                 concat(fixed, a.fundamental(Side::N), b.fundamental(Side::N)));
}

}  // namespace realchern
