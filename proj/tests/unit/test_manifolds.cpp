#include <doctest.h>

#include "realchern/algebra/parser.hpp"
#include "realchern/manifolds/manifold.hpp"
#include "support/support.hpp"

using namespace realchern;

namespace {

const Workspace& ws()
{
    return rc_test::catalogue();
}

/// <w_lambda, [RP^a x RP^b]> by expanding (1+x)^{a+1}(1+y)^{b+1} with
/// plain integers: coefficient of x^a y^b in prod_i w_{lambda_i}.
bool rp_product_number(int a, int b, const std::vector<int>& parts)
{
    std::map<std::pair<int, int>, long> acc{{{0, 0}, 1}};
    for (int p : parts) {
        std::map<std::pair<int, int>, long> next;
        for (const auto& [e, c] : acc)
            for (int i = 0; i <= p; ++i) {
                const int j = p - i;
                if (e.first + i > a || e.second + j > b)
                    continue;
                next[{e.first + i, e.second + j}] += c * rc_test::binomial(a + 1, i) * rc_test::binomial(b + 1, j);
            }
        acc = std::move(next);
    }
    return acc[{a, b}] % 2 == 1;
}

ManifoldModel hand_rp2_squared_model()
{
    SpaceDefinition def;
    def.name = "RP2xRP2_hand";
    auto bare = RingPresentation::create(Coefficients::Integer, {{"a", 2}, {"b", 2}}, 8);
    def.integral_ring = RingPresentation::create(Coefficients::Integer, {{"a", 2}, {"b", 2}}, 8,
                                                 {bare->make_monomial({3, 0}), bare->make_monomial({0, 3})});
    auto fbare = RingPresentation::create(Coefficients::Mod2, {{"x", 1}, {"y", 1}}, 4);
    def.fixed_ring = RingPresentation::create(Coefficients::Mod2, {{"x", 1}, {"y", 1}}, 4,
                                              {fbare->make_monomial({3, 0}), fbare->make_monomial({0, 3})});
    def.kappa.emplace("a", parse_poly("x", def.fixed_ring));
    def.kappa.emplace("b", parse_poly("y", def.fixed_ring));
    auto sp = SpaceModel::create(def);
    return ManifoldModel::create("hand", sp, 8, sp->mod2("(1 + a + a^2)*(1 + b + b^2)"),
                                 sp->fixed("(1 + x + x^2)*(1 + y + y^2)"),
                                 sp->mod2_ring()->make_monomial({2, 2}), sp->fixed_ring()->make_monomial({2, 2}));
}

}  // namespace

TEST_CASE("partitions")
{
    CHECK(partitions(0).size() == 1);
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(8).size() == 22);
    CHECK(partitions(4).front() == std::vector<int>{4});
    CHECK(format_partition({2, 1, 1}) == "w1^2*w2");
    CHECK(format_partition({2, 2}) == "w2^2");
    CHECK(format_partition({4}) == "w4");
}

TEST_CASE("Wu classes and SW numbers of CP2 and RP2")
{
    const auto& cp2 = ws().manifold("CP2");
    const auto& sp = cp2.space();
    CHECK(wu_classes(cp2, Side::M) == sp->mod2("1 + h"));
    CHECK(wu_classes(cp2, Side::N) == sp->fixed("1 + x"));
    CHECK(cp2.dimension(Side::M) == 4);
    CHECK(cp2.dimension(Side::N) == 2);

    const SWNumbers m = sw_numbers(cp2, Side::M);
    CHECK(m.at({2, 2}));
    CHECK(m.at({4}));
    CHECK_FALSE(m.at({2, 1, 1}));
    CHECK_FALSE(m.at({3, 1}));
    CHECK_FALSE(m.at({1, 1, 1, 1}));
    const SWNumbers n = sw_numbers(cp2, Side::N);
    CHECK(n.size() == 2);
    CHECK(n.at({1, 1}));
    CHECK(n.at({2}));

    CHECK(wu_duality_check(cp2, Side::M).holds);
    CHECK(wu_duality_check(cp2, Side::N).holds);
    const auto& pt = ws().manifold("pt");
    CHECK(wu_duality_check(pt, Side::M).holds);
    CHECK(wu_classes(pt, Side::M) == pt.space()->mod2("1"));
}

TEST_CASE("CP^n / RP^n family up to n = 8")
{
    for (int n = 1; n <= 8; ++n) {
        const auto& m = ws().manifold("CP" + std::to_string(n));
        CAPTURE(n);
        for (Side side : {Side::M, Side::N}) {
            const Poly v = wu_classes(m, side);
            CHECK(total_sq(v, m.squares(side)) == m.total_sw(side));
            CHECK(wu_duality_check(m, side).holds);
        }
        // closed forms: v_k(RP^n) = binom(n-k, k) u^k, v_{2k}(CP^n) = binom(n-k, k) h^k
        const auto& sp = m.space();
        Poly v_m(sp->mod2_ring()), v_n(sp->fixed_ring());
        for (int k = 0; 2 * k <= n; ++k)
            if (rc_test::binomial(n - k, k) % 2) {
                v_m += sp->mod2("h").pow(k);
                v_n += sp->fixed("x").pow(k);
            }
        CHECK(wu_classes(m, Side::M) == v_m);
        CHECK(wu_classes(m, Side::N) == v_n);
        for (const auto& row : kappa_transfer_check(m))
            CHECK(row.pass);
        for (const auto& [parts, value] : sw_numbers(m, Side::M))
            CHECK(value == rc_test::cp_sw_number(n, parts));
        for (const auto& [parts, value] : sw_numbers(m, Side::N))
            CHECK(value == rc_test::rp_sw_number(n, parts));
    }
    // CP1 / RP1: both total classes are 1
    const auto& cp1 = ws().manifold("CP1");
    CHECK(cp1.total_sw(Side::M) == cp1.space()->mod2("1"));
    CHECK(cp1.total_sw(Side::N) == cp1.space()->fixed("1"));
}

TEST_CASE("products")
{
    for (const char* name : {"CP1xCP1", "CP1xCP2", "CP2xCP2", "CP1xS2"}) {
        const auto& m = ws().manifold(name);
        CAPTURE(name);
        for (Side side : {Side::M, Side::N}) {
            CHECK(total_sq(wu_classes(m, side), m.squares(side)) == m.total_sw(side));
            CHECK(wu_duality_check(m, side).holds);
        }
        for (const auto& row : kappa_transfer_check(m))
            CHECK(row.pass);
    }
    const ManifoldModel product = product_manifold(ws().manifold("CP2"), ws().manifold("CP2"), "P");
    const ManifoldModel hand = hand_rp2_squared_model();
    CHECK(product.dimension() == 8);
    CHECK(sw_numbers(product, Side::N) == sw_numbers(hand, Side::N));
    CHECK(sw_numbers(product, Side::M) == sw_numbers(hand, Side::M));
    for (const auto& [parts, value] : sw_numbers(hand, Side::N)) {
        CAPTURE(format_partition(parts));
        CHECK(value == rp_product_number(2, 2, parts));
    }
    for (const auto& [parts, value] : sw_numbers(ws().manifold("CP1xCP2"), Side::N))
        CHECK(value == rp_product_number(1, 2, parts));
}

TEST_CASE("corrupted fixed Stiefel-Whitney class")
{
    const auto& cp2 = ws().manifold("CP2");
    const auto& sp = cp2.space();
    const auto args = std::make_tuple(sp->mod2("1 + h + h^2"), sp->fixed("1 + x"));
    CHECK(rc_test::thrown_code([&] {
              ManifoldModel::create("bad", sp, 4, std::get<0>(args), std::get<1>(args), cp2.fundamental(Side::M),
                                    cp2.fundamental(Side::N));
          }) == ErrorCode::InvalidModel);
    const ManifoldModel bad = ManifoldModel::unchecked("bad", sp, 4, std::get<0>(args), std::get<1>(args),
                                                       cp2.fundamental(Side::M), cp2.fundamental(Side::N));
    bool failed = false;
    for (const auto& row : kappa_transfer_check(bad))
        failed = failed || !row.pass;
    CHECK(failed);
    // 1 + x is not the SW class of a surface with these squares
    CHECK_FALSE(wu_duality_check(bad, Side::N).holds);
}

TEST_CASE("model shape validation")
{
    const auto& cp2 = ws().manifold("CP2");
    const auto& sp = cp2.space();
    auto make = [&](int dim, const Poly& w, const Monomial& fund) {
        return ManifoldModel::create("x", sp, dim, w, sp->fixed("1 + x + x^2"), fund, cp2.fundamental(Side::N));
    };
    CHECK(rc_test::thrown_code([&] { make(3, sp->mod2("1 + h + h^2"), cp2.fundamental(Side::M)); }) ==
          ErrorCode::InvalidModel);
    CHECK(rc_test::thrown_code([&] { make(4, sp->mod2("h"), cp2.fundamental(Side::M)); }) == ErrorCode::NotUnital);
    CHECK(rc_test::thrown_code([&] {
              make(2, sp->mod2("1 + h"), sp->mod2_ring()->make_monomial({1}));
          }) == ErrorCode::InvalidModel);
}

TEST_CASE("cobordism comparison")
{
    const auto same = cobordism_compare(ws().manifold("CP2"), ws().manifold("CP2"));
    CHECK(same.m_equal);
    CHECK(same.n_equal);
    CHECK(same.consistent());

    const auto cmp = cobordism_compare(ws().manifold("CP1xCP1"), ws().manifold("CP2"));
    CHECK_FALSE(cmp.m_equal);
    CHECK_FALSE(cmp.n_equal);
    CHECK(cmp.consistent());
    CHECK(std::find(cmp.m_differences.begin(), cmp.m_differences.end(), std::vector<int>{2, 2}) !=
          cmp.m_differences.end());

    CHECK(rc_test::thrown_code([] { cobordism_compare(ws().manifold("CP2"), ws().manifold("CP3")); }) ==
          ErrorCode::DimensionMismatch);
}
