#include <doctest.h>

#include <functional>

#include "realchern/algebra/error.hpp"
#include "realchern/algebra/parser.hpp"
#include "support/support.hpp"

using namespace realchern;
using rc_test::Gen;

namespace {

RingPtr sphere_ring()
{
    auto bare = RingPresentation::create(Coefficients::Integer, {{"h", 2}}, 4);
    return RingPresentation::create(Coefficients::Integer, {{"h", 2}}, 4, {bare->generator_monomial(0, 2)});
}

RingPtr u_ring(int cap)
{
    return RingPresentation::create(Coefficients::Mod2, {{"u", 1}}, cap);
}

RingPtr w_ring(int n, int cap)
{
    std::vector<Generator> gens;
    for (int j = 1; j <= n; ++j)
        gens.push_back({"w" + std::to_string(j), j});
    return RingPresentation::create(Coefficients::Mod2, gens, cap);
}

RingPtr c_ring(int cap)
{
    return RingPresentation::create(Coefficients::Integer, {{"c1", 2}, {"c2", 4}, {"c3", 6}}, cap);
}

/// Ring with a mixed relation set, used for the random laws.
RingPtr mixed_ring(Coefficients coeffs)
{
    std::vector<Generator> gens{{"a", 1}, {"b", 2}, {"c", 3}};
    auto bare = RingPresentation::create(coeffs, gens, 12);
    return RingPresentation::create(coeffs, gens, 12,
                                    {bare->make_monomial({5, 0, 0}), bare->make_monomial({1, 2, 1})});
}

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidModel;
}

}  // namespace

TEST_CASE("ring presentation validation")
{
    CHECK(code_of([] { RingPresentation::create(Coefficients::Integer, {{"h", 2}, {"h", 4}}, 8); }) ==
          ErrorCode::InvalidPresentation);
    CHECK(code_of([] { RingPresentation::create(Coefficients::Integer, {{"h", 0}}, 8); }) ==
          ErrorCode::InvalidPresentation);
    CHECK(code_of([] { RingPresentation::create(Coefficients::Integer, {{"2h", 2}}, 8); }) ==
          ErrorCode::InvalidPresentation);
    auto bare = RingPresentation::create(Coefficients::Integer, {{"h", 2}}, 8);
    CHECK(code_of([&] {
              RingPresentation::create(Coefficients::Integer, {{"h", 2}}, 4, {bare->generator_monomial(0, 3)});
          }) == ErrorCode::InvalidPresentation);

    auto s2 = sphere_ring();
    CHECK(s2->rank(0) == 1);
    CHECK(s2->rank(2) == 1);
    CHECK(s2->rank(4) == 0);
    auto w = w_ring(3, 6);
    CHECK(w->rank(3) == 3);  // w1^3, w1 w2, w3
    CHECK(w->basis(3).front() == w->generator_monomial(0, 3));
}

TEST_CASE("poly_add examples")
{
    auto s2 = sphere_ring();
    const Poly one_h = parse_poly("1 + h", s2);
    CHECK((one_h + one_h).to_string() == "2 + 2*h");

    auto u = u_ring(3);
    const Poly one_u = parse_poly("1 + u", u);
    CHECK((one_u + one_u).is_zero());

    const Poly h = Poly::generator(s2, "h");
    CHECK(poly_add(h, Poly(s2)) == h);

    CHECK(code_of([&] { (void)(h + one_u); }) == ErrorCode::RingMismatch);
}

TEST_CASE("poly_mul examples")
{
    auto s2 = sphere_ring();
    CHECK(poly_mul(parse_poly("1 + h", s2), parse_poly("1 + h", s2)).to_string() == "1 + 2*h");

    // (1+u)^3 against direct expansion: binomial(3,k) mod 2 = 1 for all k
    auto u = u_ring(3);
    const Poly cube = parse_poly("1 + u", u).pow(3);
    rc_test::Dense expansion{{{0}, 1}};
    const rc_test::Dense factor{{{0}, 1}, {{1}, 1}};
    for (int i = 0; i < 3; ++i)
        expansion = rc_test::dense_mul(expansion, factor, *u);
    CHECK(rc_test::to_dense(cube) == expansion);
    CHECK(cube.to_string() == "1 + u + u^2 + u^3");

    auto w = w_ring(2, 4);
    CHECK(poly_mul(Poly::generator(w, "w1"), Poly::generator(w, "w2")).to_string() == "w1*w2");
    CHECK(code_of([&] { (void)poly_mul(cube, Poly::generator(w, "w1")); }) == ErrorCode::RingMismatch);
}

TEST_CASE("homogeneous_part examples")
{
    auto u = u_ring(3);
    const Poly cube = parse_poly("(1+u)^3", u);
    rc_test::Dense expansion{{{0}, 1}};
    for (int i = 0; i < 3; ++i)
        expansion = rc_test::dense_mul(expansion, {{{0}, 1}, {{1}, 1}}, *u);
    CHECK(rc_test::to_dense(homogeneous_part(cube, 2)) == rc_test::Dense{{{2}, expansion.at({2})}});
    CHECK(homogeneous_part(cube, 2).to_string() == "u^2");

    auto s2 = sphere_ring();
    CHECK(homogeneous_part(parse_poly("1 + h", s2), 0).to_string() == "1");
    CHECK(homogeneous_part(parse_poly("h", s2), 4).is_zero());
    CHECK(code_of([&] { (void)homogeneous_part(cube, 4); }) == ErrorCode::OutOfRange);
    CHECK(code_of([&] { (void)homogeneous_part(cube, -1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("reduce_mod2 examples")
{
    auto s2 = sphere_ring();
    CHECK(reduce_mod2(parse_poly("2 + 2*h", s2)).is_zero());
    CHECK(reduce_mod2(parse_poly("1 + 3*h", s2)).to_string() == "1 + h");
    CHECK(reduce_mod2(parse_poly("-1 - h", s2)).to_string() == "1 + h");
    auto c = c_ring(8);
    const Poly r = reduce_mod2(parse_poly("c1^2 + 2*c2", c));
    CHECK(r.to_string() == "c1^2");
    CHECK(r.ring()->is_mod2());
    CHECK(r.ring()->generators() == c->generators());
}

TEST_CASE("apply_ring_map examples")
{
    auto c = c_ring(8);
    auto s2 = sphere_ring();
    const Poly h = Poly::generator(s2, "h");
    std::map<std::string, Poly> to_sphere{{"c1", h}, {"c2", Poly(s2)}, {"c3", Poly(s2)}};
    CHECK(apply_ring_map(parse_poly("c1", c), s2, to_sphere) == h);
    CHECK(apply_ring_map(parse_poly("c1^2", c), s2, to_sphere).is_zero());

    // generator renaming into a symmetric-function ring
    auto sym = RingPresentation::create(Coefficients::Integer, {{"s1", 2}, {"s2", 4}, {"s3", 6}}, 8);
    std::map<std::string, Poly> rename{{"c1", Poly::generator(sym, "s1")},
                                       {"c2", Poly::generator(sym, "s2")},
                                       {"c3", Poly::generator(sym, "s3")}};
    CHECK(apply_ring_map(parse_poly("c2", c), sym, rename).to_string() == "s2");

    std::map<std::string, Poly> bad_degree{{"c1", h}, {"c2", h}, {"c3", Poly(s2)}};
    CHECK(code_of([&] { (void)apply_ring_map(parse_poly("c2", c), s2, bad_degree); }) == ErrorCode::DegreeMismatch);
    std::map<std::string, Poly> missing{{"c1", h}};
    CHECK(code_of([&] { (void)apply_ring_map(parse_poly("c1", c), s2, missing); }) == ErrorCode::MissingImage);
}

TEST_CASE("parse_poly examples and diagnostics")
{
    auto c = c_ring(16);
    const Poly p = parse_poly("1 + 3*c1^2*c2", c);
    CHECK(p.terms().size() == 2);
    CHECK(p.coefficient(c->make_monomial({0, 0, 0})) == 1);
    CHECK(p.coefficient(c->make_monomial({2, 1, 0})) == 3);
    CHECK(p.to_string() == "1 + 3*c1^2*c2");

    CHECK(parse_poly("(1+h)^2", sphere_ring()).to_string() == "1 + 2*h");
    CHECK(parse_poly("  c1 *c2- c3 +c2*c1 ", c).to_string() == "2*c1*c2 - c3");
    CHECK(parse_poly("-c1", c).to_string() == "-c1");
    CHECK(parse_poly("2^3", c).to_string() == "8");
    CHECK(parse_poly("c1^0", c).to_string() == "1");

    try {
        parse_poly("1 + q", c);
        FAIL("accepted unknown generator");
    } catch (const ParseError& e) {
        CHECK(e.code() == ErrorCode::UnknownGenerator);
        CHECK(e.column() == 5);
        CHECK(std::string(e.what()).find("unknown generator") != std::string::npos);
    }
    const std::vector<std::pair<std::string, ErrorCode>> bad{
        {"", ErrorCode::SyntaxError},          {"1 +", ErrorCode::SyntaxError},
        {"(c1", ErrorCode::SyntaxError},       {"c1)", ErrorCode::SyntaxError},
        {"c1^", ErrorCode::SyntaxError},       {"c1^c2", ErrorCode::SyntaxError},
        {"c1 c2", ErrorCode::SyntaxError},     {"c1 ** 2", ErrorCode::SyntaxError},
        {"c1 + $", ErrorCode::SyntaxError},    {"c3^3", ErrorCode::DegreeOverflow},
        {"c1^5000", ErrorCode::SyntaxError},   {"x1", ErrorCode::UnknownGenerator},
    };
    for (const auto& [text, code] : bad) {
        CAPTURE(text);
        CHECK(code_of([&] { parse_poly(text, c); }) == code);
    }
    ParseOptions lenient;
    lenient.allow_truncation = true;
    CHECK(parse_poly("1 + c3^3", c, lenient).to_string() == "1");

    ParseOptions placed;
    placed.line = 7;
    placed.column = 10;
    try {
        parse_poly("1 +\n  zz", c, placed);
        FAIL("accepted unknown generator");
    } catch (const ParseError& e) {
        CHECK(e.line() == 8);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("arbitrary precision coefficients")
{
    auto c = c_ring(16);
    ParseOptions lenient;
    lenient.allow_truncation = true;
    const Poly big = parse_poly("(2*c1 + 3)^60", c, lenient);
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 3, 60);
    CHECK(big.constant_term() == expected);
    mpz_class linear;  // 60 * 2 * 3^59
    mpz_ui_pow_ui(linear.get_mpz_t(), 3, 59);
    linear *= 120;
    CHECK(big.coefficient(c->make_monomial({1, 0, 0})) == linear);
    CHECK(parse_poly("18446744073709551616 * c1", c).to_string() == "18446744073709551616*c1");
}

TEST_CASE("property: ring laws against the naive oracle")
{
    for (auto coeffs : {Coefficients::Integer, Coefficients::Mod2}) {
        auto ring = mixed_ring(coeffs);
        Gen g(coeffs == Coefficients::Integer ? 11 : 12);
        for (int trial = 0; trial < 300; ++trial) {
            const Poly p = rc_test::random_poly(g, ring, 12);
            const Poly q = rc_test::random_poly(g, ring, 12);
            const Poly r = rc_test::random_poly(g, ring, 12);
            CAPTURE(p.to_string());
            CAPTURE(q.to_string());
            CAPTURE(r.to_string());
            CHECK(p * (q + r) == p * q + p * r);
            CHECK(p * q == q * p);
            CHECK((p * q) * r == p * (q * r));
            CHECK(p + q == q + p);
            CHECK(rc_test::to_dense(p * q) == rc_test::dense_mul(rc_test::to_dense(p), rc_test::to_dense(q), *ring));
            CHECK(rc_test::to_dense(p + q) == rc_test::dense_add(rc_test::to_dense(p), rc_test::to_dense(q), *ring));
        }
    }
}

TEST_CASE("property: truncation coherence")
{
    auto ring = mixed_ring(Coefficients::Integer);
    Gen g(21);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly p = rc_test::random_poly(g, ring, 12, 6);
        const Poly q = rc_test::random_poly(g, ring, 12, 6);
        const int k = g.uniform(0, 11);
        // replacing everything above degree k changes nothing in degree k
        Poly p_low = truncate(p, k) + rc_test::random_homogeneous(g, ring, k + 1);
        Poly q_low = truncate(q, k);
        CHECK(homogeneous_part(p * q, k) == homogeneous_part(p_low * q_low, k));
    }
}

TEST_CASE("property: reduce_mod2 is a ring homomorphism")
{
    auto ring = mixed_ring(Coefficients::Integer);
    Gen g(31);
    for (int trial = 0; trial < 300; ++trial) {
        const Poly p = rc_test::random_poly(g, ring, 12);
        const Poly q = rc_test::random_poly(g, ring, 12);
        CHECK(reduce_mod2(p * q) == reduce_mod2(p) * reduce_mod2(q));
        CHECK(reduce_mod2(p + q) == reduce_mod2(p) + reduce_mod2(q));
    }
}

TEST_CASE("property: parse . print round trip")
{
    for (auto coeffs : {Coefficients::Integer, Coefficients::Mod2}) {
        auto ring = mixed_ring(coeffs);
        Gen g(41);
        for (int trial = 0; trial < 300; ++trial) {
            const Poly p = rc_test::random_poly(g, ring, 12, 6, 1000);
            const std::string printed = p.to_string();
            CAPTURE(printed);
            CHECK(parse_poly(printed, ring) == p);
            CHECK(parse_poly(printed, ring).to_string() == printed);
        }
    }
}
