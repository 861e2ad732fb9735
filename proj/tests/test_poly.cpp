#include <doctest.h>

#include "tmat/errors.hpp"
#include "tmat/poly.hpp"

using namespace tmat;

namespace {
SparsePoly var(const std::string& name, int e = 1) { return SparsePoly::variable(name, e); }
} // namespace

TEST_CASE("basic arithmetic") {
    const SparsePoly x = var("x");
    CHECK((x - SparsePoly(1)) * (x + SparsePoly(1)) == x.pow(2) - SparsePoly(1));
    CHECK((x - x).is_zero());
    CHECK(SparsePoly(0).is_zero());
    CHECK(x * SparsePoly(0) == SparsePoly());
}

TEST_CASE("multi-variable alignment") {
    const SparsePoly p = var("x") + var("y");
    const SparsePoly q = var("y") + var("z");
    const SparsePoly s = p + q;
    CHECK(s.vars() == std::vector<std::string>{"x", "y", "z"});
    CHECK(s == var("x") + SparsePoly(2) * var("y") + var("z"));
    CHECK_THROWS_AS(s * var("w"), input_error);
}

TEST_CASE("laurent monomial powers") {
    const SparsePoly a = var("A");
    CHECK((-a.pow(3)).pow(-1) == -a.pow(-3));
    CHECK((-a.pow(3)).pow(-2) == a.pow(-6));
    CHECK((-a.pow(3)) * (-a.pow(-3)) == SparsePoly(1));
    CHECK_THROWS_AS((a + SparsePoly(1)).pow(-1), input_error);
}

TEST_CASE("pretty printing uses graded lex order") {
    CHECK((SparsePoly(3) * var("zeta") + SparsePoly(3)).pretty() == "3*zeta + 3");
    CHECK((-var("A", 3)).pretty() == "-A^3");
    CHECK(SparsePoly().pretty() == "0");
    CHECK((var("y") * var("z") + SparsePoly(1)).pretty() == "y*z + 1");
    CHECK((var("x").pow(2) - SparsePoly(2) * var("x")).pretty() == "x^2 - 2*x");
    CHECK(var("A", -3).pretty() == "A^-3");
}

TEST_CASE("substitution and evaluation") {
    const SparsePoly x = var("x"), y = var("y");
    const SparsePoly t = (x - SparsePoly(1)) * (y - SparsePoly(1));
    CHECK(t.substitute("y", SparsePoly(2)) == x - SparsePoly(1));
    CHECK(t.substitute("x", var("zeta")) == (var("zeta") - SparsePoly(1)) * (y - SparsePoly(1)));
    // shifting y by one
    const SparsePoly shifted = t.substitute("y", y + SparsePoly(1));
    CHECK(shifted == (x - SparsePoly(1)) * y);
    CHECK(t.eval({{"x", BigInt(5)}, {"y", BigInt(3)}}) == 8);
    CHECK_THROWS_AS(var("A", -1).eval({{"A", BigInt(2)}}), input_error);
}

TEST_CASE("json round trip") {
    const SparsePoly p = SparsePoly(3) * var("zeta") + SparsePoly(3) +
                         var("zeta").pow(4) * SparsePoly(BigInt("123456789012345678901234567890"));
    const SparsePoly q = SparsePoly::from_json(p.to_json());
    CHECK(p == q);

    const SparsePoly laurent = var("A", -3) - var("A", 5);
    CHECK(SparsePoly::from_json(laurent.to_json()) == laurent);
}

TEST_CASE("big integer coefficients stay exact") {
    SparsePoly p(1);
    const SparsePoly three(3);
    for (int i = 0; i < 50; ++i) p *= three;
    CHECK(p.constant_term() == BigInt("717897987691852588770249"));
}
