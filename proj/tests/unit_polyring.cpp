#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forkalg/polyring.hpp"

using namespace forkalg;

namespace {

IntPolynomial x(int i, int n) { return IntPolynomial::variable(i, n); }

}  // namespace

TEST_CASE("addition basics") {
    const int n = 2;
    CHECK((x(1, n) + (-x(1, n))).is_zero());
    CHECK((x(1, n) + x(2, n)).str() == "x1 + x2");
    IntPolynomial h2 = x(1, n) * x(1, n) + x(1, n) * x(2, n) + x(2, n) * x(2, n);
    CHECK(h2 == complete_symmetric(2, {1, 2}, n));
}

TEST_CASE("multiplication basics") {
    const int n = 2;
    IntPolynomial p = IntPolynomial::parse("3*x1^2*x2 - x2 + 5", n);
    CHECK(IntPolynomial(n, Int(1)) * p == p);
    CHECK(x(1, n) * x(1, n) == IntPolynomial::parse("x1^2", n));
    IntPolynomial square = (x(1, n) + x(2, n)) * (x(1, n) + x(2, n));
    CHECK(square == IntPolynomial::parse("x1^2 + 2*x1*x2 + x2^2", n));
}

TEST_CASE("complete symmetric polynomials") {
    CHECK(complete_symmetric(2, {1, 2}, 2) == IntPolynomial::parse("x1^2 + x1*x2 + x2^2", 2));
    CHECK(complete_symmetric(0, {1, 2, 3}, 3) == IntPolynomial(3, Int(1)));
    CHECK(complete_symmetric(0, {}, 3) == IntPolynomial(3, Int(1)));
    CHECK(complete_symmetric(3, {}, 3).is_zero());
    // h_j over a non-initial subset
    CHECK(complete_symmetric(1, {2, 3}, 3) == IntPolynomial::parse("x2 + x3", 3));
}

TEST_CASE("the monomial order ranks the top variable first") {
    // leading term of h_2(x1,x2) must be x2^2 so that quotient reductions
    // eliminate powers of the last generator variable
    auto [m, c] = complete_symmetric(2, {1, 2}, 2).leading_term();
    CHECK(m == Monomial::var(2, 2, 2));
    CHECK(c == 1);
    auto [m3, c3] = complete_symmetric_initial(3, 3, 4).leading_term();
    CHECK(m3 == Monomial::var(3, 4, 3));
}

TEST_CASE("divided difference operator") {
    const int n = 3;
    CHECK(demazure(1, x(1, n)) == IntPolynomial(n, Int(1)));
    // vanishes on symmetric input
    IntPolynomial sym = x(1, n) * x(2, n) + x(1, n) + x(2, n);
    CHECK(demazure(1, sym).is_zero());
    // moves a complete symmetric polynomial one variable up
    for (int j = 1; j <= 6; ++j)
        for (int k = 1; k < n; ++k)
            CHECK(demazure(k, complete_symmetric_initial(j, k, n)) ==
                  complete_symmetric_initial(j - 1, k + 1, n));
}

TEST_CASE("invariant projection operator") {
    const int n = 2;
    CHECK(p_operator(1, x(1, n)).is_zero());
    IntPolynomial sym = x(1, n) * x(2, n) - x(1, n) - x(2, n);
    CHECK(p_operator(1, sym) == sym);
    IntPolynomial f = IntPolynomial::parse("x1^3 - 2*x1*x2 + x2", n);
    IntPolynomial pi = p_operator(1, f);
    IntPolynomial di = demazure(1, f);
    CHECK(pi.apply_si(1) == pi);
    CHECK(di.apply_si(1) == di);
    CHECK(f == pi + x(1, n) * di);
}

TEST_CASE("laurent arithmetic and the bar involution") {
    LaurentV v = LaurentV::monomial(1);
    LaurentV vinv = LaurentV::monomial(-1);
    CHECK(v.bar() == vinv);
    LaurentV a = LaurentV::monomial(3, Int(2)) - LaurentV::monomial(-1, Int(5));
    CHECK(a.bar().bar() == a);
    CHECK((v + vinv) * v == LaurentV::monomial(2) + LaurentV(Int(1)));
    CHECK((LaurentV::monomial(-2) + LaurentV(Int(2)) + LaurentV::monomial(2)).str() ==
          "v^-2+2+v^2");
    CHECK(LaurentV().str() == "0");
    CHECK(LaurentV(Int(1)).str() == "1");
    CHECK((LaurentV::monomial(1, Int(-3))).str() == "-3v");
    CHECK((LaurentV::monomial(-2) + LaurentV(Int(2)) + LaurentV::monomial(2)).is_palindromic());
    CHECK_FALSE((LaurentV(Int(1)) + LaurentV::monomial(2, Int(3))).is_palindromic());
    CHECK(quantum_factorial_zero(2) == LaurentV(Int(1)) + LaurentV::monomial(2));
}

TEST_CASE("polynomial text round trip") {
    const int n = 4;
    for (const char* text : {"3*x1^2*x2 - x4", "1", "-x1 + x2 - 7", "x1*x2*x3*x4", "0 + x1"}) {
        IntPolynomial p = IntPolynomial::parse(text, n);
        CHECK(IntPolynomial::parse(p.str(), n) == p);
    }
    CHECK(IntPolynomial::parse("3*x1^2*x2 - x4", n).str() == "3*x1^2*x2 - x4");
    CHECK_THROWS_AS(IntPolynomial::parse("x5", 4), std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial::parse("", 4), std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial::parse("x1 +", 4), std::invalid_argument);
}

TEST_CASE("mismatched variable counts are rejected") {
    CHECK_THROWS_AS(IntPolynomial(2, Int(1)) + IntPolynomial(3, Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(demazure(3, IntPolynomial(3, Int(1))), std::invalid_argument);
}
