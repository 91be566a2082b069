#include <doctest.h>

#include "forkalg/quotient.hpp"

using namespace forkalg;

TEST_CASE("quotient ring dimensions") {
    CHECK(QuotientRing(BSequence({1, 1, 1})).basis().size() == 1);
    CHECK(QuotientRing(BSequence({1, 1, 1})).basis()[0].is_one());
    CHECK(QuotientRing(BSequence({3, 2, 1})).basis().size() == 6);
    QuotientRing big(BSequence({4, 3, 3, 2, 2, 2, 1, 1}));
    CHECK(big.dimension() == 288);
    CHECK(big.basis().size() == 288);
}

TEST_CASE("normal forms against the generators") {
    QuotientRing all_ones(BSequence({1, 1}));
    CHECK(all_ones.normal_form(IntPolynomial::variable(1, 2)).is_zero());

    QuotientRing q21(BSequence({2, 1}));
    CHECK(q21.normal_form(IntPolynomial::variable(2, 2)) ==
          -IntPolynomial::variable(1, 2));

    // h_a(x_1..x_i) dies once a reaches b_i
    BSequence b({3, 2, 2, 1});
    QuotientRing q(b);
    for (int i = 1; i <= 4; ++i)
        for (int a = b.at(i); a <= b.at(i) + 3; ++a)
            CHECK(q.normal_form(complete_symmetric_initial(a, i, 4)).is_zero());

    // idempotence of reduction
    IntPolynomial p = IntPolynomial::parse("x4^3*x2 - 2*x1*x3 + x2^2", 4);
    CHECK(q.normal_form(q.normal_form(p)) == q.normal_form(p));
}

TEST_CASE("sequence classes") {
    CHECK(BSequence({4, 3, 3, 2, 2, 2, 1, 1}).in_b_prime());
    CHECK(BSequence({4, 3, 3, 2, 2, 2, 1, 1}).in_b(4));
    CHECK_FALSE(BSequence({3, 1}).in_b_prime());
    CHECK_FALSE(BSequence({2, 2}).in_b(1));       // last entry must be 1
    CHECK_FALSE(BSequence({3, 2, 1}).in_b(1));    // first entry exceeds k+1
    // general positive sequences are still accepted by the ring
    CHECK_FALSE(BSequence({1, 2, 1}).in_b_prime());
    CHECK(QuotientRing(BSequence({1, 2, 1})).dimension() == 2);
    CHECK_THROWS_AS(QuotientRing(BSequence({1, 0})), std::invalid_argument);
}

TEST_CASE("hom bases") {
    BSequence b({2, 1});
    HomBasis hb = hom_basis(b, b);
    REQUIRE(hb.monomials.size() == 2);
    CHECK(hb.monomials[0].is_one());
    CHECK(hb.monomials[1] == Monomial::var(1, 2));

    // counts multiply across slots
    BSequence b1({3, 2, 2, 1}), b2({3, 3, 2, 1});
    HomBasis hb2 = hom_basis(b1, b2);
    Int expect = 1;
    for (int i = 1; i <= 4; ++i) expect *= b2.at(i) - std::max(b2.at(i) - b1.at(i), 0);
    CHECK(Int(static_cast<long>(hb2.monomials.size())) == expect);
    for (const Monomial& m : hb2.monomials) CHECK(hb2.contains(m));
}

TEST_CASE("hom duality") {
    BSequence b({3, 2, 2, 1}), b2({3, 3, 2, 1});
    HomBasis fwd = hom_basis(b, b2), back = hom_basis(b2, b);
    for (const Monomial& m : fwd.monomials) {
        Monomial d = theta_dual(m, b, b2);
        CHECK(back.contains(d));
        CHECK(theta_dual(d, b2, b) == m);
    }
    // graded symmetry with shift 2(sum b2 - sum b)
    CHECK(fwd.graded_dim() == back.graded_dim().shifted(2));
}
