#include "twisted/polynomial.hpp"

#include <climits>
#include <stdexcept>

#include "doctest.h"

using twisted::IntPolynomial;

TEST_CASE("canonical form") {
    CHECK(IntPolynomial{}.is_zero());
    CHECK(IntPolynomial{0, 0}.is_zero());
    CHECK(IntPolynomial{}.degree() == -1);
    CHECK(IntPolynomial{5}.degree() == 0);
    CHECK((IntPolynomial{1, 2, 0}) == (IntPolynomial{1, 2}));
    CHECK(IntPolynomial::q().degree() == 1);
    CHECK(IntPolynomial::monomial(3, 2).coeff(2) == 3);
    CHECK(IntPolynomial::monomial(3, 2).coeff(1) == 0);
}

TEST_CASE("ring operations") {
    IntPolynomial qm1{-1, 1};
    CHECK(qm1 * qm1 == (IntPolynomial{1, -2, 1}));
    CHECK(qm1 + IntPolynomial{1} == IntPolynomial::q());
    CHECK(qm1 - qm1 == IntPolynomial{});
    CHECK((-qm1) == (IntPolynomial{1, -1}));
    CHECK(qm1.scaled(-2) == (IntPolynomial{2, -2}));
    CHECK(qm1.times_q_power(2) == (IntPolynomial{0, 0, -1, 1}));
    CHECK((IntPolynomial{} * qm1).is_zero());

    SUBCASE("distributivity spot checks") {
        IntPolynomial a{3, 0, 1}, b{-2, 5}, c{7};
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("evaluations") {
    IntPolynomial p{0, -1, 1};  // q^2 - q
    CHECK(p.at_one() == 0);
    CHECK(p.derivative_at_one() == 1);
    CHECK(p.constant_term() == 0);
    CHECK(IntPolynomial{4, 5}.at_one() == 9);
    CHECK(IntPolynomial{}.at_one() == 0);
}

TEST_CASE("reciprocal transform") {
    IntPolynomial qm1{-1, 1};
    CHECK(qm1.reciprocal(1) == (IntPolynomial{1, -1}));
    CHECK(qm1.reciprocal(2) == (IntPolynomial{0, 1, -1}));
    CHECK((IntPolynomial{1}).reciprocal(0) == (IntPolynomial{1}));
    CHECK(IntPolynomial{}.reciprocal(3).is_zero());
    CHECK_THROWS_AS((IntPolynomial{0, 0, 1}).reciprocal(1), std::invalid_argument);

    SUBCASE("involution on symmetric degree") {
        IntPolynomial p{2, -3, 0, 7};
        CHECK(p.reciprocal(5).reciprocal(5) == p);
    }
}

TEST_CASE("text form") {
    CHECK(IntPolynomial{}.to_string() == "0");
    CHECK(IntPolynomial{1}.to_string() == "1");
    CHECK(IntPolynomial{-1}.to_string() == "-1");
    CHECK((IntPolynomial{0, -1, 1}).to_string() == "q^2 - q");
    CHECK((IntPolynomial{1, 1}).to_string() == "q + 1");
    CHECK((IntPolynomial{3, 0, -2}).to_string() == "-2q^2 + 3");
    CHECK((IntPolynomial{0, 1}).to_string() == "q");
    CHECK((IntPolynomial{-1, 2, 0, 1}).to_string() == "q^3 + 2q - 1");
}

TEST_CASE("sparse map") {
    auto m = (IntPolynomial{0, -1, 0, 4}).sparse();
    REQUIRE(m.size() == 2);
    CHECK(m.at(1) == -1);
    CHECK(m.at(3) == 4);
}

TEST_CASE("overflow is loud") {
    IntPolynomial big{LLONG_MAX};
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_THROWS_AS(big.scaled(2), std::overflow_error);
    CHECK_THROWS_AS(big * (IntPolynomial{2}), std::overflow_error);
    CHECK_THROWS_AS(-(IntPolynomial{LLONG_MIN}), std::overflow_error);
    CHECK_THROWS_AS((IntPolynomial{LLONG_MIN, -1}).at_one(), std::overflow_error);
}
