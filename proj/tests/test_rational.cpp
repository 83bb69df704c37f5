#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qacs/rational.hpp"
#include "support/oracle.hpp"

using qacs::Integer;
using qacs::Rational;

TEST_CASE("rationals are stored canonically reduced", "[rational]")
{
	CHECK(Rational(6, 4) == Rational(3, 2));
	CHECK(Rational(6, 4).numerator() == 3);
	CHECK(Rational(6, 4).denominator() == 2);
	CHECK(Rational(1, -2) == Rational(-1, 2));
	CHECK(Rational(1, -2).denominator() == 2);
	CHECK(Rational(0, 7) == Rational(0));
	CHECK(Rational(0, 7).denominator() == 1);
	CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), qacs::DivisionByZero);
}

TEST_CASE("rational arithmetic reproduces integer cross-multiplication", "[rational]")
{
	std::mt19937_64 rng(7);
	std::uniform_int_distribution<long> num(-30, 30);
	std::uniform_int_distribution<long> den(1, 30);
	for (int i = 0; i < 200; ++i) {
		const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
		CHECK(Rational(a, b) + Rational(c, d) == Rational(a * d + c * b, b * d));
		CHECK(Rational(a, b) * Rational(c, d) == Rational(a * c, b * d));
	}
}

TEST_CASE("rational ring axioms on random triples", "[rational]")
{
	std::mt19937_64 rng(11);
	for (int i = 0; i < 150; ++i) {
		const mpq_class xa = oracle::random_rational(rng);
		const mpq_class xb = oracle::random_rational(rng);
		const mpq_class xc = oracle::random_rational(rng);
		const Rational a = Rational::parse(xa.get_str());
		const Rational b = Rational::parse(xb.get_str());
		const Rational c = Rational::parse(xc.get_str());
		CHECK((a + b) + c == a + (b + c));
		CHECK((a * b) * c == a * (b * c));
		CHECK(a + b == b + a);
		CHECK(a * b == b * a);
		CHECK(a * (b + c) == a * b + a * c);
		CHECK(a + Rational(0) == a);
		CHECK(a * Rational(1) == a);
		CHECK(a + (-a) == Rational(0));
		if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
	}
}

TEST_CASE("rational parsing and formatting round-trip", "[rational]")
{
	CHECK(Rational::parse("3/4") == Rational(3, 4));
	CHECK(Rational::parse("-3/4") == Rational(-3, 4));
	CHECK(Rational::parse("12") == Rational(12));
	CHECK(Rational::parse("-6/4") == Rational(-3, 2));
	CHECK(Rational(3, 4).str() == "3/4");
	CHECK(Rational(-5).str() == "-5");
	CHECK(Rational(0).str() == "0");
	CHECK_THROWS_AS(Rational::parse("1/0"), qacs::DivisionByZero);
	CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
	CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);

	std::mt19937_64 rng(13);
	for (int i = 0; i < 100; ++i) {
		const mpq_class x = oracle::random_rational(rng);
		const Rational r = Rational::parse(x.get_str());
		CHECK(Rational::parse(r.str()) == r);
	}
}

TEST_CASE("rational division and powers", "[rational]")
{
	CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
	CHECK_THROWS_AS(Rational(1) / Rational(0), qacs::DivisionByZero);
	CHECK_THROWS_AS(Rational(0).inverse(), qacs::DivisionByZero);
	CHECK(Rational(-3, 5).pow(3) == Rational(-27, 125));
	CHECK(Rational(2).pow(-3) == Rational(1, 8));
	CHECK(Rational(7).pow(0) == Rational(1));
	CHECK(Rational(0).pow(4) == Rational(0));
	CHECK_THROWS_AS(Rational(0).pow(-1), qacs::DivisionByZero);
}
