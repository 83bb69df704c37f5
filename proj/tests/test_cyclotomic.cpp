#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "qacs/cyclotomic.hpp"
#include "support/oracle.hpp"

using qacs::CyclotomicField;
using qacs::CyclotomicNumber;
using qacs::CyclotomicPolynomial;
using qacs::Rational;

namespace {

// independent exact polynomial product (no truncation)
std::vector<Rational> poly_product(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
	std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
	return out;
}

CyclotomicNumber random_element(const CyclotomicField& field, std::mt19937_64& rng)
{
	std::vector<Rational> residue;
	for (int i = 0; i < field.degree(); ++i)
		residue.push_back(Rational::parse(oracle::random_rational(rng).get_str()));
	return field.from_residue(std::move(residue));
}

} // namespace

TEST_CASE("small cyclotomic polynomials", "[cyclotomic]")
{
	const CyclotomicPolynomial phi1 = qacs::cyclotomic_polynomial(1);
	CHECK(phi1.coefficients == std::vector<Rational>{Rational(-1), Rational(1)});

	const CyclotomicPolynomial phi2 = qacs::cyclotomic_polynomial(2);
	CHECK(phi2.coefficients == std::vector<Rational>{Rational(1), Rational(1)});

	// prime p: 1 + x + ... + x^{p-1}
	for (int p : {3, 5, 7, 11, 13}) {
		const CyclotomicPolynomial phi = qacs::cyclotomic_polynomial(p);
		REQUIRE(phi.degree() == p - 1);
		for (const Rational& c : phi.coefficients) CHECK(c == Rational(1));
	}

	const CyclotomicPolynomial phi12 = qacs::cyclotomic_polynomial(12);
	CHECK(phi12.coefficients == std::vector<Rational>{Rational(1), Rational(0), Rational(-1),
													  Rational(0), Rational(1)});

	CHECK_THROWS_AS(qacs::cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("divisor product of cyclotomic polynomials is x^N - 1", "[cyclotomic]")
{
	for (int n = 1; n <= 30; ++n) {
		std::vector<Rational> prod{Rational(1)};
		for (int d = 1; d <= n; ++d)
			if (n % d == 0) prod = poly_product(prod, qacs::cyclotomic_polynomial(d).coefficients);
		REQUIRE(prod.size() == static_cast<std::size_t>(n) + 1);
		CHECK(prod.front() == Rational(-1));
		CHECK(prod.back() == Rational(1));
		for (std::size_t i = 1; i < prod.size() - 1; ++i) CHECK(prod[i] == Rational(0));
	}
}

TEST_CASE("zeta powers", "[cyclotomic]")
{
	CHECK(qacs::zeta_power(2, 1) == CyclotomicField(2).from_int(-1));
	CHECK(qacs::zeta_power(4, 2) == CyclotomicField(4).from_int(-1));

	const CyclotomicNumber z3 = qacs::zeta_power(3, 1);
	CHECK(z3 * z3 * z3 == CyclotomicField(3).one());

	for (int n = 1; n <= 30; ++n) {
		const CyclotomicField field(n);
		for (int k = 0; k < n; ++k) {
			// zeta^k raised to the N-th power is 1
			CyclotomicNumber pow = field.one();
			for (int rep = 0; rep < n; ++rep) pow *= field.zeta(k);
			CHECK(pow == field.one());
			// inverse power pairing
			CHECK(field.zeta(k) * field.zeta(-k) == field.one());
		}
	}
}

TEST_CASE("root-of-unity orthogonality", "[cyclotomic]")
{
	// sum_{k=0}^{N-1} zeta^{jk} is N when N | j and 0 otherwise
	for (int n = 1; n <= 30; ++n) {
		const CyclotomicField field(n);
		for (int j = 0; j <= 2 * n; ++j) {
			CyclotomicNumber acc = field.zero();
			for (int k = 0; k < n; ++k) acc += field.zeta(static_cast<long>(j) * k);
			CHECK(acc == field.from_int(j % n == 0 ? n : 0));
		}
	}
}

TEST_CASE("cyclotomic inversion", "[cyclotomic]")
{
	const CyclotomicField f3(3);
	CHECK(invert(f3.from_int(2)) == f3.from_rational(Rational(1, 2)));

	// 1 - zeta_2 = 2
	const CyclotomicField f2(2);
	const CyclotomicNumber two = f2.one() - f2.zeta(1);
	CHECK(two == f2.from_int(2));
	CHECK(invert(two) == f2.from_rational(Rational(1, 2)));

	const CyclotomicNumber v = f3.one() - f3.zeta(1);
	CHECK(invert(v) * v == f3.one());

	CHECK_THROWS_AS(invert(f3.zero()), qacs::DivisionByZero);

	std::mt19937_64 rng(17);
	for (int n = 2; n <= 12; ++n) {
		const CyclotomicField field(n);
		int checked = 0;
		while (checked < 200) {
			const CyclotomicNumber a = random_element(field, rng);
			if (a.is_zero()) continue;
			const CyclotomicNumber inv = invert(a);
			CHECK(a * inv == field.one());
			CHECK(inv * a == field.one());
			++checked;
		}
	}
}

TEST_CASE("cyclotomic ring axioms on random triples", "[cyclotomic]")
{
	std::mt19937_64 rng(23);
	for (int n : {2, 3, 4, 5, 6, 8, 12}) {
		const CyclotomicField field(n);
		for (int i = 0; i < 30; ++i) {
			const CyclotomicNumber a = random_element(field, rng);
			const CyclotomicNumber b = random_element(field, rng);
			const CyclotomicNumber c = random_element(field, rng);
			CHECK((a + b) + c == a + (b + c));
			CHECK((a * b) * c == a * (b * c));
			CHECK(a + b == b + a);
			CHECK(a * b == b * a);
			CHECK(a * (b + c) == a * b + a * c);
			CHECK(a + field.zero() == a);
			CHECK(a * field.one() == a);
			CHECK(a - a == field.zero());
		}
	}
}

TEST_CASE("rational_part projects the rational subfield", "[cyclotomic]")
{
	const CyclotomicField field(5);
	CHECK(rational_part(field.from_rational(Rational(7, 3))) == Rational(7, 3));
	CHECK_THROWS_AS(rational_part(field.zeta(1)), qacs::NonRationalValue);

	// the embedding of r has residue (r, 0, ..., 0)
	const CyclotomicNumber e = field.from_rational(Rational(-2, 9));
	REQUIRE(e.residue().size() == 4);
	CHECK(e.residue()[0] == Rational(-2, 9));
	for (std::size_t i = 1; i < 4; ++i) CHECK(e.residue()[i] == Rational(0));
}

TEST_CASE("values from different fields do not mix", "[cyclotomic]")
{
	const CyclotomicField f3(3);
	const CyclotomicField f4(4);
	CHECK_THROWS_AS(f3.one() + f4.one(), std::invalid_argument);
	CHECK_THROWS_AS(f3.one() == f4.one(), std::invalid_argument);
	CHECK_THROWS_AS(f3.from_residue({Rational(1)}), std::invalid_argument);
}
