#ifndef QACS_RATIONAL_HPP
#define QACS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "qacs/errors.hpp"

namespace qacs {

using Integer = mpz_class;

/* Exact rational scalar backed by GMP. The value is kept canonically
 * reduced at all times (gcd(|num|, den) = 1, den > 0), so equality of
 * values is equality of representations. */
class Rational {
  public:
	Rational() : v_(0) {}
	Rational(int n) : v_(n) {}
	Rational(long n) : v_(static_cast<signed long>(n)) {}
	Rational(const Integer& n) : v_(n) {}

	Rational(const Integer& num, const Integer& den) : v_(num, den)
	{
		if (den == 0) throw DivisionByZero("rational with zero denominator");
		v_.canonicalize();
	}

	Rational(long num, long den)
		: Rational(Integer(static_cast<signed long>(num)),
				   Integer(static_cast<signed long>(den)))
	{
	}

	/* Accepts "p/q" and plain integer literals, base 10. */
	static Rational parse(const std::string& text)
	{
		mpq_class v;
		if (text.empty() || v.set_str(text, 10) != 0)
			throw std::invalid_argument("not a rational literal: '" + text + "'");
		if (v.get_den() == 0)
			throw DivisionByZero("rational literal with zero denominator: '" + text + "'");
		v.canonicalize();
		Rational r;
		r.v_ = std::move(v);
		return r;
	}

	Integer numerator() const { return v_.get_num(); }
	Integer denominator() const { return v_.get_den(); }

	bool is_zero() const { return sgn(v_) == 0; }
	bool is_one() const { return v_ == 1; }
	bool is_integer() const { return v_.get_den() == 1; }
	int sign() const { return sgn(v_); }

	Rational operator-() const { return Rational(mpq_class(-v_)); }

	Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
	Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
	Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

	Rational& operator/=(const Rational& o)
	{
		if (o.is_zero()) throw DivisionByZero("rational division by zero");
		v_ /= o.v_;
		return *this;
	}

	friend Rational operator+(Rational a, const Rational& b) { return a += b; }
	friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

	friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
	friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
	friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
	friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
	friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
	friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

	Rational inverse() const
	{
		if (is_zero()) throw DivisionByZero("inverse of zero");
		return Rational(v_.get_den(), v_.get_num());
	}

	Rational pow(long e) const
	{
		if (e < 0) return inverse().pow(-e);
		mpq_class out;
		mpz_pow_ui(out.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
		mpz_pow_ui(out.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
		return Rational(mpq_class(std::move(out)));
	}

	/* "p/q", or just "p" for integers. */
	std::string str() const { return v_.get_str(); }

  private:
	explicit Rational(mpq_class v) : v_(std::move(v)) {}

	mpq_class v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

/* Coefficient-ring handle for series over Q. Stateless; all context-free. */
class RationalRing {
  public:
	using Element = Rational;

	Element zero() const { return Rational(); }
	Element one() const { return Rational(1); }
	Element from_int(long n) const { return Rational(n); }
	Element from_rational(const Rational& r) const { return r; }

	bool is_zero(const Element& a) const { return a.is_zero(); }
	bool is_one(const Element& a) const { return a.is_one(); }

	Element invert(const Element& a) const { return a.inverse(); }

	std::string to_string(const Element& a) const { return a.str(); }
	Element parse(const std::string& text) const { return Rational::parse(text); }

	friend bool operator==(const RationalRing&, const RationalRing&) { return true; }
	friend bool operator!=(const RationalRing&, const RationalRing&) { return false; }
};

} // namespace qacs

#endif
