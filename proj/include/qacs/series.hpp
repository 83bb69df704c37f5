#ifndef QACS_SERIES_HPP
#define QACS_SERIES_HPP

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "qacs/errors.hpp"
#include "qacs/rational.hpp"

namespace qacs {

template <typename R>
concept CoefficientRing = requires(const R& ring, const typename R::Element& a,
								   const typename R::Element& b) {
	typename R::Element;
	{ ring.zero() } -> std::convertible_to<typename R::Element>;
	{ ring.one() } -> std::convertible_to<typename R::Element>;
	{ ring.is_zero(a) } -> std::convertible_to<bool>;
	{ ring.invert(a) } -> std::convertible_to<typename R::Element>;
	{ ring.to_string(a) } -> std::convertible_to<std::string>;
	{ a + b } -> std::convertible_to<typename R::Element>;
	{ a - b } -> std::convertible_to<typename R::Element>;
	{ a * b } -> std::convertible_to<typename R::Element>;
	{ -a } -> std::convertible_to<typename R::Element>;
	{ a == b } -> std::convertible_to<bool>;
	{ ring == ring } -> std::convertible_to<bool>;
};

/* A dense power series in q known modulo q^{M+1}; coefficient m holds the
 * coefficient of q^m, so there are always order()+1 coefficients. Binary
 * operations on series of different orders truncate to the smaller order.
 * All operations are pure; values may be shared freely between threads. */
template <CoefficientRing R>
class TruncatedSeries {
  public:
	using Ring = R;
	using Element = typename R::Element;

	TruncatedSeries(R ring, int order)
		: ring_(std::move(ring)),
		  coeff_(static_cast<std::size_t>(check_order(order)) + 1, ring_.zero())
	{
	}

	TruncatedSeries(R ring, int order, std::vector<Element> coefficients)
		: ring_(std::move(ring)), coeff_(std::move(coefficients))
	{
		if (coeff_.size() != static_cast<std::size_t>(check_order(order)) + 1)
			throw std::invalid_argument("series coefficient list must have order+1 entries");
	}

	static TruncatedSeries constant(R ring, Element value, int order)
	{
		TruncatedSeries out(std::move(ring), order);
		out.coeff_[0] = std::move(value);
		return out;
	}

	static TruncatedSeries one(R ring, int order)
	{
		Element v = ring.one();
		return constant(std::move(ring), std::move(v), order);
	}

	/* The monomial q^e (zero series if e exceeds the order). */
	static TruncatedSeries monomial(R ring, int e, int order)
	{
		TruncatedSeries out(std::move(ring), order);
		if (e >= 0 && e <= order) out.coeff_[static_cast<std::size_t>(e)] = out.ring_.one();
		return out;
	}

	int order() const { return static_cast<int>(coeff_.size()) - 1; }
	const R& ring() const { return ring_; }

	const Element& operator[](int m) const { return coeff_.at(static_cast<std::size_t>(m)); }
	Element& coeff(int m) { return coeff_.at(static_cast<std::size_t>(m)); }

	bool is_zero() const
	{
		for (const Element& c : coeff_)
			if (!ring_.is_zero(c)) return false;
		return true;
	}

	TruncatedSeries operator-() const
	{
		TruncatedSeries out(*this);
		for (Element& c : out.coeff_) c = -c;
		return out;
	}

	friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
	{
		check_compatible(a, b);
		TruncatedSeries out(a.ring_, std::min(a.order(), b.order()));
		for (int m = 0; m <= out.order(); ++m)
			out.coeff_[static_cast<std::size_t>(m)] = a[m] + b[m];
		return out;
	}

	friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
	{
		check_compatible(a, b);
		TruncatedSeries out(a.ring_, std::min(a.order(), b.order()));
		for (int m = 0; m <= out.order(); ++m)
			out.coeff_[static_cast<std::size_t>(m)] = a[m] - b[m];
		return out;
	}

	/* Cauchy product, truncated to the smaller order. */
	friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
	{
		check_compatible(a, b);
		TruncatedSeries out(a.ring_, std::min(a.order(), b.order()));
		const int n = out.order();
		for (int i = 0; i <= n; ++i) {
			if (a.ring_.is_zero(a[i])) continue;
			for (int j = 0; j + i <= n; ++j) {
				if (b.ring_.is_zero(b[j])) continue;
				out.coeff_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
			}
		}
		return out;
	}

	friend TruncatedSeries operator*(const Element& s, const TruncatedSeries& a)
	{
		TruncatedSeries out(a);
		for (Element& c : out.coeff_) c = s * c;
		return out;
	}

	friend TruncatedSeries operator*(const TruncatedSeries& a, const Element& s) { return s * a; }

	TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
	TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
	TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

	/* Strict equality: same ring, same order, identical coefficients. */
	friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
	{
		if (a.ring_ != b.ring_ || a.order() != b.order()) return false;
		for (int m = 0; m <= a.order(); ++m)
			if (!(a[m] == b[m])) return false;
		return true;
	}
	friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

	/* In-place multiply by the binomial (1 - s q^e), e >= 0. O(M) and the
	 * workhorse behind every Pochhammer product. */
	void mul_binomial(int e, const Element& s)
	{
		if (e < 0) throw std::invalid_argument("mul_binomial: negative exponent");
		if (ring_.is_zero(s)) return;
		const int n = order();
		if (e == 0) {
			const Element f = ring_.one() - s;
			for (Element& c : coeff_) c = f * c;
			return;
		}
		for (int m = n; m >= e; --m)
			coeff_[static_cast<std::size_t>(m)] =
				coeff_[static_cast<std::size_t>(m)] - s * coeff_[static_cast<std::size_t>(m - e)];
	}

	/* In-place multiply by 1/(1 - s q^e); the exact inverse of
	 * mul_binomial. For e = 0 this is scalar division by 1 - s. */
	void div_binomial(int e, const Element& s)
	{
		if (e < 0) throw std::invalid_argument("div_binomial: negative exponent");
		if (ring_.is_zero(s)) return;
		const int n = order();
		if (e == 0) {
			const Element f = ring_.invert(ring_.one() - s);
			for (Element& c : coeff_) c = f * c;
			return;
		}
		for (int m = e; m <= n; ++m)
			coeff_[static_cast<std::size_t>(m)] =
				coeff_[static_cast<std::size_t>(m)] + s * coeff_[static_cast<std::size_t>(m - e)];
	}

  private:
	static int check_order(int order)
	{
		if (order < 0) throw std::invalid_argument("series order must be >= 0");
		return order;
	}

	static void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b)
	{
		if (a.ring_ != b.ring_)
			throw std::invalid_argument("series over different coefficient rings");
	}

	R ring_;
	std::vector<Element> coeff_;
};

using RationalSeries = TruncatedSeries<RationalRing>;

template <CoefficientRing R>
TruncatedSeries<R> mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
	return a * b;
}

/* Multiplicative inverse of a series whose constant coefficient is a unit,
 * by the usual recursive convolution: b_0 = a_0^{-1} and
 * b_m = -a_0^{-1} sum_{k=1..m} a_k b_{m-k}. */
template <CoefficientRing R>
TruncatedSeries<R> invert_unit(const TruncatedSeries<R>& a)
{
	const R& ring = a.ring();
	if (ring.is_zero(a[0]))
		throw NonUnitConstant("invert_unit: constant coefficient is zero");
	typename R::Element lead;
	try {
		lead = ring.invert(a[0]);
	} catch (const DivisionByZero&) {
		throw NonUnitConstant("invert_unit: constant coefficient is not invertible");
	}
	TruncatedSeries<R> out(ring, a.order());
	out.coeff(0) = lead;
	for (int m = 1; m <= a.order(); ++m) {
		typename R::Element acc = ring.zero();
		for (int k = 1; k <= m; ++k) {
			if (ring.is_zero(a[k])) continue;
			acc = acc + a[k] * out[m - k];
		}
		out.coeff(m) = -(lead * acc);
	}
	return out;
}

/* a(q^t) at the same order: coefficient t*m picks up a's coefficient m. */
template <CoefficientRing R>
TruncatedSeries<R> substitute_power(const TruncatedSeries<R>& a, int t)
{
	if (t < 1) throw std::invalid_argument("substitute_power: exponent must be >= 1");
	TruncatedSeries<R> out(a.ring(), a.order());
	for (int m = 0; static_cast<long>(t) * m <= a.order(); ++m)
		out.coeff(t * m) = a[m];
	return out;
}

template <CoefficientRing R>
TruncatedSeries<R> truncate(const TruncatedSeries<R>& a, int order)
{
	if (order > a.order())
		throw std::invalid_argument("truncate cannot raise the order");
	TruncatedSeries<R> out(a.ring(), order);
	for (int m = 0; m <= order; ++m) out.coeff(m) = a[m];
	return out;
}

/* q^k * a, keeping the order (the dropped top coefficients of a are not
 * needed to know the product modulo q^{M+1}). */
template <CoefficientRing R>
TruncatedSeries<R> shift_up(const TruncatedSeries<R>& a, int k)
{
	if (k < 0) throw std::invalid_argument("shift_up: negative shift");
	TruncatedSeries<R> out(a.ring(), a.order());
	for (int m = k; m <= a.order(); ++m) out.coeff(m) = a[m - k];
	return out;
}

/* a / q^k for a series divisible by q^k; the result honestly loses k
 * orders of knowledge. */
template <CoefficientRing R>
TruncatedSeries<R> shift_down(const TruncatedSeries<R>& a, int k)
{
	if (k < 0 || k > a.order()) throw std::invalid_argument("shift_down: bad shift");
	for (int m = 0; m < k; ++m)
		if (!a.ring().is_zero(a[m]))
			throw std::invalid_argument("shift_down: series is not divisible by q^k");
	TruncatedSeries<R> out(a.ring(), a.order() - k);
	for (int m = k; m <= a.order(); ++m) out.coeff(m - k) = a[m];
	return out;
}

/* Smallest power whose coefficients differ, comparing up to the smaller
 * of the two orders. */
template <CoefficientRing R>
std::optional<int> first_mismatch(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
	if (a.ring() != b.ring())
		throw std::invalid_argument("first_mismatch: series over different rings");
	const int n = std::min(a.order(), b.order());
	for (int m = 0; m <= n; ++m)
		if (!(a[m] == b[m])) return m;
	return std::nullopt;
}

template <CoefficientRing R>
bool agree(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
	return !first_mismatch(a, b).has_value();
}

/* (a; q^stride)_n = prod_{j=0}^{n-1} (1 - a q^{stride*j}). Factors whose
 * exponent exceeds the order are congruent to 1 and are skipped. */
template <CoefficientRing R>
TruncatedSeries<R> pochhammer_finite(const R& ring, const typename R::Element& a, int n, int order,
									 int stride = 1)
{
	if (n < 0) throw std::invalid_argument("pochhammer_finite: negative length");
	if (stride < 1) throw std::invalid_argument("pochhammer_finite: stride must be >= 1");
	TruncatedSeries<R> out = TruncatedSeries<R>::one(ring, order);
	for (int j = 0; j < n; ++j) {
		const long e = static_cast<long>(stride) * j;
		if (e > order) break;
		out.mul_binomial(static_cast<int>(e), a);
	}
	return out;
}

/* (a; q^stride)_infinity. Every factor with stride*j > order is
 * 1 + O(q^{order+1}), so the product stops there; this replaces the
 * analytic convergence condition on |a| with a formal one. */
template <CoefficientRing R>
TruncatedSeries<R> pochhammer_infinite(const R& ring, const typename R::Element& a, int order,
									   int stride = 1)
{
	if (stride < 1) throw std::invalid_argument("pochhammer_infinite: stride must be >= 1");
	TruncatedSeries<R> out = TruncatedSeries<R>::one(ring, order);
	for (long j = 0; stride * j <= order; ++j)
		out.mul_binomial(static_cast<int>(stride * j), a);
	return out;
}

/* (a(q); q^stride)_infinity with a series argument, e.g. (q; q^2)_inf. */
template <CoefficientRing R>
TruncatedSeries<R> pochhammer_infinite(const TruncatedSeries<R>& a, int order, int stride = 1)
{
	if (stride < 1) throw std::invalid_argument("pochhammer_infinite: stride must be >= 1");
	const R& ring = a.ring();
	TruncatedSeries<R> out = TruncatedSeries<R>::one(ring, order);
	const TruncatedSeries<R> arg = a.order() == order ? a : truncate(a, order);
	for (long j = 0; stride * j <= order; ++j)
		out -= shift_up(arg * out, static_cast<int>(stride * j));
	return out;
}

/* (q;q)_n - the ubiquitous special case. */
template <CoefficientRing R>
TruncatedSeries<R> q_factorial(const R& ring, int n, int order)
{
	TruncatedSeries<R> out = TruncatedSeries<R>::one(ring, order);
	for (int j = 1; j <= n && j <= order; ++j) out.mul_binomial(j, ring.one());
	return out;
}

/* (q;q)_infinity. */
template <CoefficientRing R>
TruncatedSeries<R> q_factorial_infinite(const R& ring, int order)
{
	return q_factorial(ring, order, order);
}

/* Euler sum  sum_{n>=0} x^n / (q;q)_n  for a constant x != 1.
 *
 * For n >= M every 1/(q;q)_n agrees with 1/(q;q)_M modulo q^{M+1}, so the
 * tail collapses to the geometric value x^M/(1-x) times 1/(q;q)_M. With
 * that tail included the identity sum * (x;q)_inf = 1 holds exactly as a
 * truncated series for every constant x != 1, which is what the checks
 * demand; plain term-by-term truncation would leave an x-dependent defect
 * in every coefficient. */
template <CoefficientRing R>
TruncatedSeries<R> euler_sum(const R& ring, const typename R::Element& x, int order)
{
	using Element = typename R::Element;
	if (ring.is_zero(ring.one() - x))
		throw DivisionByZero("euler_sum: x = 1 makes the sum diverge ((1;q)_inf = 0)");
	TruncatedSeries<R> inv_qfac = TruncatedSeries<R>::one(ring, order); // 1/(q;q)_n
	TruncatedSeries<R> acc(ring, order);
	Element xpow = ring.one();
	for (int n = 0; n < order; ++n) {
		acc += xpow * inv_qfac;
		inv_qfac.div_binomial(n + 1, ring.one());
		xpow = xpow * x;
	}
	const Element tail = xpow * ring.invert(ring.one() - x);
	acc += tail * inv_qfac;
	return acc;
}

/* Euler sum for a series argument with zero constant term; x^n then has
 * valuation >= n and the sum terminates on its own. */
template <CoefficientRing R>
TruncatedSeries<R> euler_sum(const TruncatedSeries<R>& x, int order)
{
	const R& ring = x.ring();
	if (!ring.is_zero(x[0]))
		throw std::invalid_argument("euler_sum: series argument must have zero constant term");
	const TruncatedSeries<R> arg = x.order() == order ? x : truncate(x, order);
	TruncatedSeries<R> term = TruncatedSeries<R>::one(ring, order);
	TruncatedSeries<R> acc = term;
	for (int n = 1; n <= order; ++n) {
		term = term * arg;
		term.div_binomial(n, ring.one());
		acc += term;
	}
	return acc;
}

} // namespace qacs

#endif
