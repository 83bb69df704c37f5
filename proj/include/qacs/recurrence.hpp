#ifndef QACS_RECURRENCE_HPP
#define QACS_RECURRENCE_HPP

#include <functional>
#include <variant>
#include <vector>

#include "qacs/errors.hpp"
#include "qacs/rational.hpp"
#include "qacs/series.hpp"

namespace qacs {

/* Driving sequences f(n) for the recursion
 *     a_n = f(n) + (1 - q^{n-1}) a_{n-1},   a_0 = 0.
 * The series driver covers drivers whose values are themselves series in
 * q (f(n) = q^n is the one that matters). */

struct PolynomialDriver {
	std::vector<Rational> coefficients; // f(n) = sum_k coefficients[k] n^k
};

struct ExponentialDriver {
	Rational base; // f(n) = base^n, base != 1
};

struct PeriodicDriver {
	std::vector<Rational> values; // f(1..N), repeated with period N
};

struct SeriesDriver {
	std::function<RationalSeries(int n, int order)> term;
};

using RecurrenceSpec = std::variant<PolynomialDriver, ExponentialDriver, PeriodicDriver, SeriesDriver>;

inline RecurrenceSpec polynomial_driver(std::vector<Rational> coefficients)
{
	return PolynomialDriver{std::move(coefficients)};
}

inline RecurrenceSpec exponential_driver(Rational base)
{
	if (base.is_one())
		throw UnsupportedDriver(
			"exponential driver with base 1 is the constant case: use the polynomial driver "
			"with coefficients (1)");
	return ExponentialDriver{std::move(base)};
}

inline RecurrenceSpec periodic_driver(std::vector<Rational> values)
{
	if (values.empty())
		throw std::invalid_argument("periodic driver needs a period of length >= 1");
	return PeriodicDriver{std::move(values)};
}

inline RecurrenceSpec series_driver(std::function<RationalSeries(int, int)> term)
{
	return SeriesDriver{std::move(term)};
}

/* f(n) as a scalar where the driver is scalar-valued. */
inline Rational driver_value(const RecurrenceSpec& spec, int n)
{
	if (const auto* p = std::get_if<PolynomialDriver>(&spec)) {
		Rational acc;
		const Rational nn(static_cast<long>(n));
		for (auto it = p->coefficients.rbegin(); it != p->coefficients.rend(); ++it)
			acc = acc * nn + *it;
		return acc;
	}
	if (const auto* e = std::get_if<ExponentialDriver>(&spec)) return e->base.pow(n);
	if (const auto* pr = std::get_if<PeriodicDriver>(&spec)) {
		const int len = static_cast<int>(pr->values.size());
		return pr->values[static_cast<std::size_t>((n - 1) % len)];
	}
	throw UnsupportedDriver("series drivers have no scalar values");
}

/* f(n) as a series; scalar drivers embed as constants. */
inline RationalSeries driver_series(const RecurrenceSpec& spec, int n, int order)
{
	if (const auto* s = std::get_if<SeriesDriver>(&spec)) {
		RationalSeries out = s->term(n, order);
		return out.order() == order ? out : truncate(out, order);
	}
	return RationalSeries::constant(RationalRing{}, driver_value(spec, n), order);
}

inline RecurrenceSpec as_series_driver(const RecurrenceSpec& spec)
{
	return series_driver([spec](int n, int order) { return driver_series(spec, n, order); });
}

/* alpha*f + gamma*g as a driver; the recursion is affine in the driver,
 * so limits combine the same way. */
inline RecurrenceSpec linear_combination_driver(const Rational& alpha, const RecurrenceSpec& f,
												const Rational& gamma, const RecurrenceSpec& g)
{
	return series_driver([alpha, f, gamma, g](int n, int order) {
		return alpha * driver_series(f, n, order) + gamma * driver_series(g, n, order);
	});
}

/* The n-th recursion iterate a_n, truncated at the given order. The
 * base_stride parameter runs the same recursion with the factor
 * (1 - q^{stride (n-1)}) instead, i.e. over the base q^stride. */
inline RationalSeries recurrence_iterate(const RecurrenceSpec& spec, int n, int order,
										 int base_stride = 1)
{
	if (n < 0) throw std::invalid_argument("recurrence_iterate: n must be >= 0");
	if (base_stride < 1) throw std::invalid_argument("recurrence_iterate: stride must be >= 1");
	RationalSeries a(RationalRing{}, order);
	for (int step = 1; step <= n; ++step) {
		/* a_0 = 0, so the degenerate (1 - q^0) = 0 factor at step 1 is a
		 * no-op; factors with exponent beyond the order are 1. */
		const long e = static_cast<long>(base_stride) * (step - 1);
		if (step > 1 && e <= order) a.mul_binomial(static_cast<int>(e), Rational(1));
		a += driver_series(spec, step, order);
	}
	return a;
}

/* The closed form (Q;Q)_{n-1} sum_{0<=j<=n-1} f(j+1)/(Q;Q)_j over the
 * base Q = q^stride; must agree with recurrence_iterate exactly. */
inline RationalSeries recurrence_closed_form(const RecurrenceSpec& spec, int n, int order,
											 int base_stride = 1)
{
	if (n < 1) throw std::invalid_argument("recurrence_closed_form: n must be >= 1");
	const RationalRing ring;
	RationalSeries inv_qfac = RationalSeries::one(ring, order); // 1/(Q;Q)_j
	RationalSeries acc(ring, order);
	for (int j = 0; j <= n - 1; ++j) {
		acc += driver_series(spec, j + 1, order) * inv_qfac;
		const long e = static_cast<long>(base_stride) * (j + 1);
		if (e <= order) inv_qfac.div_binomial(static_cast<int>(e), ring.one());
	}
	for (int j = 1; j <= n - 1; ++j) {
		const long e = static_cast<long>(base_stride) * j;
		if (e > order) break;
		acc.mul_binomial(static_cast<int>(e), ring.one());
	}
	return acc;
}

/* sum_{1<=l<=n} f(l). */
inline RationalSeries driver_partial_sum(const RecurrenceSpec& spec, int n, int order)
{
	RationalSeries acc(RationalRing{}, order);
	for (int l = 1; l <= n; ++l) acc += driver_series(spec, l, order);
	return acc;
}

/* beta_n = sum_{l<=n} f(l) - a_n, the n-th approximant of the limit. */
inline RationalSeries limit_approximant(const RecurrenceSpec& spec, int n, int order,
										int base_stride = 1)
{
	if (n < 0) throw std::invalid_argument("limit_approximant: n must be >= 0");
	if (base_stride < 1) throw std::invalid_argument("limit_approximant: stride must be >= 1");
	RationalSeries a(RationalRing{}, order);
	RationalSeries sum(RationalRing{}, order);
	for (int step = 1; step <= n; ++step) {
		const RationalSeries f = driver_series(spec, step, order);
		const long e = static_cast<long>(base_stride) * (step - 1);
		if (step > 1 && e <= order) a.mul_binomial(static_cast<int>(e), Rational(1));
		a += f;
		sum += f;
	}
	return sum - a;
}

/* The stabilized limit lim_n (sum_{l<=n} f(l) - a_n) as a truncated
 * series. Since beta_n - beta_{n-1} = q^{stride (n-1)} a_{n-1} has
 * q-valuation >= n-1, every coefficient up to q^M is frozen once
 * n >= M+2; beta_{M+2} therefore IS the limit modulo q^{M+1}. This is
 * the brute-force oracle every closed form is checked against. */
inline RationalSeries limit_series(const RecurrenceSpec& spec, int order, int base_stride = 1)
{
	return limit_approximant(spec, order + 2, order, base_stride);
}

} // namespace qacs

#endif
