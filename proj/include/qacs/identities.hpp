#ifndef QACS_IDENTITIES_HPP
#define QACS_IDENTITIES_HPP

#include <utility>
#include <vector>

#include "qacs/cyclotomic.hpp"
#include "qacs/errors.hpp"
#include "qacs/numbertheory.hpp"
#include "qacs/rational.hpp"
#include "qacs/recurrence.hpp"
#include "qacs/series.hpp"

namespace qacs {

/* ceil(a/b) for b > 0, exact for negative a as well. */
inline long ceil_div(long a, long b)
{
	long quot = a / b;
	if (a % b > 0) ++quot;
	return quot;
}

inline TruncatedSeries<CyclotomicField> lift(const RationalSeries& s, const CyclotomicField& field)
{
	TruncatedSeries<CyclotomicField> out(field, s.order());
	for (int m = 0; m <= s.order(); ++m) out.coeff(m) = field.from_rational(s[m]);
	return out;
}

inline RationalSeries project_rational(const TruncatedSeries<CyclotomicField>& s)
{
	RationalSeries out(RationalRing{}, s.order());
	for (int m = 0; m <= s.order(); ++m) {
		try {
			out.coeff(m) = rational_part(s[m]);
		} catch (const NonRationalValue&) {
			throw SymmetrizationFailure("coefficient of q^" + std::to_string(m) +
										" failed to symmetrize to a rational");
		}
	}
	return out;
}

/* T(j) = sum_{n>=1} (-1)^{n-1} q^{n(n+1)/2} / ((1-q^n)^j (q;q)_n).
 * The n-th term has q-valuation n(n+1)/2, so the sum is finite at any
 * truncation order; T(1) is the divisor generating function S_0. */
inline RationalSeries t_series(int j, int order)
{
	if (j < 1) throw std::invalid_argument("t_series: index must be >= 1");
	const RationalRing ring;
	RationalSeries acc(ring, order);
	RationalSeries inv_qfac = RationalSeries::one(ring, order); // 1/(q;q)_n
	for (long n = 1; n * (n + 1) / 2 <= order; ++n) {
		inv_qfac.div_binomial(static_cast<int>(n), ring.one());
		RationalSeries term = inv_qfac;
		for (int rep = 0; rep < j; ++rep) term.div_binomial(static_cast<int>(n), ring.one());
		term = shift_up(term, static_cast<int>(n * (n + 1) / 2));
		if (n % 2 == 0) term = -term;
		acc += term;
	}
	return acc;
}

/* Weights of T(1), T(2), ... in the limit formula for a polynomial driver
 * f(n) = sum_k c_k n^k:
 *
 *   h_j = sum_{l>=j-1} (-1)^{l-j-1} binom(l-1, j-2) l! sum_{k>=l} c_k S(k,l)
 *
 * for j >= 2, and h_1 = c_0 by convention (the binomial in the general
 * formula is not defined at j = 1). S(k,l) = 0 for l > k makes every sum
 * finite; the weight list has one entry per 1 <= j <= deg(f)+1. */
inline std::vector<Rational> t_weights(const std::vector<Rational>& coefficients)
{
	std::vector<Rational> c = coefficients;
	while (!c.empty() && c.back().is_zero()) c.pop_back();
	if (c.empty()) return {};
	const int deg = static_cast<int>(c.size()) - 1;

	std::vector<Rational> h(static_cast<std::size_t>(deg) + 1);
	h[0] = c[0];
	for (int j = 2; j <= deg + 1; ++j) {
		Rational acc;
		for (int l = j - 1; l <= deg; ++l) {
			Rational inner;
			for (int k = l; k <= deg; ++k)
				inner += c[static_cast<std::size_t>(k)] * Rational(stirling2(k, l));
			Integer binom, fact;
			mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(l - 1),
						 static_cast<unsigned long>(j - 2));
			mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(l));
			Rational term = Rational(Integer(binom * fact)) * inner;
			if (((l - j - 1) % 2 + 2) % 2 == 1) term = -term;
			acc += term;
		}
		h[static_cast<std::size_t>(j - 1)] = acc;
	}
	return h;
}

/* Limit closed form for a polynomial driver: sum_j h_j T(j). */
inline RationalSeries closed_form_polynomial(const std::vector<Rational>& coefficients, int order)
{
	const std::vector<Rational> h = t_weights(coefficients);
	RationalSeries acc(RationalRing{}, order);
	for (std::size_t i = 0; i < h.size(); ++i) {
		if (h[i].is_zero()) continue;
		acc += h[i] * t_series(static_cast<int>(i) + 1, order);
	}
	return acc;
}

/* Limit closed form for an exponential driver:
 * b/(1-b) - b (q;q)_inf / (b;q)_inf. Verified formally for every
 * rational b != 1; no analytic smallness condition on q is needed at the
 * level of coefficient identities. */
inline RationalSeries closed_form_exponential(const Rational& b, int order)
{
	if (b.is_one())
		throw UnsupportedDriver(
			"base 1 is the constant case: use the polynomial driver with coefficients (1)");
	const RationalRing ring;
	const Rational front = b / (Rational(1) - b);
	RationalSeries out = RationalSeries::constant(ring, front, order);
	out -= b * (q_factorial_infinite(ring, order) * invert_unit(pochhammer_infinite(ring, b, order)));
	return out;
}

/* The same closed form with a series-valued base over the base q^stride,
 * used with b = q and stride 2 for the triangular-number corollary. */
inline RationalSeries closed_form_exponential(const RationalSeries& b, int order, int base_stride = 1)
{
	const RationalRing ring;
	if (b[0].is_one())
		throw UnsupportedDriver("series base with constant term 1 is not invertible here");
	const RationalSeries base = b.order() == order ? b : truncate(b, order);
	const RationalSeries one = RationalSeries::one(ring, order);
	RationalSeries out = base * invert_unit(one - base);
	const RationalSeries qq = pochhammer_infinite(
		RationalSeries::monomial(ring, base_stride, order), order, base_stride);
	out -= base * (qq * invert_unit(pochhammer_infinite(base, order, base_stride)));
	return out;
}

/* DFT coefficients of a period: c_k = (1/N) sum_{1<=j<=N} f(j)
 * zeta_N^{(1-j)k}, elements of Q(zeta_N); c_0 is the mean. */
inline std::vector<CyclotomicNumber> periodic_dft(const std::vector<Rational>& values)
{
	if (values.empty()) throw std::invalid_argument("periodic_dft: empty period");
	const int n = static_cast<int>(values.size());
	const CyclotomicField field(n);
	const Rational inv_n = Rational(1, static_cast<long>(n));
	std::vector<CyclotomicNumber> out;
	out.reserve(static_cast<std::size_t>(n));
	for (int k = 0; k < n; ++k) {
		CyclotomicNumber acc = field.zero();
		for (int j = 1; j <= n; ++j)
			acc += field.from_rational(values[static_cast<std::size_t>(j - 1)] * inv_n) *
				   field.zeta(static_cast<long>(1 - j) * k);
		out.push_back(std::move(acc));
	}
	return out;
}

/* Limit closed form for a periodic driver of period N:
 *
 *   c_0 S_0(q) - (q;q)_inf sum_{1<=k<=N-1} c_k/(zeta^k;q)_inf
 *              + sum_{1<=k<=N-1} c_k/(1-zeta^k)
 *
 * computed entirely in Q(zeta_N) and projected onto Q at the end. The
 * expression is Galois-symmetric, so the projection must succeed;
 * failure indicates a bug, not a math problem. */
inline RationalSeries closed_form_periodic(const std::vector<Rational>& values, int order)
{
	if (values.empty()) throw std::invalid_argument("closed_form_periodic: empty period");
	const int n = static_cast<int>(values.size());
	const RationalSeries s0 = sigma_series(0, order);

	if (n == 1) return values[0] * s0; // both k-sums are empty

	const CyclotomicField field(n);
	const std::vector<CyclotomicNumber> c = periodic_dft(values);

	TruncatedSeries<CyclotomicField> acc = c[0] * lift(s0, field);
	TruncatedSeries<CyclotomicField> ksum(field, order);
	CyclotomicNumber scalar_sum = field.zero();
	for (int k = 1; k < n; ++k) {
		const CyclotomicNumber zk = field.zeta(k);
		ksum += c[static_cast<std::size_t>(k)] *
				invert_unit(pochhammer_infinite(field, zk, order));
		scalar_sum += c[static_cast<std::size_t>(k)] * invert(field.one() - zk);
	}
	acc -= q_factorial_infinite(field, order) * ksum;
	acc += TruncatedSeries<CyclotomicField>::constant(field, scalar_sum, order);
	return project_rational(acc);
}

/* The all-rational ceiling form of the periodic limit:
 * (q;q)_inf sum_{n>=0} q^n/(q;q)_n sum_{1<=j<=N} f(j) ceil((n+1-j)/N). */
inline RationalSeries closed_form_ceiling(const std::vector<Rational>& values, int order)
{
	if (values.empty()) throw std::invalid_argument("closed_form_ceiling: empty period");
	const int n_vals = static_cast<int>(values.size());
	const RationalRing ring;
	RationalSeries inv_qfac = RationalSeries::one(ring, order);
	RationalSeries acc(ring, order);
	for (int n = 0; n <= order; ++n) {
		if (n > 0) inv_qfac.div_binomial(n, ring.one());
		Rational weight;
		for (int j = 1; j <= n_vals; ++j)
			weight += values[static_cast<std::size_t>(j - 1)] *
					  Rational(ceil_div(n + 1 - j, n_vals));
		if (!weight.is_zero()) acc += weight * shift_up(inv_qfac, n);
	}
	return q_factorial_infinite(ring, order) * acc;
}

namespace detail {

/* F(q^m) = sum_{i>=1} b^i q^{mi} for the exponential driver. */
inline RationalSeries geometric_driver_series(const Rational& b, int m, int order)
{
	RationalSeries out(RationalRing{}, order);
	Rational bpow(1);
	for (long i = 1; m * i <= order; ++i) {
		bpow *= b;
		out.coeff(static_cast<int>(m * i)) = bpow;
	}
	return out;
}

/* F(q^m) = sum_{0<=k<N} c_k q^m / (1 - zeta^k q^m), the sum-of-geometrics
 * form of the periodic driver's generating function. */
inline TruncatedSeries<CyclotomicField> periodic_driver_series(
	const CyclotomicField& field, const std::vector<CyclotomicNumber>& c, int m, int order)
{
	TruncatedSeries<CyclotomicField> out(field, order);
	for (int k = 0; k < static_cast<int>(c.size()); ++k) {
		CyclotomicNumber g = c[static_cast<std::size_t>(k)];
		const CyclotomicNumber zk = field.zeta(k);
		for (long i = 1; m * i <= order; ++i) {
			out.coeff(static_cast<int>(m * i)) += g;
			g *= zk;
		}
	}
	return out;
}

} // namespace detail

/* The iterated functional equation evaluated at x = q:
 *
 *   A(q;q) = sum_{n>=0} (-1)^n F(q^{n+1}) q^{n(n+1)/2} / (q;q)_{n+1}
 *
 * where F is the driver's generating function in closed form (a geometric
 * series for an exponential driver, a sum of geometrics over Q(zeta_N)
 * for a periodic one). Must reproduce limit_series exactly. */
inline RationalSeries iterated_functional_limit(const RecurrenceSpec& spec, int order)
{
	if (const auto* e = std::get_if<ExponentialDriver>(&spec)) {
		const RationalRing ring;
		RationalSeries acc(ring, order);
		RationalSeries inv_qfac = RationalSeries::one(ring, order); // 1/(q;q)_{n+1}
		for (long n = 0; n * (n + 1) / 2 + (n + 1) <= order; ++n) {
			inv_qfac.div_binomial(static_cast<int>(n + 1), ring.one());
			RationalSeries term =
				detail::geometric_driver_series(e->base, static_cast<int>(n + 1), order) * inv_qfac;
			term = shift_up(term, static_cast<int>(n * (n + 1) / 2));
			acc += n % 2 == 0 ? term : -term;
		}
		return acc;
	}
	if (const auto* p = std::get_if<PeriodicDriver>(&spec)) {
		const int len = static_cast<int>(p->values.size());
		if (len == 1) {
			// Period 1 stays rational: F(q^m) = f(1) q^m / (1 - q^m).
			const RationalRing ring;
			RationalSeries acc(ring, order);
			RationalSeries inv_qfac = RationalSeries::one(ring, order);
			for (long n = 0; n * (n + 1) / 2 + (n + 1) <= order; ++n) {
				inv_qfac.div_binomial(static_cast<int>(n + 1), ring.one());
				RationalSeries term =
					p->values[0] *
					(detail::geometric_driver_series(Rational(1), static_cast<int>(n + 1), order) *
					 inv_qfac);
				term = shift_up(term, static_cast<int>(n * (n + 1) / 2));
				acc += n % 2 == 0 ? term : -term;
			}
			return acc;
		}
		const CyclotomicField field(len);
		const std::vector<CyclotomicNumber> c = periodic_dft(p->values);
		TruncatedSeries<CyclotomicField> acc(field, order);
		TruncatedSeries<CyclotomicField> inv_qfac = TruncatedSeries<CyclotomicField>::one(field, order);
		for (long n = 0; n * (n + 1) / 2 + (n + 1) <= order; ++n) {
			inv_qfac.div_binomial(static_cast<int>(n + 1), field.one());
			TruncatedSeries<CyclotomicField> term =
				detail::periodic_driver_series(field, c, static_cast<int>(n + 1), order) * inv_qfac;
			term = shift_up(term, static_cast<int>(n * (n + 1) / 2));
			acc += n % 2 == 0 ? term : -term;
		}
		return project_rational(acc);
	}
	throw UnsupportedDriver(
		"iterated functional evaluation needs an exponential or periodic driver");
}

/* Both sides of the a -> infinity limit of the q-Gauss summation:
 *
 *   LHS = sum_n (b;q)_n (-1)^n q^{n(n-1)/2} (c/b)^n / ((q;q)_n (c;q)_n)
 *   RHS = (c/b;q)_inf / (c;q)_inf
 *
 * returned as a pair for coefficientwise comparison. */
inline std::pair<RationalSeries, RationalSeries> q_gauss_pair(const Rational& b, const Rational& c,
															  int order)
{
	if (b.is_zero()) throw DivisionByZero("q_gauss_pair: b must be nonzero (the sum carries (c/b)^n)");
	if (c.is_one())
		throw NonUnitConstant("q_gauss_pair: c = 1 makes the (c;q)_n factors non-invertible");

	const RationalRing ring;
	RationalSeries lhs(ring, order);
	RationalSeries pb = RationalSeries::one(ring, order);       // (b;q)_n
	RationalSeries inv_qfac = RationalSeries::one(ring, order); // 1/(q;q)_n
	RationalSeries inv_pc = RationalSeries::one(ring, order);   // 1/(c;q)_n
	const Rational ratio = c / b;
	Rational ratio_pow(1);
	lhs += RationalSeries::one(ring, order); // n = 0 term
	for (long n = 1; n * (n - 1) / 2 <= order; ++n) {
		pb.mul_binomial(static_cast<int>(n - 1), b);
		inv_qfac.div_binomial(static_cast<int>(n), ring.one());
		inv_pc.div_binomial(static_cast<int>(n - 1), c);
		ratio_pow *= ratio;
		RationalSeries term = ratio_pow * (pb * inv_qfac * inv_pc);
		term = shift_up(term, static_cast<int>(n * (n - 1) / 2));
		lhs += n % 2 == 0 ? term : -term;
	}
	RationalSeries rhs = pochhammer_infinite(ring, ratio, order) *
						 invert_unit(pochhammer_infinite(ring, c, order));
	return {std::move(lhs), std::move(rhs)};
}

/* sum_{1<=k<=N-1} zeta_N^{jk} / (1 - zeta_N^k) next to its rational
 * closed form (N-1)/2 + j - ceil(j/N) N; the two must agree under
 * rational_part. */
inline std::pair<CyclotomicNumber, Rational> roots_of_unity_sum(int n, long j)
{
	if (n < 1) throw std::invalid_argument("roots_of_unity_sum: order must be >= 1");
	const CyclotomicField field(n);
	CyclotomicNumber acc = field.zero();
	for (int k = 1; k < n; ++k)
		acc += field.zeta(j * k) * invert(field.one() - field.zeta(k));
	const Rational closed =
		Rational(n - 1, 2) + Rational(j) - Rational(ceil_div(j, n) * n);
	return {std::move(acc), closed};
}

/* (q;q)_inf sum_{n>=0} n q^n / (q;q)_n, the weighted Euler form of S_0;
 * the n-th summand has valuation n, so n runs to the order. */
inline RationalSeries weighted_euler_s0(int order)
{
	const RationalRing ring;
	RationalSeries inv_qfac = RationalSeries::one(ring, order);
	RationalSeries acc(ring, order);
	for (int n = 1; n <= order; ++n) {
		inv_qfac.div_binomial(n, ring.one());
		acc += Rational(static_cast<long>(n)) * shift_up(inv_qfac, n);
	}
	return q_factorial_infinite(ring, order) * acc;
}

/* ---- corollary expression sets ---- */

/* sum_{n>=1} (-1)^n q^{n^2}. */
inline RationalSeries alternating_square_theta(int order)
{
	RationalSeries out(RationalRing{}, order);
	for (long n = 1; n * n <= order; ++n)
		out.coeff(static_cast<int>(n * n)) = Rational(n % 2 == 0 ? 1 : -1);
	return out;
}

/* -(q;q)_inf sum_{n>=0} q^{2n+1}/(q;q)_{2n+1}. */
inline RationalSeries odd_euler_weighted(int order)
{
	const RationalRing ring;
	RationalSeries inv_qfac = RationalSeries::one(ring, order);
	RationalSeries acc(ring, order);
	for (int m = 1; m <= order; ++m) {
		inv_qfac.div_binomial(m, ring.one());
		if (m % 2 == 1) acc += shift_up(inv_qfac, m);
	}
	return -(q_factorial_infinite(ring, order) * acc);
}

/* -1/2 + (q;q)_inf / (2 (-q;q)_inf), or the sign-flipped variant
 * -1/2 - (q;q)_inf / (2 (-q;q)_inf). Only the former equals the
 * alternating-squares limit; the variant is kept so the mismatch can be
 * demonstrated rather than silently corrected. */
inline RationalSeries half_product_form(int order, bool flipped_sign = false)
{
	const RationalRing ring;
	const RationalSeries minus_q = -RationalSeries::monomial(ring, 1, order);
	RationalSeries half = Rational(1, 2) * (q_factorial_infinite(ring, order) *
											invert_unit(pochhammer_infinite(minus_q, order)));
	if (flipped_sign) half = -half;
	return RationalSeries::constant(ring, Rational(-1, 2), order) + half;
}

/* The recursion a_n = q^n + (1 - q^{2(n-1)}) a_{n-1} run to stabilization:
 * lim a_n = sum_l q^l - lim_n (sum_l f(l) - a_n), evaluated through the
 * generic engine with a series driver and base q^2. */
inline RationalSeries triangular_recursion_limit(int order)
{
	const RationalRing ring;
	const RecurrenceSpec driver = series_driver(
		[ring](int n, int ord) { return RationalSeries::monomial(ring, n, ord); });
	RationalSeries geometric(ring, order);
	for (int m = 1; m <= order; ++m) geometric.coeff(m) = Rational(1);
	return geometric - limit_series(driver, order, 2);
}

/* (q^2;q^2)_inf / (q;q^2)_inf. */
inline RationalSeries triangular_product(int order)
{
	const RationalRing ring;
	const RationalSeries even_part = substitute_power(q_factorial_infinite(ring, order), 2);
	const RationalSeries odd_part =
		pochhammer_infinite(RationalSeries::monomial(ring, 1, order), order, 2);
	return even_part * invert_unit(odd_part);
}

} // namespace qacs

#endif
