#ifndef QACS_TESTS_ORACLE_HPP
#define QACS_TESTS_ORACLE_HPP

/* Naive reference implementations used as independent oracles. Everything
 * here works on plain std::vector<mpq_class> with schoolbook algorithms
 * and deliberately shares no code with the library under test. */

#include <gmpxx.h>

#include <random>
#include <vector>

namespace oracle {

using Poly = std::vector<mpq_class>; // coefficient m belongs to q^m; fixed length order+1

inline Poly zero(int order) { return Poly(static_cast<std::size_t>(order) + 1, mpq_class(0)); }

inline Poly one(int order)
{
	Poly out = zero(order);
	out[0] = 1;
	return out;
}

inline Poly add(const Poly& a, const Poly& b)
{
	Poly out = a;
	for (std::size_t i = 0; i < out.size() && i < b.size(); ++i) out[i] += b[i];
	return out;
}

inline Poly sub(const Poly& a, const Poly& b)
{
	Poly out = a;
	for (std::size_t i = 0; i < out.size() && i < b.size(); ++i) out[i] -= b[i];
	return out;
}

inline Poly mul(const Poly& a, const Poly& b)
{
	const std::size_t n = a.size();
	Poly out(n, mpq_class(0));
	for (std::size_t i = 0; i < n; ++i) {
		if (a[i] == 0) continue;
		for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
	}
	return out;
}

inline Poly scal(const mpq_class& c, const Poly& a)
{
	Poly out = a;
	for (auto& v : out) v *= c;
	return out;
}

inline Poly shift(const Poly& a, int k)
{
	Poly out = zero(static_cast<int>(a.size()) - 1);
	for (std::size_t i = static_cast<std::size_t>(k); i < a.size(); ++i) out[i] = a[i - k];
	return out;
}

inline Poly inverse(const Poly& a)
{
	Poly out = zero(static_cast<int>(a.size()) - 1);
	out[0] = 1 / a[0];
	for (std::size_t m = 1; m < a.size(); ++m) {
		mpq_class acc = 0;
		for (std::size_t k = 1; k <= m; ++k) acc += a[k] * out[m - k];
		out[m] = -acc / a[0];
	}
	return out;
}

/* (q;q)_n by literal factor multiplication. */
inline Poly q_factorial(int n, int order)
{
	Poly out = one(order);
	for (int j = 1; j <= n; ++j) {
		Poly factor = one(order);
		if (j <= order) factor[static_cast<std::size_t>(j)] = -1;
		out = mul(out, factor);
	}
	return out;
}

/* (a;q)_n for a constant a, literal factors (1 - a q^j), j = 0..n-1. */
inline Poly pochhammer(const mpq_class& a, int n, int order)
{
	Poly out = one(order);
	for (int j = 0; j < n; ++j) {
		Poly factor = one(order);
		if (j <= order) factor[static_cast<std::size_t>(j)] -= a;
		out = mul(out, factor);
	}
	return out;
}

inline Poly pochhammer_inf(const mpq_class& a, int order) { return pochhammer(a, order + 1, order); }

/* Partition counts by the bounded-part recurrence: p(parts <= k) table,
 * independent of any Euler-product machinery. */
inline std::vector<long> partitions(int max_n)
{
	std::vector<std::vector<long>> table(
		static_cast<std::size_t>(max_n) + 1,
		std::vector<long>(static_cast<std::size_t>(max_n) + 1, 0));
	for (std::size_t k = 0; k <= static_cast<std::size_t>(max_n); ++k) table[0][k] = 1;
	for (int n = 1; n <= max_n; ++n)
		for (int k = 1; k <= max_n; ++k) {
			long with = k <= n ? table[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(k)]
							   : 0;
			table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
				table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)] + with;
		}
	std::vector<long> out;
	for (int n = 0; n <= max_n; ++n)
		out.push_back(table[static_cast<std::size_t>(n)][static_cast<std::size_t>(max_n)]);
	return out;
}

/* sigma_k(n) by full divisor enumeration. */
inline mpz_class sigma(int k, int n)
{
	mpz_class acc = 0;
	for (int d = 1; d <= n; ++d) {
		if (n % d != 0) continue;
		mpz_class dk;
		mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
		acc += dk;
	}
	return acc;
}

/* Stirling number of the second kind by plain recursion. */
inline mpz_class stirling2(int k, int l)
{
	if (k == 0 && l == 0) return 1;
	if (k == 0 || l == 0 || l > k) return 0;
	return mpz_class(l) * stirling2(k - 1, l) + stirling2(k - 1, l - 1);
}

/* beta_n = sum_{l<=n} f(l) - a_n by literally unrolling the recursion
 * a_n = f(n) + (1 - q^{stride (n-1)}) a_{n-1} with dense polynomials. */
template <typename DriverFn> // DriverFn: int -> mpq_class
inline Poly recursion_beta(DriverFn f, int n, int order, int stride = 1)
{
	Poly a = zero(order);
	mpq_class total = 0;
	for (int step = 1; step <= n; ++step) {
		Poly factor = one(order);
		const long e = static_cast<long>(stride) * (step - 1);
		if (e <= order) factor[static_cast<std::size_t>(e)] -= 1;
		a = mul(factor, a);
		const mpq_class fv = f(step);
		a[0] += fv;
		total += fv;
	}
	Poly out = scal(-1, a);
	out[0] += total;
	return out;
}

/* Uniform random rational with numerator in [-9,9] and denominator in
 * [1,9]; plenty for ring-axiom style property tests. */
inline mpq_class random_rational(std::mt19937_64& rng)
{
	std::uniform_int_distribution<long> num(-9, 9);
	std::uniform_int_distribution<long> den(1, 9);
	mpq_class v(num(rng), den(rng));
	v.canonicalize();
	return v;
}

} // namespace oracle

#endif
