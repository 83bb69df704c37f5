#ifndef QACS_NUMBERTHEORY_HPP
#define QACS_NUMBERTHEORY_HPP

#include <map>
#include <vector>

#include "qacs/rational.hpp"
#include "qacs/series.hpp"

namespace qacs {

/* sigma_k(n): sum of k-th powers of the divisors of n, by trial division
 * up to sqrt(n). */
inline Integer sigma(int k, long n)
{
	if (k < 0) throw std::invalid_argument("sigma: power must be >= 0");
	if (n < 1) throw std::invalid_argument("sigma: argument must be >= 1");
	auto powk = [&](long d) {
		Integer out;
		mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(d),
					  static_cast<unsigned long>(k));
		return out;
	};
	Integer acc = 0;
	for (long d = 1; d * d <= n; ++d) {
		if (n % d != 0) continue;
		acc += powk(d);
		const long other = n / d;
		if (other != d) acc += powk(other);
	}
	return acc;
}

/* Bulk table of sigma_k(n) for 1 <= n <= max_n and the requested k's,
 * filled with one divisor sieve per k. Write-once, then read-only. */
class DivisorTable {
  public:
	DivisorTable(int max_n, const std::vector<int>& powers) : max_n_(max_n)
	{
		if (max_n < 1) throw std::invalid_argument("DivisorTable: max_n must be >= 1");
		for (int k : powers) {
			if (k < 0) throw std::invalid_argument("DivisorTable: power must be >= 0");
			if (values_.count(k)) continue;
			std::vector<Integer> col(static_cast<std::size_t>(max_n) + 1, Integer(0));
			for (long d = 1; d <= max_n; ++d) {
				Integer dk;
				mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d),
							  static_cast<unsigned long>(k));
				for (long n = d; n <= max_n; n += d) col[static_cast<std::size_t>(n)] += dk;
			}
			values_.emplace(k, std::move(col));
		}
	}

	int max_n() const { return max_n_; }

	const Integer& sigma(int k, int n) const
	{
		if (n < 1 || n > max_n_) throw std::invalid_argument("DivisorTable: n out of range");
		auto it = values_.find(k);
		if (it == values_.end()) throw std::invalid_argument("DivisorTable: power not tabulated");
		return it->second[static_cast<std::size_t>(n)];
	}

  private:
	int max_n_;
	std::map<int, std::vector<Integer>> values_;
};

/* S_k(q) = sum_{n>=1} sigma_k(n) q^n, truncated at the given order. */
inline RationalSeries sigma_series(int k, int order)
{
	RationalSeries out(RationalRing{}, order);
	if (order >= 1) {
		DivisorTable table(order, {k});
		for (int n = 1; n <= order; ++n) out.coeff(n) = Rational(table.sigma(k, n));
	}
	return out;
}

/* Stirling numbers of the second kind via the triangle recurrence
 * S(k,l) = l S(k-1,l) + S(k-1,l-1). */
inline Integer stirling2(int k, int l)
{
	if (k < 0 || l < 0) throw std::invalid_argument("stirling2: negative argument");
	if (l > k) return 0;
	if (k == 0) return 1; // l == 0 here
	std::vector<Integer> row(static_cast<std::size_t>(l) + 1, Integer(0));
	row[0] = 1; // S(0,0)
	for (int kk = 1; kk <= k; ++kk) {
		for (int ll = std::min(kk, l); ll >= 1; --ll)
			row[static_cast<std::size_t>(ll)] =
				Integer(ll) * row[static_cast<std::size_t>(ll)] + row[static_cast<std::size_t>(ll - 1)];
		row[0] = 0; // S(kk,0) = 0 for kk >= 1
	}
	return row[static_cast<std::size_t>(l)];
}

/* sum_{n in Z} (-1)^n q^{n^2} = 1 + 2 sum_{n>=1} (-1)^n q^{n^2}, the
 * series expansion of (q;q)_inf / (-q;q)_inf. */
inline RationalSeries theta_alternating_squares(int order)
{
	RationalSeries out(RationalRing{}, order);
	out.coeff(0) = Rational(1);
	for (long n = 1; n * n <= order; ++n)
		out.coeff(static_cast<int>(n * n)) = Rational(n % 2 == 0 ? 2 : -2);
	return out;
}

/* sum_{n>=0} q^{n(n+1)/2}, the expansion of (q^2;q^2)_inf / (q;q^2)_inf.
 * The sum starts at n = 0: the product has constant term 1. */
inline RationalSeries theta_triangular(int order)
{
	RationalSeries out(RationalRing{}, order);
	for (long n = 0; n * (n + 1) / 2 <= order; ++n)
		out.coeff(static_cast<int>(n * (n + 1) / 2)) = Rational(1);
	return out;
}

} // namespace qacs

#endif
