#ifndef QACS_DIVISOR_BASIS_HPP
#define QACS_DIVISOR_BASIS_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qacs/identities.hpp"
#include "qacs/linear_solve.hpp"
#include "qacs/numbertheory.hpp"
#include "qacs/series.hpp"

namespace qacs {

/* A monomial prod_i S_i^{e_i} in the divisor generating functions, with
 * S_i carrying weight i+1. */
struct DivisorMonomial {
	std::vector<int> exponents; // exponents[i] belongs to S_i

	int weight() const
	{
		int w = 0;
		for (std::size_t i = 0; i < exponents.size(); ++i)
			w += exponents[i] * (static_cast<int>(i) + 1);
		return w;
	}

	bool is_constant() const { return weight() == 0; }

	std::string str() const
	{
		std::ostringstream out;
		bool first = true;
		for (std::size_t i = 0; i < exponents.size(); ++i) {
			if (exponents[i] == 0) continue;
			if (!first) out << "*";
			first = false;
			out << "S_" << i;
			if (exponents[i] > 1) out << "^" << exponents[i];
		}
		if (first) out << "1";
		return out.str();
	}
};

struct DivisorBasisTerm {
	DivisorMonomial monomial;
	Rational coefficient;
};

enum class DivisorBasisStatus {
	found,                // solved and re-verified at the check order
	no_solution,          // the fit system is inconsistent
	verification_failure, // fit succeeded but the recheck found a mismatch
};

struct DivisorBasisExpression {
	int index = 0; // the j of T(j)
	DivisorBasisStatus status = DivisorBasisStatus::no_solution;
	std::vector<DivisorBasisTerm> terms;
	int fit_order = 0;
	int check_order = 0;
	int first_recheck_mismatch = -1; // power, when status is verification_failure

	std::string str() const
	{
		if (status != DivisorBasisStatus::found && terms.empty()) return "";
		std::ostringstream out;
		bool first = true;
		for (const DivisorBasisTerm& t : terms) {
			Rational c = t.coefficient;
			if (first) {
				if (c.sign() < 0) { out << "-"; c = -c; }
			} else {
				out << (c.sign() < 0 ? " - " : " + ");
				if (c.sign() < 0) c = -c;
			}
			first = false;
			if (t.monomial.is_constant())
				out << c.str();
			else if (c.is_one())
				out << t.monomial.str();
			else
				out << c.str() << "*" << t.monomial.str();
		}
		if (first) out << "0";
		return out.str();
	}
};

namespace detail {

/* All exponent vectors over S_0..S_j of weight <= j+1, plus the constant,
 * listed in lexicographic order so results are deterministic. */
inline std::vector<DivisorMonomial> candidate_monomials(int j)
{
	std::vector<DivisorMonomial> out;
	std::vector<int> cur(static_cast<std::size_t>(j) + 1, 0);
	auto rec = [&](auto&& self, int i, int budget) -> void {
		if (i > j) {
			out.push_back(DivisorMonomial{cur});
			return;
		}
		for (int e = 0; e * (i + 1) <= budget; ++e) {
			cur[static_cast<std::size_t>(i)] = e;
			self(self, i + 1, budget - e * (i + 1));
		}
		cur[static_cast<std::size_t>(i)] = 0;
	};
	rec(rec, 0, j + 1);
	std::sort(out.begin(), out.end(),
			  [](const DivisorMonomial& a, const DivisorMonomial& b) {
				  return a.exponents < b.exponents;
			  });
	return out;
}

inline RationalSeries monomial_series(const DivisorMonomial& mono, int order,
									  std::map<int, RationalSeries>& sigma_cache)
{
	RationalSeries out = RationalSeries::one(RationalRing{}, order);
	for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
		if (mono.exponents[i] == 0) continue;
		auto it = sigma_cache.find(static_cast<int>(i));
		if (it == sigma_cache.end())
			it = sigma_cache.emplace(static_cast<int>(i), sigma_series(static_cast<int>(i), order))
					 .first;
		for (int rep = 0; rep < mono.exponents[i]; ++rep) out *= it->second;
	}
	return out;
}

} // namespace detail

/* Express T(j) as a polynomial with rational coefficients in S_0..S_j.
 *
 * Candidates are the monomials of weight <= j+1 (S_i weighing i+1) plus
 * the constant. An exact linear fit against the coefficients of T(j) up
 * to q^fit_order is then re-verified independently up to q^check_order.
 * If the fit system is underdetermined, the sparsest consistent solution
 * is located by exhaustive support search, smallest support first and
 * lexicographically smallest exponent vectors preferred, so the output
 * is deterministic either way. */
inline DivisorBasisExpression express_in_divisor_basis(int j, int fit_order, int check_order)
{
	if (j < 1) throw std::invalid_argument("express_in_divisor_basis: index must be >= 1");
	const std::vector<DivisorMonomial> monomials = detail::candidate_monomials(j);
	const int ncand = static_cast<int>(monomials.size());
	if (fit_order < ncand)
		throw std::invalid_argument("express_in_divisor_basis: fit order must be >= " +
									std::to_string(ncand) + " (the candidate count)");
	if (check_order <= fit_order)
		throw std::invalid_argument("express_in_divisor_basis: check order must exceed fit order");

	DivisorBasisExpression result;
	result.index = j;
	result.fit_order = fit_order;
	result.check_order = check_order;

	std::map<int, RationalSeries> sigma_cache;
	const RationalSeries target = t_series(j, fit_order);
	std::vector<RationalSeries> columns;
	columns.reserve(static_cast<std::size_t>(ncand));
	for (const DivisorMonomial& m : monomials)
		columns.push_back(detail::monomial_series(m, fit_order, sigma_cache));

	const int rows = fit_order + 1;
	std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows));
	std::vector<Rational> b(static_cast<std::size_t>(rows));
	for (int r = 0; r < rows; ++r) {
		a[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(ncand));
		for (int c = 0; c < ncand; ++c)
			a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
				columns[static_cast<std::size_t>(c)][r];
		b[static_cast<std::size_t>(r)] = target[r];
	}

	LinearSolution sol = solve_rational_system(a, b);
	if (!sol.consistent) {
		result.status = DivisorBasisStatus::no_solution;
		return result;
	}

	if (!sol.free_columns.empty()) {
		/* Rank-deficient fit: search supports of increasing size for the
		 * sparsest consistent combination. Candidate counts are small
		 * enough that the subset walk is cheap, and it is only reached
		 * when the straight solve was ambiguous to begin with. */
		for (int size = 0; size <= ncand; ++size) {
			std::vector<int> pick;
			bool solved = false;
			auto walk = [&](auto&& self, int start) -> void {
				if (solved) return;
				if (static_cast<int>(pick.size()) == size) {
					std::vector<std::vector<Rational>> sub(static_cast<std::size_t>(rows));
					for (int r = 0; r < rows; ++r) {
						sub[static_cast<std::size_t>(r)].resize(pick.size());
						for (std::size_t c = 0; c < pick.size(); ++c)
							sub[static_cast<std::size_t>(r)][c] =
								a[static_cast<std::size_t>(r)]
								 [static_cast<std::size_t>(pick[c])];
					}
					LinearSolution s = solve_rational_system(sub, b);
					if (s.consistent && s.free_columns.empty()) {
						sol.values.assign(static_cast<std::size_t>(ncand), Rational());
						for (std::size_t c = 0; c < pick.size(); ++c)
							sol.values[static_cast<std::size_t>(pick[c])] = s.values[c];
						solved = true;
					}
					return;
				}
				for (int c = start; c < ncand && !solved; ++c) {
					pick.push_back(c);
					self(self, c + 1);
					pick.pop_back();
				}
			};
			walk(walk, 0);
			if (solved) break;
		}
	}

	for (int c = 0; c < ncand; ++c) {
		if (sol.values[static_cast<std::size_t>(c)].is_zero()) continue;
		result.terms.push_back(DivisorBasisTerm{monomials[static_cast<std::size_t>(c)],
												sol.values[static_cast<std::size_t>(c)]});
	}

	/* Independent recheck at the larger order. */
	std::map<int, RationalSeries> check_cache;
	RationalSeries combined(RationalRing{}, check_order);
	for (const DivisorBasisTerm& t : result.terms)
		combined += t.coefficient * detail::monomial_series(t.monomial, check_order, check_cache);
	const RationalSeries check_target = t_series(j, check_order);
	if (const auto mismatch = first_mismatch(combined, check_target)) {
		result.status = DivisorBasisStatus::verification_failure;
		result.first_recheck_mismatch = *mismatch;
		return result;
	}
	result.status = DivisorBasisStatus::found;
	return result;
}

} // namespace qacs

#endif
