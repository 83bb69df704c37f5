#ifndef QACS_CATALOG_HPP
#define QACS_CATALOG_HPP

#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qacs/divisor_basis.hpp"
#include "qacs/identities.hpp"
#include "qacs/verification.hpp"

namespace qacs {

struct CatalogResult {
	VerificationReport report;
	std::string detail; // extra human-readable context, e.g. a discovered polynomial
};

struct CatalogCase {
	std::string id;
	bool expect_mismatch = false;
	std::function<CatalogResult()> run;
};

struct CatalogOutcome {
	VerificationReport report;
	bool expect_mismatch = false;
	std::string detail;

	/* An expected-mismatch entry is in order exactly when it mismatches. */
	bool ok() const { return report.match != expect_mismatch; }
};

namespace detail {

inline std::string rational_list_str(const std::vector<Rational>& values)
{
	std::ostringstream out;
	for (std::size_t i = 0; i < values.size(); ++i) {
		if (i) out << ",";
		out << values[i].str();
	}
	return out.str();
}

inline CatalogResult plain(VerificationReport report)
{
	return CatalogResult{std::move(report), ""};
}

/* Deterministic "random" periods: the catalog must be byte-stable across
 * runs, so the grid is drawn from a fixed-seed generator. */
inline std::vector<std::vector<Rational>> random_periods(int length, int count)
{
	std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (static_cast<unsigned long long>(length) << 8));
	std::uniform_int_distribution<long> dist(-4, 4);
	std::vector<std::vector<Rational>> out;
	while (static_cast<int>(out.size()) < count) {
		std::vector<Rational> values;
		bool nonzero = false;
		for (int i = 0; i < length; ++i) {
			const long v = dist(rng);
			nonzero = nonzero || v != 0;
			values.emplace_back(v);
		}
		if (!nonzero) continue;
		out.push_back(std::move(values));
	}
	return out;
}

} // namespace detail

/* ---- per-target case builders, shared by the CLI and run_all ---- */

inline std::vector<CatalogCase> cases_poly(int order,
										   const std::optional<std::vector<Rational>>& coeffs = {})
{
	std::vector<std::vector<Rational>> grid;
	if (coeffs) {
		grid.push_back(*coeffs);
	} else {
		grid = {{Rational(1)},
				{Rational(0), Rational(1)},
				{Rational(0), Rational(0), Rational(1)},
				{Rational(0), Rational(0), Rational(0), Rational(1)},
				{Rational(2), Rational(-3), Rational(5)}};
	}
	std::vector<CatalogCase> out;
	for (const auto& c : grid) {
		const std::string id = "poly c=" + detail::rational_list_str(c);
		out.push_back({id, false, [c, id, order] {
						   return detail::plain(verify_equal(
							   id, limit_series(polynomial_driver(c), order),
							   closed_form_polynomial(c, order)));
					   }});
	}
	return out;
}

inline std::vector<CatalogCase> cases_exp(int order, const std::optional<Rational>& base = {})
{
	std::vector<Rational> grid;
	if (base)
		grid.push_back(*base);
	else
		grid = {Rational(-1), Rational(2), Rational(1, 2), Rational(-3, 5), Rational(7)};

	std::vector<CatalogCase> out;
	for (const Rational& b : grid) {
		const std::string tag = "exp b=" + b.str();
		out.push_back({tag + " closed-form", false, [b, tag, order] {
						   return detail::plain(verify_equal(
							   tag + " closed-form",
							   limit_series(exponential_driver(b), order),
							   closed_form_exponential(b, order)));
					   }});
		out.push_back({tag + " iterated", false, [b, tag, order] {
						   return detail::plain(verify_equal(
							   tag + " iterated", limit_series(exponential_driver(b), order),
							   iterated_functional_limit(exponential_driver(b), order)));
					   }});
		if (b == Rational(-1))
			out.push_back({tag + " squares", false, [b, tag, order] {
							   return detail::plain(verify_equal(
								   tag + " squares", limit_series(exponential_driver(b), order),
								   alternating_square_theta(order)));
						   }});
	}
	return out;
}

inline std::vector<CatalogCase> cases_periodic(int order,
											   const std::optional<std::vector<Rational>>& values = {},
											   bool with_ceiling = true, bool with_iterated = true)
{
	std::vector<std::vector<Rational>> grid;
	if (values) {
		grid.push_back(*values);
	} else {
		grid.push_back({Rational(-1), Rational(1)});
		for (int n : {1, 2, 3, 4, 6})
			for (auto& v : detail::random_periods(n, 5)) grid.push_back(std::move(v));
	}
	std::vector<CatalogCase> out;
	for (const auto& v : grid) {
		const std::string tag =
			"periodic N=" + std::to_string(v.size()) + " f=" + detail::rational_list_str(v);
		out.push_back({tag + " closed-form", false, [v, tag, order] {
						   return detail::plain(verify_equal(
							   tag + " closed-form", limit_series(periodic_driver(v), order),
							   closed_form_periodic(v, order)));
					   }});
		if (with_ceiling)
			out.push_back({tag + " ceiling", false, [v, tag, order] {
							   return detail::plain(verify_equal(
								   tag + " ceiling", limit_series(periodic_driver(v), order),
								   closed_form_ceiling(v, order)));
						   }});
		if (with_iterated)
			out.push_back({tag + " iterated", false, [v, tag, order] {
							   return detail::plain(verify_equal(
								   tag + " iterated", limit_series(periodic_driver(v), order),
								   iterated_functional_limit(periodic_driver(v), order)));
						   }});
	}
	return out;
}

inline std::vector<CatalogCase> cases_ceiling(int order,
											  const std::optional<std::vector<Rational>>& values = {})
{
	std::vector<std::vector<Rational>> grid;
	if (values) {
		grid.push_back(*values);
	} else {
		grid.push_back({Rational(-1), Rational(1)});
		for (int n : {2, 3, 5, 8})
			for (auto& v : detail::random_periods(n, 5)) grid.push_back(std::move(v));
	}
	std::vector<CatalogCase> out;
	for (const auto& v : grid) {
		const std::string tag =
			"ceiling N=" + std::to_string(v.size()) + " f=" + detail::rational_list_str(v);
		out.push_back({tag, false, [v, tag, order] {
						   return detail::plain(
							   verify_equal(tag, limit_series(periodic_driver(v), order),
											closed_form_ceiling(v, order)));
					   }});
	}
	return out;
}

/* The four-expression alternating-sign corollary. The flipped-sign
 * closed form is included as an expected-mismatch entry when asked:
 * it differs from the limit already at the constant term. */
inline std::vector<CatalogCase> cases_cor_alt(int order, bool include_flipped)
{
	std::vector<CatalogCase> out;
	const std::vector<Rational> period{Rational(-1), Rational(1)};
	out.push_back({"cor-alt limit=squares", false, [period, order] {
					   return detail::plain(verify_equal("cor-alt limit=squares",
														 limit_series(periodic_driver(period), order),
														 alternating_square_theta(order)));
				   }});
	out.push_back({"cor-alt limit=odd-sum", false, [period, order] {
					   return detail::plain(verify_equal("cor-alt limit=odd-sum",
														 limit_series(periodic_driver(period), order),
														 odd_euler_weighted(order)));
				   }});
	out.push_back({"cor-alt limit=half-product", false, [period, order] {
					   return detail::plain(verify_equal("cor-alt limit=half-product",
														 limit_series(periodic_driver(period), order),
														 half_product_form(order, false)));
				   }});
	if (include_flipped)
		out.push_back({"cor-alt limit=half-product flipped sign", true, [period, order] {
						   return detail::plain(
							   verify_equal("cor-alt limit=half-product flipped sign",
											limit_series(periodic_driver(period), order),
											half_product_form(order, true)));
					   }});
	return out;
}

inline std::vector<CatalogCase> cases_cor_theta(int order)
{
	std::vector<CatalogCase> out;
	out.push_back({"cor-theta recursion=product", false, [order] {
					   return detail::plain(
						   verify_equal("cor-theta recursion=product",
										shift_down(triangular_recursion_limit(order), 1),
										triangular_product(order)));
				   }});
	out.push_back({"cor-theta recursion=theta", false, [order] {
					   return detail::plain(verify_equal(
						   "cor-theta recursion=theta",
						   shift_down(triangular_recursion_limit(order), 1),
						   theta_triangular(order)));
				   }});
	out.push_back({"cor-theta closed-form=recursion", false, [order] {
					   const RationalRing ring;
					   RationalSeries geometric(ring, order);
					   for (int m = 1; m <= order; ++m) geometric.coeff(m) = Rational(1);
					   const RationalSeries via_closed_form =
						   geometric -
						   closed_form_exponential(RationalSeries::monomial(ring, 1, order), order, 2);
					   return detail::plain(verify_equal("cor-theta closed-form=recursion",
														 via_closed_form,
														 triangular_recursion_limit(order)));
				   }});
	return out;
}

/* Product expansions behind the two corollaries, including the record of
 * which triangular-sum normalization matches the product (the n>=0 one;
 * the n>=1 variant is the documented expected mismatch at q^0). */
inline std::vector<CatalogCase> cases_theta_products(int order)
{
	std::vector<CatalogCase> out;
	out.push_back({"theta-squares sum=product", false, [order] {
					   const RationalRing ring;
					   const RationalSeries minus_q = -RationalSeries::monomial(ring, 1, order);
					   const RationalSeries product =
						   q_factorial_infinite(ring, order) *
						   invert_unit(pochhammer_infinite(minus_q, order));
					   return detail::plain(verify_equal("theta-squares sum=product",
														 theta_alternating_squares(order), product));
				   }});
	out.push_back({"theta-triangular sum(n>=0)=product", false, [order] {
					   return detail::plain(verify_equal("theta-triangular sum(n>=0)=product",
														 theta_triangular(order),
														 triangular_product(order)));
				   }});
	out.push_back({"theta-triangular sum(n>=1) variant", true, [order] {
					   const RationalRing ring;
					   const RationalSeries variant =
						   theta_triangular(order) - RationalSeries::one(ring, order);
					   return detail::plain(verify_equal("theta-triangular sum(n>=1) variant",
														 variant, triangular_product(order)));
				   }});
	return out;
}

inline std::vector<CatalogCase> cases_lemma_euler(int order, const std::optional<Rational>& x = {})
{
	std::vector<CatalogCase> out;
	const RationalRing ring;
	std::vector<Rational> consts;
	if (x)
		consts.push_back(*x);
	else
		consts = {Rational(2), Rational(-1), Rational(1, 2), Rational(-3, 5)};
	for (const Rational& v : consts) {
		const std::string id = "lemma-euler x=" + v.str();
		out.push_back({id, false, [v, id, order, ring] {
						   return detail::plain(verify_equal(
							   id, euler_sum(ring, v, order) * pochhammer_infinite(ring, v, order),
							   RationalSeries::one(ring, order)));
					   }});
	}
	if (!x) {
		for (const bool negate : {false, true}) {
			const std::string id = negate ? "lemma-euler x=-q" : "lemma-euler x=q";
			out.push_back({id, false, [negate, id, order, ring] {
							   RationalSeries arg = RationalSeries::monomial(ring, 1, order);
							   if (negate) arg = -arg;
							   return detail::plain(verify_equal(
								   id, euler_sum(arg, order) * pochhammer_infinite(arg, order),
								   RationalSeries::one(ring, order)));
						   }});
		}
	}
	return out;
}

inline std::vector<CatalogCase> cases_lemma_s0(int order)
{
	std::vector<CatalogCase> out;
	out.push_back({"lemma-s0 divisor=weighted-euler", false, [order] {
					   return detail::plain(verify_equal("lemma-s0 divisor=weighted-euler",
														 sigma_series(0, order),
														 weighted_euler_s0(order)));
				   }});
	out.push_back({"lemma-s0 divisor=alternating", false, [order] {
					   return detail::plain(verify_equal("lemma-s0 divisor=alternating",
														 sigma_series(0, order),
														 t_series(1, order)));
				   }});
	return out;
}

inline std::vector<CatalogCase> cases_lemma_qgauss(
	int order, const std::optional<std::pair<Rational, Rational>>& pair = {})
{
	std::vector<std::pair<Rational, Rational>> grid;
	if (pair)
		grid.push_back(*pair);
	else
		grid = {{Rational(1, 2), Rational(1, 3)}, {Rational(-1), Rational(2, 5)},
				{Rational(3), Rational(-2)},      {Rational(1, 2), Rational(1, 2)},
				{Rational(2), Rational(3)},       {Rational(-3, 5), Rational(7)},
				{Rational(7), Rational(-1, 2)},   {Rational(1, 3), Rational(-1, 3)},
				{Rational(5), Rational(5)},       {Rational(-2), Rational(-2)}};
	std::vector<CatalogCase> out;
	for (const auto& bc : grid) {
		const std::string id =
			"lemma-qgauss b=" + bc.first.str() + " c=" + bc.second.str();
		out.push_back({id, false, [bc, id, order] {
						   auto [lhs, rhs] = q_gauss_pair(bc.first, bc.second, order);
						   return detail::plain(verify_equal(id, lhs, rhs));
					   }});
	}
	return out;
}

/* One entry per N; a mismatch reports the offending j in the power slot. */
inline std::vector<CatalogCase> cases_lemma_rootid(const std::optional<int>& only_n = {})
{
	std::vector<int> ns;
	if (only_n)
		ns.push_back(*only_n);
	else
		for (int n = 1; n <= 12; ++n) ns.push_back(n);
	std::vector<CatalogCase> out;
	for (int n : ns) {
		const std::string id = "lemma-rootid N=" + std::to_string(n);
		out.push_back({id, false, [n, id] {
						   VerificationReport report;
						   report.case_id = id;
						   report.order = 0;
						   report.match = true;
						   for (long j = -n + 1; j <= 2L * n; ++j) {
							   const auto [field_value, closed] = roots_of_unity_sum(n, j);
							   const CyclotomicField field(n);
							   if (field_value != field.from_rational(closed)) {
								   report.match = false;
								   report.mismatch = CoefficientMismatch{
									   static_cast<int>(j), field.to_string(field_value),
									   closed.str()};
								   break;
							   }
						   }
						   return detail::plain(std::move(report));
					   }});
	}
	return out;
}

inline std::vector<CatalogCase> cases_basis(int fit_order, int check_order,
											const std::optional<int>& only_j = {})
{
	std::vector<int> js;
	if (only_j)
		js.push_back(*only_j);
	else
		js = {1, 2, 3};
	std::vector<CatalogCase> out;
	for (int j : js) {
		const std::string id = "basis j=" + std::to_string(j);
		out.push_back({id, false, [j, id, fit_order, check_order] {
						   const int fit = std::max(
							   fit_order,
							   static_cast<int>(detail::candidate_monomials(j).size()));
						   const DivisorBasisExpression expr =
							   express_in_divisor_basis(j, fit, check_order);
						   VerificationReport report;
						   report.case_id = id;
						   report.order = check_order;
						   report.match = expr.status == DivisorBasisStatus::found;
						   if (j == 1 && expr.str() != "S_0") report.match = false;
						   if (expr.status == DivisorBasisStatus::verification_failure)
							   report.mismatch = CoefficientMismatch{
								   expr.first_recheck_mismatch, "refit combination", "T(j)"};
						   std::string detail_text;
						   switch (expr.status) {
							   case DivisorBasisStatus::found:
								   detail_text = "T(" + std::to_string(j) + ") = " + expr.str();
								   break;
							   case DivisorBasisStatus::no_solution:
								   detail_text = "no solution in the candidate set";
								   break;
							   case DivisorBasisStatus::verification_failure:
								   detail_text = "fit passed but recheck failed at q^" +
												 std::to_string(expr.first_recheck_mismatch);
								   break;
						   }
						   return CatalogResult{std::move(report), std::move(detail_text)};
					   }});
	}
	return out;
}

/* The full catalog behind `all`: every theorem grid, lemma, corollary
 * cross-check, the theta normalization record, and basis discovery. */
inline std::vector<CatalogCase> build_catalog(int order)
{
	std::vector<CatalogCase> out;
	auto append = [&out](std::vector<CatalogCase> more) {
		for (auto& c : more) out.push_back(std::move(c));
	};
	append(cases_poly(order));
	append(cases_exp(order));
	append(cases_periodic(order));
	append(cases_cor_alt(order, true));
	append(cases_cor_theta(order));
	append(cases_theta_products(order));
	append(cases_lemma_euler(std::max(order, 60)));
	append(cases_lemma_s0(std::max(order, 60)));
	append(cases_lemma_qgauss(order));
	append(cases_lemma_rootid());
	append(cases_basis(24, std::max(order, 80)));
	return out;
}

/* Sequential execution in catalog order; reports stay in that order, so
 * identical configurations print identically. */
inline std::vector<CatalogOutcome> run_catalog(const std::vector<CatalogCase>& cases)
{
	std::vector<CatalogOutcome> out;
	out.reserve(cases.size());
	for (const CatalogCase& c : cases) {
		Stopwatch watch;
		CatalogResult result = c.run();
		result.report.millis = watch.millis();
		out.push_back(CatalogOutcome{std::move(result.report), c.expect_mismatch,
									 std::move(result.detail)});
	}
	return out;
}

} // namespace qacs

#endif
