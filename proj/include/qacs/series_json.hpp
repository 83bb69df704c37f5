#ifndef QACS_SERIES_JSON_HPP
#define QACS_SERIES_JSON_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "qacs/cyclotomic.hpp"
#include "qacs/series.hpp"

namespace qacs {

/* Series serialize as a JSON array of coefficients, lowest degree first.
 * A rational coefficient is a decimal "p/q" string (never a float); a
 * cyclotomic coefficient is the array of the "p/q" residue entries. */

inline nlohmann::json series_to_json(const RationalSeries& s)
{
	nlohmann::json out = nlohmann::json::array();
	for (int m = 0; m <= s.order(); ++m) out.push_back(s[m].str());
	return out;
}

inline nlohmann::json series_to_json(const TruncatedSeries<CyclotomicField>& s)
{
	nlohmann::json out = nlohmann::json::array();
	for (int m = 0; m <= s.order(); ++m) {
		nlohmann::json entry = nlohmann::json::array();
		for (const Rational& r : s[m].residue()) entry.push_back(r.str());
		out.push_back(std::move(entry));
	}
	return out;
}

inline RationalSeries series_from_json(const RationalRing& ring, const nlohmann::json& j)
{
	if (!j.is_array() || j.empty())
		throw std::invalid_argument("series JSON must be a non-empty array");
	RationalSeries out(ring, static_cast<int>(j.size()) - 1);
	for (int m = 0; m < static_cast<int>(j.size()); ++m)
		out.coeff(m) = Rational::parse(j.at(static_cast<std::size_t>(m)).get<std::string>());
	return out;
}

inline TruncatedSeries<CyclotomicField> series_from_json(const CyclotomicField& field,
														 const nlohmann::json& j)
{
	if (!j.is_array() || j.empty())
		throw std::invalid_argument("series JSON must be a non-empty array");
	TruncatedSeries<CyclotomicField> out(field, static_cast<int>(j.size()) - 1);
	for (int m = 0; m < static_cast<int>(j.size()); ++m) {
		const nlohmann::json& entry = j.at(static_cast<std::size_t>(m));
		if (!entry.is_array() || static_cast<int>(entry.size()) != field.degree())
			throw std::invalid_argument("cyclotomic coefficient needs phi(N) residue entries");
		std::vector<Rational> residue;
		residue.reserve(entry.size());
		for (const auto& part : entry) residue.push_back(Rational::parse(part.get<std::string>()));
		out.coeff(m) = field.from_residue(std::move(residue));
	}
	return out;
}

} // namespace qacs

#endif
