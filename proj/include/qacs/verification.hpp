#ifndef QACS_VERIFICATION_HPP
#define QACS_VERIFICATION_HPP

#include <chrono>
#include <optional>
#include <string>
#include <utility>

#include "qacs/recurrence.hpp"
#include "qacs/series.hpp"

namespace qacs {

struct CoefficientMismatch {
	int power = 0;
	std::string lhs;
	std::string rhs;
};

/* Outcome of one exact series comparison; match is true exactly when no
 * mismatch was found up to the compared order. */
struct VerificationReport {
	std::string case_id;
	int order = 0;
	bool match = false;
	std::optional<CoefficientMismatch> mismatch;
	long long millis = 0;
};

template <CoefficientRing R>
VerificationReport verify_equal(std::string case_id, const TruncatedSeries<R>& lhs,
								const TruncatedSeries<R>& rhs)
{
	VerificationReport report;
	report.case_id = std::move(case_id);
	report.order = std::min(lhs.order(), rhs.order());
	if (const auto power = first_mismatch(lhs, rhs)) {
		report.match = false;
		report.mismatch = CoefficientMismatch{*power, lhs.ring().to_string(lhs[*power]),
											  rhs.ring().to_string(rhs[*power])};
	} else {
		report.match = true;
	}
	return report;
}

/* A fully materialized comparison between two series expressions for the
 * same recursion limit. */
struct LimitIdentityCase {
	std::string id;
	RecurrenceSpec spec;
	int order = 0;
	std::string lhs_description;
	std::string rhs_description;
	RationalSeries lhs;
	RationalSeries rhs;
};

inline VerificationReport verify_case(const LimitIdentityCase& c)
{
	return verify_equal(c.id, c.lhs, c.rhs);
}

/* Small helper for filling VerificationReport::millis. */
class Stopwatch {
  public:
	Stopwatch() : start_(std::chrono::steady_clock::now()) {}

	long long millis() const
	{
		return std::chrono::duration_cast<std::chrono::milliseconds>(
				   std::chrono::steady_clock::now() - start_)
			.count();
	}

  private:
	std::chrono::steady_clock::time_point start_;
};

} // namespace qacs

#endif
