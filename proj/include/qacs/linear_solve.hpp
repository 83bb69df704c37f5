#ifndef QACS_LINEAR_SOLVE_HPP
#define QACS_LINEAR_SOLVE_HPP

#include <utility>
#include <vector>

#include "qacs/rational.hpp"

namespace qacs {

struct LinearSolution {
	bool consistent = false;
	std::vector<Rational> values; // one per column; free columns are zero
	int rank = 0;
	std::vector<int> free_columns;
};

/* Exact Gauss-Jordan elimination over Q for a (possibly over- or
 * under-determined) system A x = b. Pivoting picks the first nonzero
 * entry per column, so the reduction and the returned solution are
 * deterministic; free variables are set to zero. Sizes here are tiny
 * (dozens of rows, at most a dozen or so columns). */
inline LinearSolution solve_rational_system(std::vector<std::vector<Rational>> a,
											std::vector<Rational> b)
{
	const int rows = static_cast<int>(a.size());
	const int cols = rows > 0 ? static_cast<int>(a[0].size()) : 0;
	if (static_cast<int>(b.size()) != rows)
		throw std::invalid_argument("solve_rational_system: rhs size mismatch");
	for (const auto& row : a)
		if (static_cast<int>(row.size()) != cols)
			throw std::invalid_argument("solve_rational_system: ragged matrix");

	LinearSolution out;
	out.values.assign(static_cast<std::size_t>(cols), Rational());

	std::vector<int> pivot_col_of_row;
	std::vector<bool> is_pivot_col(static_cast<std::size_t>(cols), false);
	int pivot_row = 0;
	for (int col = 0; col < cols && pivot_row < rows; ++col) {
		int found = -1;
		for (int r = pivot_row; r < rows; ++r) {
			if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
				found = r;
				break;
			}
		}
		if (found < 0) continue;
		std::swap(a[static_cast<std::size_t>(found)], a[static_cast<std::size_t>(pivot_row)]);
		std::swap(b[static_cast<std::size_t>(found)], b[static_cast<std::size_t>(pivot_row)]);

		const Rational inv =
			a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(col)].inverse();
		for (int cc = col; cc < cols; ++cc)
			a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(cc)] *= inv;
		b[static_cast<std::size_t>(pivot_row)] *= inv;

		for (int r = 0; r < rows; ++r) {
			if (r == pivot_row) continue;
			const Rational factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
			if (factor.is_zero()) continue;
			for (int cc = col; cc < cols; ++cc)
				a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
					factor * a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(cc)];
			b[static_cast<std::size_t>(r)] -= factor * b[static_cast<std::size_t>(pivot_row)];
		}
		pivot_col_of_row.push_back(col);
		is_pivot_col[static_cast<std::size_t>(col)] = true;
		++pivot_row;
	}
	for (int col = 0; col < cols; ++col)
		if (!is_pivot_col[static_cast<std::size_t>(col)]) out.free_columns.push_back(col);

	out.rank = pivot_row;
	for (int r = pivot_row; r < rows; ++r)
		if (!b[static_cast<std::size_t>(r)].is_zero()) return out; // inconsistent

	out.consistent = true;
	for (int r = 0; r < pivot_row; ++r)
		out.values[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(r)])] =
			b[static_cast<std::size_t>(r)];
	return out;
}

} // namespace qacs

#endif
