#pragma once

// Test helpers and independent oracles. Nothing here calls the code paths
// the oracles are used to check.

#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzy_ershov/trace.hpp"

namespace fuzzy_ershov::testing {

inline UnitRational q(std::int64_t p, std::int64_t d = 1)
{
	return UnitRational(p, d);
}

inline std::vector<UnitRational> values(std::string_view text)
{
	std::istringstream in{std::string(text)};
	std::vector<UnitRational> out;
	std::string tok;
	while (in >> tok)
		out.push_back(parse_rational(tok));
	return out;
}

inline ApproximationTrace trace_of(std::initializer_list<std::string_view> rows,
                                   Shape shape = Shape::Delta2)
{
	std::vector<std::vector<UnitRational>> table;
	for (auto r : rows)
		table.push_back(values(r));
	return validate(Table::from_rows(table), shape);
}

inline std::string row_text(const ApproximationTrace &t, std::size_t x)
{
	std::string out;
	for (const auto &v : t.row(x))
		out += (out.empty() ? "" : " ") + v.str();
	return out;
}

inline std::string serialized(const ApproximationTrace &t)
{
	std::ostringstream os;
	write_trace(os, t);
	return os.str();
}

/* Sign recursion evaluated case by case, straight from the definition. */
inline std::vector<int> oracle_signs(std::span<const UnitRational> row, int initial)
{
	std::vector<int> m{initial};
	for (std::size_t s = 0; s + 1 < row.size(); s++) {
		const UnitRational &now = row[s], &next = row[s + 1];
		int cur = m.back();
		if (cur == 1)
			m.push_back(now <= next ? 1 : -1);
		else
			m.push_back(now >= next ? -1 : 1);
	}
	return m;
}

inline std::size_t oracle_changes(std::span<const UnitRational> row, int initial)
{
	auto m = oracle_signs(row, initial);
	std::size_t n = 0;
	for (std::size_t s = 0; s + 1 < m.size(); s++)
		n += m[s] != m[s + 1];
	return n;
}

inline std::size_t oracle_value_changes(std::span<const UnitRational> row)
{
	std::size_t n = 0;
	for (std::size_t s = 0; s + 1 < row.size(); s++)
		n += row[s] != row[s + 1];
	return n;
}

/* Every p/d with d <= bound and p/d below `sup`, by double loop. */
inline std::set<UnitRational> oracle_grid_below(const UnitRational &sup, std::int64_t bound)
{
	std::set<UnitRational> out;
	for (std::int64_t d = 1; d <= bound; d++)
		for (std::int64_t p = 0; p <= d; p++)
			if (UnitRational(p, d) < sup)
				out.insert(UnitRational(p, d));
	return out;
}

inline std::set<UnitRational> oracle_grid_above(const UnitRational &inf, std::int64_t bound)
{
	std::set<UnitRational> out;
	for (std::int64_t d = 1; d <= bound; d++)
		for (std::int64_t p = 0; p <= d; p++)
			if (inf < UnitRational(p, d))
				out.insert(UnitRational(p, d));
	return out;
}

} // namespace fuzzy_ershov::testing
