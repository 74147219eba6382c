#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "fuzzy_ershov/numeric.hpp"

namespace fuzzy_ershov {

enum class Shape { Delta2, Sigma1, Pi1, Crisp };

std::string_view to_string(Shape shape) noexcept;
Shape parse_shape(std::string_view text);

/* Total X-by-S table of unit rationals, row-major by element. */
class Table {
public:
	Table(std::size_t elements, std::size_t stages, const UnitRational &fill = {});

	/* Rows must be non-empty and of equal length. */
	static Table from_rows(const std::vector<std::vector<UnitRational>> &rows);

	std::size_t elements() const noexcept { return elements_; }
	std::size_t stages() const noexcept { return stages_; }

	const UnitRational &at(std::size_t x, std::size_t s) const { return cells_[index(x, s)]; }
	UnitRational &at(std::size_t x, std::size_t s) { return cells_[index(x, s)]; }

	std::span<const UnitRational> row(std::size_t x) const
	{
		return {cells_.data() + index(x, 0), stages_};
	}

	friend bool operator==(const Table &, const Table &) = default;

private:
	std::size_t index(std::size_t x, std::size_t s) const;

	std::size_t elements_;
	std::size_t stages_;
	std::vector<UnitRational> cells_;
};

/*
 * A finite-horizon approximation f(x,s), x < X, s < S, tagged with a shape
 * whose invariants have been checked. Only validate() creates one.
 */
class ApproximationTrace {
public:
	const Table &table() const noexcept { return table_; }
	Shape shape() const noexcept { return shape_; }
	std::size_t elements() const noexcept { return table_.elements(); }
	std::size_t stages() const noexcept { return table_.stages(); }

	const UnitRational &at(std::size_t x, std::size_t s) const { return table_.at(x, s); }
	std::span<const UnitRational> row(std::size_t x) const { return table_.row(x); }

	friend bool operator==(const ApproximationTrace &, const ApproximationTrace &) = default;

	friend ApproximationTrace validate(Table raw, Shape claimed);

private:
	ApproximationTrace(Table t, Shape s) : table_(std::move(t)), shape_(s) {}

	Table table_;
	Shape shape_;
};

/* Throws ShapeError naming the first (x, s) that breaks the claimed shape. */
ApproximationTrace validate(Table raw, Shape claimed);

/* True iff the table satisfies the invariants of the shape. */
bool satisfies(const Table &table, Shape shape);

ApproximationTrace union_of(const ApproximationTrace &a, const ApproximationTrace &b);
ApproximationTrace intersection_of(const ApproximationTrace &a, const ApproximationTrace &b);
ApproximationTrace complement(const ApproximationTrace &a);

/* Keeps stages 0..stages-1; the shape tag is preserved. */
ApproximationTrace truncate(const ApproximationTrace &a, std::size_t stages);

struct LimitSnapshot {
	std::vector<UnitRational> final_values;
	/* least s with f(x,t) = f(x,S-1) for all t >= s */
	std::vector<std::size_t> stabilization;
	std::size_t horizon;

	bool stabilized_before_horizon(std::size_t x) const
	{
		return stabilization[x] + 1 < horizon;
	}
};

LimitSnapshot limit_snapshot(const ApproximationTrace &a);

/*
 * Grid rationals (denominator <= max_denominator) in the finite-horizon
 * left cut {q : q < f(x,s) for some s < S}, ascending. Requires Sigma1.
 */
std::vector<UnitRational> enumerate_left_cut(const ApproximationTrace &a, std::size_t x,
                                             std::uint64_t max_denominator);

/* Grid rationals q with q > f(x,s) for some s < S, ascending. Requires Pi1. */
std::vector<UnitRational> enumerate_right_cut(const ApproximationTrace &a, std::size_t x,
                                              std::uint64_t max_denominator);

/* The Farey sequence of order n: all reduced fractions in [0,1], ascending. */
std::vector<UnitRational> farey_sequence(std::uint64_t order);

/* A table read from text before its claimed shape is checked. */
struct RawTrace {
	Table table;
	Shape claimed;
};

/*
 * Trace text format:
 *   trace X=<int> S=<int> shape=<Delta2|Sigma1|Pi1|Crisp>
 * followed by X lines of S whitespace-separated rationals.
 */
RawTrace read_raw_trace(std::istream &is);
ApproximationTrace read_trace(std::istream &is);
void write_trace(std::ostream &os, const ApproximationTrace &a);

} // namespace fuzzy_ershov
