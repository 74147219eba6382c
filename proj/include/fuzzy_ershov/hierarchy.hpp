#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fuzzy_ershov/mindchange.hpp"
#include "fuzzy_ershov/trace.hpp"

namespace fuzzy_ershov {

/*
 * Observed levels of a finite trace. These are lower-bound certificates: a
 * finite horizon can show that a trace is not consistent with level n-1,
 * never that the approximated set belongs to level n.
 *
 * observed_n    = max_x sigma changes + 1  (n-c.e. reading, anchor 0)
 * observed_co_n = max_x pi changes + 1     (co-n-c.e. reading, anchor 1)
 */
struct LevelReport {
	std::vector<std::size_t> sigma_changes;
	std::vector<std::size_t> pi_changes;
	std::vector<std::size_t> updates;
	std::size_t observed_n;
	std::size_t observed_co_n;
	/* max_x updates; only for traces whose values satisfy Sigma1 ([n]_1 reading) */
	std::optional<std::size_t> observed_update_level;
	bool anchor_zero;
	bool anchor_one;

	bool consistent_with(std::size_t n) const { return anchor_zero && observed_n <= n; }
	bool co_consistent_with(std::size_t n) const { return anchor_one && observed_co_n <= n; }
};

LevelReport classify(const ApproximationTrace &a);

/* g(x,s) = 1 if f(x,s) > 1/2 else 0. */
ApproximationTrace threshold_to_crisp(const ApproximationTrace &a);

/*
 * Classifies a Crisp trace with anchor 0, checking that its sigma change
 * count equals max(flips - 1, 0) for every x. Throws WrongShapeError or
 * LevelError on a non-crisp or unanchored input.
 */
LevelReport embed_crisp(const ApproximationTrace &a);

/* Natural-number counting function h(x,s) with every value below `bound`. */
struct CountingTrace {
	std::size_t elements;
	std::size_t stages;
	std::uint64_t bound;
	std::vector<std::uint64_t> values;

	std::uint64_t at(std::size_t x, std::size_t s) const { return values.at(x * stages + s); }
	std::uint64_t &at(std::size_t x, std::size_t s) { return values.at(x * stages + s); }
};

struct CountingCheck {
	enum class Failure { None, Bound, NotNonincreasing, NoDropAtFlip };

	Failure failure = Failure::None;
	std::size_t x = 0;
	/* for NotNonincreasing / NoDropAtFlip: the step s -> s+1 */
	std::size_t s = 0;

	bool valid() const { return failure == Failure::None; }
	std::string describe() const;
};

/*
 * Checks h against the sigma profile of a: every value below the bound,
 * h(x,s+1) <= h(x,s), and h(x,s+1) != h(x,s) whenever the sign flips
 * between s and s+1. Throws DimensionError on mismatched shapes.
 */
CountingCheck verify_counting_function(const ApproximationTrace &a, const CountingTrace &h);

/* h starts at observed_n - 1 and drops by one at each flip; bound observed_n. */
CountingTrace build_counting_witness(const ApproximationTrace &a);

/* CSV: header, one row per x, then a summary row. */
void write_level_csv(std::ostream &os, const LevelReport &r);

} // namespace fuzzy_ershov
