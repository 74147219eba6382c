#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "fuzzy_ershov/trace.hpp"

namespace fuzzy_ershov {

/*
 * Finite stand-in for the halting problem: machine x halts at a stage, or
 * never. Stage 0 is the anchor and stage 1 always posts the 1/2 guess, so
 * halting stages start at 2.
 */
class ToyHaltingTable {
public:
	struct Entry {
		std::size_t machine;
		std::optional<std::size_t> halts_at;
	};

	/* Machines 0..X-1 must each appear exactly once; entries may come in any order. */
	static ToyHaltingTable from_entries(std::vector<Entry> entries);

	std::size_t machines() const noexcept { return halts_at_.size(); }
	std::optional<std::size_t> halts_at(std::size_t x) const { return halts_at_.at(x); }
	bool halts_within(std::size_t x, std::size_t horizon) const
	{
		auto h = halts_at(x);
		return h && *h < horizon;
	}

private:
	std::vector<std::optional<std::size_t>> halts_at_;
};

/* Lines "x=<int> halts_at=<int|NEVER>". */
ToyHaltingTable read_halting_table(std::istream &is);
void write_halting_table(std::ostream &os, const ToyHaltingTable &t);

/* h(x,0) = 0; for s >= 1, h(x,s) = 1 once x has halted by s, else 1/2. Sigma1. */
ApproximationTrace harkleroad(const ToyHaltingTable &table, std::size_t horizon);

struct OscillatorSchedule {
	UnitRational center;
	UnitRational amplitude;
	std::size_t oscillation_count;
};

/*
 * Single-element trace 0, c+a, c-a, c+a, ... with oscillation_count up/down
 * swings, then constant at c-a. It has 2*count - 1 sigma changes.
 * Throws ScheduleError if c±a leaves [0,1], a = 0, count = 0, or
 * horizon < 2*count + 1.
 */
ApproximationTrace oscillator(const OscillatorSchedule &sched, std::size_t horizon);

/*
 * Seeded Delta2 trace with anchor 0, at most n-1 sigma changes per x, and
 * values on the grid {j/denominator}.
 */
ApproximationTrace random_bounded_trace(std::uint64_t seed, std::size_t elements,
                                        std::size_t stages, std::size_t n,
                                        std::uint64_t denominator = 16);

/* Unconstrained seeded Delta2 trace on the grid {j/denominator}. */
ApproximationTrace random_delta2_trace(std::uint64_t seed, std::size_t elements,
                                       std::size_t stages, std::uint64_t denominator = 16);

/* Seeded nondecreasing trace from 0 on the grid {j/denominator}. */
ApproximationTrace random_sigma1_trace(std::uint64_t seed, std::size_t elements,
                                       std::size_t stages, std::uint64_t denominator = 16);

/* Seeded crisp trace with anchor 0; `flip_percent` is the chance of a flip per step. */
ApproximationTrace random_crisp_trace(std::uint64_t seed, std::size_t elements,
                                      std::size_t stages, unsigned flip_percent = 30);

/* Seeded machine table; each machine halts at a stage in [2, max_stage] or never. */
ToyHaltingTable random_halting_table(std::uint64_t seed, std::size_t machines,
                                     std::size_t max_stage);

/*
 * Dyadic reals from a binary digit string d_1 d_2 ... d_L ('0'/'1').
 * left_ce_real: Sigma1, f(s) = sum_{j <= min(s,L)} d_j 2^-j, limit 0.d_1...d_L.
 * right_ce_real: Pi1, f(s) = 1 - sum_{j <= min(s,L), d_j = 0} 2^-j; unread
 * digits count as 1, so the limit is 0.d_1...d_L111... = value + 2^-L.
 * complement(right_ce_real(~d)) = left_ce_real(d) stage by stage.
 */
ApproximationTrace left_ce_real(std::string_view digits, std::size_t horizon);
ApproximationTrace right_ce_real(std::string_view digits, std::size_t horizon);

} // namespace fuzzy_ershov
