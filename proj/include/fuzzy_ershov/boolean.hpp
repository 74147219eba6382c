#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzy_ershov/trace.hpp"

namespace fuzzy_ershov {

/*
 * How the decomposition counts mind changes "up to stage s".
 *
 * Lookahead: c(s) = |{t <= s : sign(t+1) != sign(t)}|, the literal index
 *   range; c(s) already reflects the comparison of f(s) with f(s+1). On a
 *   finite table, no flip is assumed past stage S-1.
 * Settled:   c(s) = |{t < s : sign(t+1) != sign(t)}|, the changes visible
 *   once f(s) is known.
 *
 * Lookahead freezes each A_i one stage before the peak of its rising run,
 * so when the trace ends on a falling run that stays above the pre-peak
 * value the recomposed limit is wrong (e.g. 0,1/4,1,1/2,1/2 recomposes to a
 * limit of 1/4). Settled recomposes every admissible trace to itself.
 */
enum class PrefixCounting { Settled, Lookahead };

std::string_view to_string(PrefixCounting c) noexcept;
PrefixCounting parse_prefix_counting(std::string_view text);

struct ComponentPair {
	ApproximationTrace a;
	ApproximationTrace b;

	friend bool operator==(const ComponentPair &, const ComponentPair &) = default;
};

/*
 * C = (A_1 ∩ ~B_1) ∪ ... ∪ (A_{k+1} ∩ ~B_{k+1}) with n in {2k+1, 2k+2}.
 * Every component is Sigma1; for odd n, B_{k+1} is identically 0.
 */
class BooleanDecomposition {
public:
	/* Checks the invariants above and that all components share X and S. */
	static BooleanDecomposition from_pairs(std::size_t n, std::vector<ComponentPair> pairs);

	std::size_t level() const noexcept { return n_; }
	std::size_t k() const noexcept { return (n_ - 1) / 2; }
	const std::vector<ComponentPair> &pairs() const noexcept { return pairs_; }
	std::size_t elements() const { return pairs_.front().a.elements(); }
	std::size_t stages() const { return pairs_.front().a.stages(); }

	friend bool operator==(const BooleanDecomposition &, const BooleanDecomposition &) = default;

private:
	BooleanDecomposition(std::size_t n, std::vector<ComponentPair> pairs)
	: n_(n)
	, pairs_(std::move(pairs))
	{}

	std::size_t n_;
	std::vector<ComponentPair> pairs_;
};

/*
 * Builds the pairs from f: A_i is 0 while the prefix count is below 2i-2,
 * copies f while it equals 2i-2, then freezes; B_i is 0 below 2i-1, copies
 * 1-f at 2i-1, then is 1. Throws LevelError naming x if f(x,0) != 0 or x
 * has more than n-1 sigma changes.
 */
BooleanDecomposition decompose(const ApproximationTrace &f, std::size_t n,
                               PrefixCounting counting = PrefixCounting::Settled);

/* h(x,s) = max_i min(A_i(x,s), 1 - B_i(x,s)); shape Delta2. */
ApproximationTrace recompose(const BooleanDecomposition &d);

/* X_s = {i : 1 - B_i(x,s) < A_i(x,s)} for every stage s, indices 1-based. */
std::vector<std::vector<std::size_t>> barrier_history(const BooleanDecomposition &d,
                                                      std::size_t x);

enum class TheoremCheck { LimitEquality, MindChangeBound, BarrierMonotone, BarrierSize };

std::string_view to_string(TheoremCheck c) noexcept;

enum class LimitStatus { Match, Mismatch, Inconclusive };

struct TheoremReport {
	struct Failure {
		TheoremCheck check;
		std::size_t x;
		std::size_t s;
		std::string detail;
	};

	std::size_t n;
	std::size_t k;
	PrefixCounting counting;
	std::vector<UnitRational> input_finals;
	std::vector<UnitRational> recomposed_finals;
	/* Inconclusive for x whose input has not stabilized before stage S-1 */
	std::vector<LimitStatus> limits;
	std::vector<std::size_t> recomposed_sigma_changes;
	std::size_t recomposition_observed_n;
	/* [x][s] -> X_s */
	std::vector<std::vector<std::vector<std::size_t>>> barrier_history;
	std::vector<Failure> failures;

	bool passed() const { return failures.empty(); }
	bool passed(TheoremCheck c) const;
	/* |X_{S-1}| may not exceed this: k+1 for even n, k for odd n */
	std::size_t barrier_bound() const { return n % 2 == 0 ? k + 1 : k; }
};

/*
 * decompose, recompose, then check limit equality on stabilized x, the
 * recomposition's sigma changes <= n-1 per x, X_s ⊆ X_{s+1}, and the size
 * of X at the horizon. Check failures are reported, not thrown; a trace
 * that violates decompose's precondition throws LevelError.
 */
TheoremReport verify_theorem(const ApproximationTrace &f, std::size_t n,
                             PrefixCounting counting = PrefixCounting::Settled);

/* Manifest line "decomp n=<n> k=<k> pairs=<k+1>", then A_1, B_1, A_2, ... as traces. */
void write_decomposition(std::ostream &os, const BooleanDecomposition &d);
BooleanDecomposition read_decomposition(std::istream &is);

void write_theorem_report(std::ostream &os, const TheoremReport &r, bool color = false);

} // namespace fuzzy_ershov
