#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fuzzy_ershov/trace.hpp"

namespace fuzzy_ershov {

enum class Variant { Sigma, Pi };

/*
 * Per-(x,s) monotonicity sign of a trace. The sign starts at +1 (Sigma) or
 * -1 (Pi); a strict decrease flips +1 to -1, a strict increase flips -1 to
 * +1, and ties carry the sign forward.
 */
struct MindChangeProfile {
	Variant variant;
	std::size_t elements;
	std::size_t stages;
	std::vector<std::int8_t> signs;
	/* stages s with sign(x,s+1) != sign(x,s), ascending */
	std::vector<std::vector<std::size_t>> change_stages;

	int sign(std::size_t x, std::size_t s) const { return signs.at(x * stages + s); }
	std::size_t change_count(std::size_t x) const { return change_stages.at(x).size(); }
	std::size_t max_change_count() const;
};

/* Stages s with f(x,s+1) != f(x,s). */
struct UpdateProfile {
	std::vector<std::vector<std::size_t>> update_stages;

	std::size_t update_count(std::size_t x) const { return update_stages.at(x).size(); }
	std::size_t max_update_count() const;
};

MindChangeProfile sigma_profile(const ApproximationTrace &a);
MindChangeProfile pi_profile(const ApproximationTrace &a);
UpdateProfile update_profile(const ApproximationTrace &a);

/*
 * |{t <= s : sign(x,t+1) != sign(x,t)}|. The term t = s looks one stage
 * ahead; at s = S-1 no flip is assumed past the horizon. Throws
 * std::out_of_range for s >= S.
 */
std::size_t change_count_prefix(const MindChangeProfile &p, std::size_t x, std::size_t s);

/* One line per x: "x=<x> variant=<v> signs=<+/- string> changes=<s,..> count=<n>" */
void write_profile(std::ostream &os, const MindChangeProfile &p);

} // namespace fuzzy_ershov
