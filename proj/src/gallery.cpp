#include "fuzzy_ershov/gallery.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fuzzy_ershov/mindchange.hpp"

namespace fuzzy_ershov {

ToyHaltingTable ToyHaltingTable::from_entries(std::vector<Entry> entries)
{
	ToyHaltingTable t;
	if (entries.empty())
		throw ParseError(ParseError::Kind::Structure, "halting table has no machines");
	t.halts_at_.resize(entries.size());
	std::vector<bool> seen(entries.size(), false);
	for (const Entry &e : entries) {
		if (e.machine >= entries.size() || seen[e.machine])
			throw ParseError(ParseError::Kind::Structure,
			                 "machine indices must be 0.." + std::to_string(entries.size() - 1) +
			                     ", each once (offending x=" + std::to_string(e.machine) + ")");
		if (e.halts_at && *e.halts_at < 2)
			throw ParseError(ParseError::Kind::OutOfRange,
			                 "machine " + std::to_string(e.machine) +
			                     ": halting stages start at 2");
		seen[e.machine] = true;
		t.halts_at_[e.machine] = e.halts_at;
	}
	return t;
}

ToyHaltingTable read_halting_table(std::istream &is)
{
	std::vector<ToyHaltingTable::Entry> entries;
	std::string line;
	std::size_t lineno = 0;
	while (std::getline(is, line)) {
		lineno++;
		if (line.find_first_not_of(" \t\r") == std::string::npos)
			continue;
		std::istringstream in(line);
		std::string xs, hs, extra;
		in >> xs >> hs;
		auto bad = [&] {
			return ParseError(ParseError::Kind::Malformed,
			                  "line " + std::to_string(lineno) +
			                      ": expected 'x=<int> halts_at=<int|NEVER>'");
		};
		if ((in >> extra) || xs.rfind("x=", 0) != 0 || hs.rfind("halts_at=", 0) != 0)
			throw bad();
		std::string xd = xs.substr(2), hd = hs.substr(9);
		auto digits = [](const std::string &s) {
			return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
		};
		if (!digits(xd) || (hd != "NEVER" && !digits(hd)))
			throw bad();
		ToyHaltingTable::Entry e{std::stoul(xd), std::nullopt};
		if (hd != "NEVER")
			e.halts_at = std::stoul(hd);
		entries.push_back(e);
	}
	return ToyHaltingTable::from_entries(std::move(entries));
}

void write_halting_table(std::ostream &os, const ToyHaltingTable &t)
{
	for (std::size_t x = 0; x < t.machines(); x++) {
		os << "x=" << x << " halts_at=";
		if (auto h = t.halts_at(x))
			os << *h;
		else
			os << "NEVER";
		os << '\n';
	}
}

ApproximationTrace harkleroad(const ToyHaltingTable &table, std::size_t horizon)
{
	if (horizon < 2)
		throw ScheduleError("harkleroad traces need at least 2 stages");
	Table t(table.machines(), horizon);
	for (std::size_t x = 0; x < table.machines(); x++) {
		auto h = table.halts_at(x);
		for (std::size_t s = 1; s < horizon; s++)
			t.at(x, s) = h && *h <= s ? UnitRational::one() : UnitRational::half();
	}
	return validate(std::move(t), Shape::Sigma1);
}

ApproximationTrace oscillator(const OscillatorSchedule &sched, std::size_t horizon)
{
	if (sched.oscillation_count == 0)
		throw ScheduleError("oscillation count must be positive");
	if (sched.amplitude.is_zero())
		throw ScheduleError("amplitude must be positive");
	if (horizon < 2 * sched.oscillation_count + 1)
		throw ScheduleError("horizon " + std::to_string(horizon) + " too short for " +
		                    std::to_string(sched.oscillation_count) + " oscillations");

	const Integer cn = sched.center.numerator(), cd = sched.center.denominator();
	const Integer an = sched.amplitude.numerator(), ad = sched.amplitude.denominator();
	UnitRational high, low;
	try {
		high = UnitRational(cn * ad + an * cd, cd * ad);
		low = UnitRational(cn * ad - an * cd, cd * ad);
	} catch (const ParseError &) {
		throw ScheduleError("center " + sched.center.str() + " +/- amplitude " +
		                    sched.amplitude.str() + " leaves the unit interval");
	}

	Table t(1, horizon);
	for (std::size_t s = 1; s < horizon; s++) {
		bool rising = s <= 2 * sched.oscillation_count && s % 2 == 1;
		t.at(0, s) = rising ? high : low;
	}
	return validate(std::move(t), Shape::Delta2);
}

namespace {

class Rng {
public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}

	/* uniform on [lo, hi]; modulo keeps output identical across standard libraries */
	std::uint64_t between(std::uint64_t lo, std::uint64_t hi)
	{
		return lo + engine_() % (hi - lo + 1);
	}

	bool percent(unsigned p) { return between(0, 99) < p; }

private:
	std::mt19937_64 engine_;
};

UnitRational grid(std::uint64_t j, std::uint64_t denominator)
{
	return UnitRational(Integer(j), Integer(denominator));
}

void require_grid(std::uint64_t denominator)
{
	if (denominator == 0)
		throw ScheduleError("grid denominator must be positive");
}

} // namespace

ApproximationTrace random_bounded_trace(std::uint64_t seed, std::size_t elements,
                                        std::size_t stages, std::size_t n,
                                        std::uint64_t denominator)
{
	if (n == 0)
		throw ScheduleError("level must be at least 1");
	require_grid(denominator);
	Rng rng(seed);
	Table t(elements, stages);
	for (std::size_t x = 0; x < elements; x++) {
		std::size_t target = rng.percent(50) ? n - 1 : rng.between(0, n - 1);
		std::size_t flips = 0;
		int sign = 1;
		std::uint64_t j = 0;
		for (std::size_t s = 1; s < stages; s++) {
			bool flip = flips < target && rng.percent(25);
			if (flip && sign == 1 && j > 0) {
				j = rng.between(0, j - 1);
				sign = -1;
				flips++;
			} else if (flip && sign == -1 && j < denominator) {
				j = rng.between(j + 1, denominator);
				sign = 1;
				flips++;
			} else if (sign == 1) {
				j = std::min(denominator, j + rng.between(0, 2));
			} else {
				j -= std::min(j, rng.between(0, 2));
			}
			t.at(x, s) = grid(j, denominator);
		}
	}
	auto trace = validate(std::move(t), Shape::Delta2);
	if (sigma_profile(trace).max_change_count() + 1 > n)
		throw std::logic_error("random_bounded_trace exceeded its level");
	return trace;
}

ApproximationTrace random_delta2_trace(std::uint64_t seed, std::size_t elements,
                                       std::size_t stages, std::uint64_t denominator)
{
	require_grid(denominator);
	Rng rng(seed);
	Table t(elements, stages);
	for (std::size_t x = 0; x < elements; x++)
		for (std::size_t s = 0; s < stages; s++)
			t.at(x, s) = grid(rng.between(0, denominator), denominator);
	return validate(std::move(t), Shape::Delta2);
}

ApproximationTrace random_sigma1_trace(std::uint64_t seed, std::size_t elements,
                                       std::size_t stages, std::uint64_t denominator)
{
	require_grid(denominator);
	Rng rng(seed);
	Table t(elements, stages);
	for (std::size_t x = 0; x < elements; x++) {
		std::uint64_t j = 0;
		for (std::size_t s = 1; s < stages; s++) {
			if (rng.percent(40))
				j = std::min(denominator, j + rng.between(1, 3));
			t.at(x, s) = grid(j, denominator);
		}
	}
	return validate(std::move(t), Shape::Sigma1);
}

ApproximationTrace random_crisp_trace(std::uint64_t seed, std::size_t elements,
                                      std::size_t stages, unsigned flip_percent)
{
	Rng rng(seed);
	Table t(elements, stages);
	for (std::size_t x = 0; x < elements; x++) {
		bool on = false;
		for (std::size_t s = 1; s < stages; s++) {
			if (rng.percent(flip_percent))
				on = !on;
			t.at(x, s) = on ? UnitRational::one() : UnitRational::zero();
		}
	}
	return validate(std::move(t), Shape::Crisp);
}

ToyHaltingTable random_halting_table(std::uint64_t seed, std::size_t machines,
                                     std::size_t max_stage)
{
	if (max_stage < 2)
		throw ScheduleError("halting stages start at 2");
	Rng rng(seed);
	std::vector<ToyHaltingTable::Entry> entries;
	for (std::size_t x = 0; x < machines; x++) {
		ToyHaltingTable::Entry e{x, std::nullopt};
		if (rng.percent(65))
			e.halts_at = rng.between(2, max_stage);
		entries.push_back(e);
	}
	return ToyHaltingTable::from_entries(std::move(entries));
}

namespace {

void require_digits(std::string_view digits)
{
	if (digits.find_first_not_of("01") != std::string_view::npos)
		throw ParseError(ParseError::Kind::Malformed,
		                 "dyadic digits must be 0 or 1: '" + std::string(digits) + "'");
}

/* sum over the first m digits equal to `bit`, as a fraction over 2^m */
Integer digit_sum(std::string_view digits, std::size_t m, char bit)
{
	Integer num = 0;
	for (std::size_t j = 0; j < m; j++)
		num = 2 * num + (digits[j] == bit ? 1 : 0);
	return num;
}

} // namespace

ApproximationTrace left_ce_real(std::string_view digits, std::size_t horizon)
{
	require_digits(digits);
	Table t(1, horizon);
	for (std::size_t s = 1; s < horizon; s++) {
		std::size_t m = std::min(s, digits.size());
		t.at(0, s) = UnitRational(digit_sum(digits, m, '1'), Integer(1) << m);
	}
	return validate(std::move(t), Shape::Sigma1);
}

ApproximationTrace right_ce_real(std::string_view digits, std::size_t horizon)
{
	require_digits(digits);
	Table t(1, horizon, UnitRational::one());
	for (std::size_t s = 1; s < horizon; s++) {
		std::size_t m = std::min(s, digits.size());
		Integer den = Integer(1) << m;
		t.at(0, s) = UnitRational(den - digit_sum(digits, m, '0'), den);
	}
	return validate(std::move(t), Shape::Pi1);
}

} // namespace fuzzy_ershov
