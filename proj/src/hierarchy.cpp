#include "fuzzy_ershov/hierarchy.hpp"

#include <ostream>
#include <stdexcept>

namespace fuzzy_ershov {

LevelReport classify(const ApproximationTrace &a)
{
	auto sigma = sigma_profile(a);
	auto pi = pi_profile(a);
	auto upd = update_profile(a);

	LevelReport r;
	r.anchor_zero = true;
	r.anchor_one = true;
	for (std::size_t x = 0; x < a.elements(); x++) {
		r.sigma_changes.push_back(sigma.change_count(x));
		r.pi_changes.push_back(pi.change_count(x));
		r.updates.push_back(upd.update_count(x));
		r.anchor_zero = r.anchor_zero && a.at(x, 0).is_zero();
		r.anchor_one = r.anchor_one && a.at(x, 0).is_one();
	}
	r.observed_n = sigma.max_change_count() + 1;
	r.observed_co_n = pi.max_change_count() + 1;
	if (satisfies(a.table(), Shape::Sigma1))
		r.observed_update_level = upd.max_update_count();
	return r;
}

ApproximationTrace threshold_to_crisp(const ApproximationTrace &a)
{
	Table t(a.elements(), a.stages());
	for (std::size_t x = 0; x < a.elements(); x++)
		for (std::size_t s = 0; s < a.stages(); s++)
			t.at(x, s) = a.at(x, s) > UnitRational::half() ? UnitRational::one()
			                                               : UnitRational::zero();
	return validate(std::move(t), Shape::Crisp);
}

LevelReport embed_crisp(const ApproximationTrace &a)
{
	if (a.shape() != Shape::Crisp)
		throw WrongShapeError("embed_crisp requires a Crisp trace, got " +
		                      std::string(to_string(a.shape())));
	for (std::size_t x = 0; x < a.elements(); x++)
		if (!a.at(x, 0).is_zero())
			throw LevelError(x, "crisp trace must start at 0 (element " + std::to_string(x) + ")");

	LevelReport r = classify(a);
	for (std::size_t x = 0; x < a.elements(); x++) {
		std::size_t flips = r.updates[x];
		std::size_t expected = flips == 0 ? 0 : flips - 1;
		if (r.sigma_changes[x] != expected)
			throw std::logic_error("crisp flip law broken at element " + std::to_string(x));
	}
	return r;
}

std::string CountingCheck::describe() const
{
	switch (failure) {
	case Failure::None:
		return "valid";
	case Failure::Bound:
		return "value at (" + std::to_string(x) + "," + std::to_string(s) + ") not below bound";
	case Failure::NotNonincreasing:
		return "h increases at x=" + std::to_string(x) + " between s=" + std::to_string(s) +
		       " and s=" + std::to_string(s + 1);
	case Failure::NoDropAtFlip:
		return "h does not drop at the mind change of x=" + std::to_string(x) + " between s=" +
		       std::to_string(s) + " and s=" + std::to_string(s + 1);
	}
	return "?";
}

CountingCheck verify_counting_function(const ApproximationTrace &a, const CountingTrace &h)
{
	if (a.elements() != h.elements || a.stages() != h.stages ||
	    h.values.size() != h.elements * h.stages)
		throw DimensionError("counting function and trace differ in dimensions");

	auto sigma = sigma_profile(a);
	for (std::size_t x = 0; x < h.elements; x++) {
		for (std::size_t s = 0; s < h.stages; s++) {
			if (h.at(x, s) >= h.bound)
				return {CountingCheck::Failure::Bound, x, s};
			if (s + 1 == h.stages)
				continue;
			if (h.at(x, s + 1) > h.at(x, s))
				return {CountingCheck::Failure::NotNonincreasing, x, s};
			if (sigma.sign(x, s + 1) != sigma.sign(x, s) && h.at(x, s + 1) == h.at(x, s))
				return {CountingCheck::Failure::NoDropAtFlip, x, s};
		}
	}
	return {};
}

CountingTrace build_counting_witness(const ApproximationTrace &a)
{
	auto sigma = sigma_profile(a);
	std::uint64_t top = sigma.max_change_count();
	CountingTrace h{a.elements(), a.stages(), top + 1, {}};
	h.values.resize(a.elements() * a.stages());
	for (std::size_t x = 0; x < a.elements(); x++) {
		h.at(x, 0) = top;
		for (std::size_t s = 0; s + 1 < a.stages(); s++)
			h.at(x, s + 1) = h.at(x, s) - (sigma.sign(x, s + 1) != sigma.sign(x, s) ? 1 : 0);
	}
	return h;
}

void write_level_csv(std::ostream &os, const LevelReport &r)
{
	os << "x,sigma_changes,pi_changes,updates\n";
	for (std::size_t x = 0; x < r.sigma_changes.size(); x++)
		os << x << ',' << r.sigma_changes[x] << ',' << r.pi_changes[x] << ',' << r.updates[x]
		   << '\n';
	os << "summary,observed_n=" << r.observed_n << ",observed_co_n=" << r.observed_co_n
	   << ",update_level=";
	if (r.observed_update_level)
		os << *r.observed_update_level;
	else
		os << "NA";
	os << ",anchor_zero=" << (r.anchor_zero ? "yes" : "no")
	   << ",anchor_one=" << (r.anchor_one ? "yes" : "no") << '\n';
}

} // namespace fuzzy_ershov
