#include "fuzzy_ershov/mindchange.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fuzzy_ershov {

namespace {

MindChangeProfile profile(const ApproximationTrace &a, Variant variant)
{
	MindChangeProfile p{variant, a.elements(), a.stages(), {}, {}};
	p.signs.resize(a.elements() * a.stages());
	p.change_stages.resize(a.elements());
	for (std::size_t x = 0; x < a.elements(); x++) {
		auto row = a.row(x);
		std::int8_t *sign = p.signs.data() + x * a.stages();
		sign[0] = variant == Variant::Sigma ? 1 : -1;
		for (std::size_t s = 0; s + 1 < row.size(); s++) {
			std::int8_t next = sign[s];
			if (sign[s] == 1 && row[s + 1] < row[s])
				next = -1;
			else if (sign[s] == -1 && row[s] < row[s + 1])
				next = 1;
			sign[s + 1] = next;
			if (next != sign[s])
				p.change_stages[x].push_back(s);
		}
	}
	return p;
}

} // namespace

std::size_t MindChangeProfile::max_change_count() const
{
	std::size_t m = 0;
	for (const auto &c : change_stages)
		m = std::max(m, c.size());
	return m;
}

std::size_t UpdateProfile::max_update_count() const
{
	std::size_t m = 0;
	for (const auto &u : update_stages)
		m = std::max(m, u.size());
	return m;
}

MindChangeProfile sigma_profile(const ApproximationTrace &a)
{
	return profile(a, Variant::Sigma);
}

MindChangeProfile pi_profile(const ApproximationTrace &a)
{
	return profile(a, Variant::Pi);
}

UpdateProfile update_profile(const ApproximationTrace &a)
{
	UpdateProfile u;
	u.update_stages.resize(a.elements());
	for (std::size_t x = 0; x < a.elements(); x++) {
		auto row = a.row(x);
		for (std::size_t s = 0; s + 1 < row.size(); s++)
			if (row[s + 1] != row[s])
				u.update_stages[x].push_back(s);
	}
	return u;
}

std::size_t change_count_prefix(const MindChangeProfile &p, std::size_t x, std::size_t s)
{
	if (x >= p.elements || s >= p.stages)
		throw std::out_of_range("prefix count at (" + std::to_string(x) + "," +
		                        std::to_string(s) + ") outside the profile");
	const auto &stages = p.change_stages[x];
	return std::upper_bound(stages.begin(), stages.end(), s) - stages.begin();
}

void write_profile(std::ostream &os, const MindChangeProfile &p)
{
	for (std::size_t x = 0; x < p.elements; x++) {
		os << "x=" << x << " variant=" << (p.variant == Variant::Sigma ? "Sigma" : "Pi")
		   << " signs=";
		for (std::size_t s = 0; s < p.stages; s++)
			os << (p.sign(x, s) > 0 ? '+' : '-');
		os << " changes=";
		const auto &cs = p.change_stages[x];
		if (cs.empty())
			os << '-';
		for (std::size_t i = 0; i < cs.size(); i++)
			os << (i ? "," : "") << cs[i];
		os << " count=" << cs.size() << '\n';
	}
}

} // namespace fuzzy_ershov
