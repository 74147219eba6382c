#include "fuzzy_ershov/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace fuzzy_ershov {

const char *to_string(Invariant inv) noexcept
{
	switch (inv) {
	case Invariant::Anchor: return "anchor";
	case Invariant::Monotonicity: return "monotonicity";
	case Invariant::Crispness: return "crispness";
	}
	return "?";
}

UnitRational::UnitRational(Integer num, Integer den)
{
	if (den == 0)
		throw ParseError(ParseError::Kind::ZeroDenominator, "zero denominator");
	if (den < 0) {
		num = -num;
		den = -den;
	}
	if (num < 0 || num > den)
		throw ParseError(ParseError::Kind::OutOfRange,
		                 "value " + num.str() + "/" + den.str() + " outside the unit interval");
	value_ = Rep(num, den);
}

UnitRational UnitRational::complement() const
{
	return UnitRational(Rep(1) - value_);
}

std::string UnitRational::str() const
{
	if (is_zero())
		return "0";
	if (is_one())
		return "1";
	return numerator().str() + "/" + denominator().str();
}

UnitRational complement_value(const UnitRational &q)
{
	return q.complement();
}

namespace {

bool all_digits(std::string_view s)
{
	return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
		return std::isdigit(c) != 0;
	});
}

} // namespace

UnitRational parse_rational(std::string_view text)
{
	auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1")
	                                                       : text.substr(slash + 1);
	if (!all_digits(num) || !all_digits(den))
		throw ParseError(ParseError::Kind::Malformed,
		                 "malformed rational '" + std::string(text) + "'");
	return UnitRational(Integer(std::string(num)), Integer(std::string(den)));
}

std::ostream &operator<<(std::ostream &os, const UnitRational &q)
{
	return os << q.str();
}

} // namespace fuzzy_ershov
