#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "fuzzy_ershov/errors.hpp"

namespace fuzzy_ershov {

using Integer = boost::multiprecision::cpp_int;

/*
 * Exact rational in the closed unit interval, kept in lowest terms with a
 * positive denominator. Numerator and denominator are arbitrary precision,
 * so no composition of values can overflow.
 */
class UnitRational {
public:
	UnitRational() = default;

	/* Throws ParseError(OutOfRange / ZeroDenominator) outside [0,1]. */
	UnitRational(Integer num, Integer den);
	UnitRational(std::int64_t num, std::int64_t den)
	: UnitRational(Integer(num), Integer(den))
	{}

	static UnitRational zero() { return {}; }
	static UnitRational one() { return {1, 1}; }
	static UnitRational half() { return {1, 2}; }

	Integer numerator() const { return boost::multiprecision::numerator(value_); }
	Integer denominator() const { return boost::multiprecision::denominator(value_); }

	bool is_zero() const { return value_ == 0; }
	bool is_one() const { return value_ == 1; }
	bool is_crisp() const { return is_zero() || is_one(); }

	/* 1 - q */
	UnitRational complement() const;

	/* Canonical text: "0", "1", or "p/q" in lowest terms. */
	std::string str() const;

	friend bool operator==(const UnitRational &a, const UnitRational &b)
	{
		return a.value_ == b.value_;
	}

	friend std::strong_ordering operator<=>(const UnitRational &a, const UnitRational &b)
	{
		if (a.value_ < b.value_)
			return std::strong_ordering::less;
		if (b.value_ < a.value_)
			return std::strong_ordering::greater;
		return std::strong_ordering::equal;
	}

private:
	using Rep = boost::multiprecision::cpp_rational;

	explicit UnitRational(Rep v) : value_(std::move(v)) {}

	Rep value_{0};
};

UnitRational complement_value(const UnitRational &q);

/* Accepts "p/q" or "p" with decimal digits; the result is canonical. */
UnitRational parse_rational(std::string_view text);

std::ostream &operator<<(std::ostream &os, const UnitRational &q);

} // namespace fuzzy_ershov
