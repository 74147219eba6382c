#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzy_ershov {

/* Base of every error raised by the library. */
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/* Malformed text: rationals, trace files, manifests, halting tables. */
class ParseError : public Error {
public:
	enum class Kind { Malformed, OutOfRange, ZeroDenominator, Structure };

	ParseError(Kind kind, const std::string &what)
	: Error(what)
	, kind_(kind)
	{}

	Kind kind() const noexcept { return kind_; }

private:
	Kind kind_;
};

/* Which shape invariant a table failed. */
enum class Invariant { Anchor, Monotonicity, Crispness };

const char *to_string(Invariant inv) noexcept;

/* A table failed the invariants of its claimed shape at (x, s). */
class ShapeError : public Error {
public:
	ShapeError(std::size_t x, std::size_t s, Invariant inv, const std::string &what)
	: Error(what)
	, x_(x)
	, s_(s)
	, invariant_(inv)
	{}

	std::size_t element() const noexcept { return x_; }
	std::size_t stage() const noexcept { return s_; }
	Invariant invariant() const noexcept { return invariant_; }

private:
	std::size_t x_;
	std::size_t s_;
	Invariant invariant_;
};

/* Operands disagree on X or S. */
class DimensionError : public Error {
public:
	using Error::Error;
};

/* An operation was applied to a trace of the wrong shape. */
class WrongShapeError : public Error {
public:
	using Error::Error;
};

/* A trace exceeds a declared hierarchy level (or misses the anchor); names x. */
class LevelError : public Error {
public:
	LevelError(std::size_t x, const std::string &what)
	: Error(what)
	, x_(x)
	{}

	std::size_t element() const noexcept { return x_; }

private:
	std::size_t x_;
};

/* Generator parameters that cannot be realized. */
class ScheduleError : public Error {
public:
	using Error::Error;
};

} // namespace fuzzy_ershov
