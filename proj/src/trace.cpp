#include "fuzzy_ershov/trace.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace fuzzy_ershov {

std::string_view to_string(Shape shape) noexcept
{
	switch (shape) {
	case Shape::Delta2: return "Delta2";
	case Shape::Sigma1: return "Sigma1";
	case Shape::Pi1: return "Pi1";
	case Shape::Crisp: return "Crisp";
	}
	return "?";
}

Shape parse_shape(std::string_view text)
{
	for (Shape s : {Shape::Delta2, Shape::Sigma1, Shape::Pi1, Shape::Crisp})
		if (to_string(s) == text)
			return s;
	throw ParseError(ParseError::Kind::Malformed, "unknown shape '" + std::string(text) + "'");
}

Table::Table(std::size_t elements, std::size_t stages, const UnitRational &fill)
: elements_(elements)
, stages_(stages)
{
	if (elements == 0 || stages == 0)
		throw DimensionError("a trace needs at least one element and one stage");
	cells_.assign(elements * stages, fill);
}

Table Table::from_rows(const std::vector<std::vector<UnitRational>> &rows)
{
	if (rows.empty() || rows.front().empty())
		throw DimensionError("empty table");
	Table t(rows.size(), rows.front().size());
	for (std::size_t x = 0; x < rows.size(); x++) {
		if (rows[x].size() != t.stages_)
			throw DimensionError("row " + std::to_string(x) + " has " +
			                     std::to_string(rows[x].size()) + " stages, expected " +
			                     std::to_string(t.stages_));
		std::copy(rows[x].begin(), rows[x].end(), t.cells_.begin() + t.index(x, 0));
	}
	return t;
}

std::size_t Table::index(std::size_t x, std::size_t s) const
{
	if (x >= elements_ || s >= stages_)
		throw std::out_of_range("cell (" + std::to_string(x) + "," + std::to_string(s) +
		                        ") outside " + std::to_string(elements_) + "x" +
		                        std::to_string(stages_) + " table");
	return x * stages_ + s;
}

namespace {

[[noreturn]] void violation(std::size_t x, std::size_t s, Invariant inv, Shape shape)
{
	throw ShapeError(x, s, inv,
	                 std::string(to_string(inv)) + " violated at (" + std::to_string(x) + "," +
	                 std::to_string(s) + ") for shape " + std::string(to_string(shape)));
}

/* Returns false or throws on the first violation, depending on `raise`. */
bool check_shape(const Table &t, Shape shape, bool raise)
{
	for (std::size_t x = 0; x < t.elements(); x++) {
		for (std::size_t s = 0; s < t.stages(); s++) {
			const UnitRational &v = t.at(x, s);
			Invariant bad = Invariant::Crispness;
			switch (shape) {
			case Shape::Delta2:
				continue;
			case Shape::Crisp:
				if (v.is_crisp())
					continue;
				bad = Invariant::Crispness;
				break;
			case Shape::Sigma1:
				if (s == 0 ? v.is_zero() : t.at(x, s - 1) <= v)
					continue;
				bad = s == 0 ? Invariant::Anchor : Invariant::Monotonicity;
				break;
			case Shape::Pi1:
				if (s == 0 ? v.is_one() : v <= t.at(x, s - 1))
					continue;
				bad = s == 0 ? Invariant::Anchor : Invariant::Monotonicity;
				break;
			}
			if (raise)
				violation(x, s, bad, shape);
			return false;
		}
	}
	return true;
}

void require_same_dimensions(const ApproximationTrace &a, const ApproximationTrace &b)
{
	if (a.elements() != b.elements() || a.stages() != b.stages())
		throw DimensionError("dimension mismatch: " + std::to_string(a.elements()) + "x" +
		                     std::to_string(a.stages()) + " vs " +
		                     std::to_string(b.elements()) + "x" + std::to_string(b.stages()));
}

template <typename Op>
ApproximationTrace pointwise(const ApproximationTrace &a, const ApproximationTrace &b, Op op)
{
	require_same_dimensions(a, b);
	Table t(a.elements(), a.stages());
	for (std::size_t x = 0; x < a.elements(); x++)
		for (std::size_t s = 0; s < a.stages(); s++)
			t.at(x, s) = op(a.at(x, s), b.at(x, s));
	Shape shape = a.shape() == b.shape() ? a.shape() : Shape::Delta2;
	return validate(std::move(t), shape);
}

} // namespace

ApproximationTrace validate(Table raw, Shape claimed)
{
	check_shape(raw, claimed, true);
	return ApproximationTrace(std::move(raw), claimed);
}

bool satisfies(const Table &table, Shape shape)
{
	return check_shape(table, shape, false);
}

ApproximationTrace union_of(const ApproximationTrace &a, const ApproximationTrace &b)
{
	return pointwise(a, b, [](const UnitRational &p, const UnitRational &q) {
		return std::max(p, q);
	});
}

ApproximationTrace intersection_of(const ApproximationTrace &a, const ApproximationTrace &b)
{
	return pointwise(a, b, [](const UnitRational &p, const UnitRational &q) {
		return std::min(p, q);
	});
}

ApproximationTrace complement(const ApproximationTrace &a)
{
	Table t(a.elements(), a.stages());
	for (std::size_t x = 0; x < a.elements(); x++)
		for (std::size_t s = 0; s < a.stages(); s++)
			t.at(x, s) = a.at(x, s).complement();
	Shape shape = a.shape();
	if (shape == Shape::Sigma1)
		shape = Shape::Pi1;
	else if (shape == Shape::Pi1)
		shape = Shape::Sigma1;
	return validate(std::move(t), shape);
}

ApproximationTrace truncate(const ApproximationTrace &a, std::size_t stages)
{
	if (stages == 0 || stages > a.stages())
		throw DimensionError("cannot truncate " + std::to_string(a.stages()) + " stages to " +
		                     std::to_string(stages));
	Table t(a.elements(), stages);
	for (std::size_t x = 0; x < a.elements(); x++)
		for (std::size_t s = 0; s < stages; s++)
			t.at(x, s) = a.at(x, s);
	return validate(std::move(t), a.shape());
}

LimitSnapshot limit_snapshot(const ApproximationTrace &a)
{
	LimitSnapshot snap;
	snap.horizon = a.stages();
	for (std::size_t x = 0; x < a.elements(); x++) {
		auto row = a.row(x);
		const UnitRational &last = row.back();
		std::size_t s = row.size() - 1;
		while (s > 0 && row[s - 1] == last)
			s--;
		snap.final_values.push_back(last);
		snap.stabilization.push_back(s);
	}
	return snap;
}

std::vector<UnitRational> farey_sequence(std::uint64_t order)
{
	if (order == 0)
		throw std::invalid_argument("Farey order must be positive");
	std::vector<UnitRational> out;
	// Successive terms a/b < c/d; the next is (k*c - a)/(k*d - b).
	std::uint64_t a = 0, b = 1, c = 1, d = order;
	out.emplace_back(0, 1);
	while (c <= order) {
		out.emplace_back(Integer(c), Integer(d));
		if (c == d)
			break;
		std::uint64_t k = (order + b) / d;
		std::uint64_t nc = k * c - a;
		std::uint64_t nd = k * d - b;
		a = c;
		b = d;
		c = nc;
		d = nd;
	}
	return out;
}

namespace {

void require_shape(const ApproximationTrace &a, Shape shape, const char *op)
{
	if (a.shape() != shape)
		throw WrongShapeError(std::string(op) + " requires a " + std::string(to_string(shape)) +
		                      " trace, got " + std::string(to_string(a.shape())));
}

} // namespace

std::vector<UnitRational> enumerate_left_cut(const ApproximationTrace &a, std::size_t x,
                                             std::uint64_t max_denominator)
{
	require_shape(a, Shape::Sigma1, "left cut");
	auto row = a.row(x);
	const UnitRational &sup = *std::max_element(row.begin(), row.end());
	auto grid = farey_sequence(max_denominator);
	grid.erase(std::lower_bound(grid.begin(), grid.end(), sup), grid.end());
	return grid;
}

std::vector<UnitRational> enumerate_right_cut(const ApproximationTrace &a, std::size_t x,
                                              std::uint64_t max_denominator)
{
	require_shape(a, Shape::Pi1, "right cut");
	auto row = a.row(x);
	const UnitRational &inf = *std::min_element(row.begin(), row.end());
	auto grid = farey_sequence(max_denominator);
	grid.erase(grid.begin(), std::upper_bound(grid.begin(), grid.end(), inf));
	return grid;
}

namespace {

[[noreturn]] void structure_error(std::size_t line, const std::string &what)
{
	throw ParseError(ParseError::Kind::Structure, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(std::string_view token, std::string_view key, std::size_t line)
{
	if (token.substr(0, key.size()) != key)
		structure_error(line, "expected '" + std::string(key) + "<int>'");
	token.remove_prefix(key.size());
	std::size_t value = 0;
	auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
	if (ec != std::errc() || end != token.data() + token.size() || token.empty())
		structure_error(line, "bad integer in '" + std::string(key) + std::string(token) + "'");
	return value;
}

} // namespace

RawTrace read_raw_trace(std::istream &is)
{
	std::string line;
	std::size_t lineno = 0;
	// line numbers are relative to the start of this block
	do {
		if (!std::getline(is, line))
			structure_error(lineno + 1, "missing trace header");
		lineno++;
	} while (line.find_first_not_of(" \t\r") == std::string::npos);

	std::istringstream header(line);
	std::string tag, xs, ss, shs, extra;
	header >> tag >> xs >> ss >> shs;
	if (tag != "trace" || shs.empty() || (header >> extra))
		structure_error(lineno, "expected 'trace X=<int> S=<int> shape=<shape>'");
	std::size_t elements = parse_count(xs, "X=", lineno);
	std::size_t stages = parse_count(ss, "S=", lineno);
	if (shs.rfind("shape=", 0) != 0)
		structure_error(lineno, "expected 'shape=<shape>'");
	Shape claimed = parse_shape(std::string_view(shs).substr(6));
	if (elements == 0 || stages == 0)
		structure_error(lineno, "X and S must be positive");

	Table table(elements, stages);
	for (std::size_t x = 0; x < elements; x++) {
		if (!std::getline(is, line))
			structure_error(lineno + 1, "expected " + std::to_string(elements) + " rows, got " +
			                                std::to_string(x));
		lineno++;
		std::istringstream row(line);
		std::string token;
		std::size_t s = 0;
		while (row >> token) {
			if (s == stages)
				structure_error(lineno, "more than " + std::to_string(stages) + " values");
			try {
				table.at(x, s) = parse_rational(token);
			} catch (const ParseError &e) {
				throw ParseError(e.kind(), "line " + std::to_string(lineno) + ": " + e.what());
			}
			s++;
		}
		if (s != stages)
			structure_error(lineno, "expected " + std::to_string(stages) + " values, got " +
			                            std::to_string(s));
	}
	return {std::move(table), claimed};
}

ApproximationTrace read_trace(std::istream &is)
{
	RawTrace raw = read_raw_trace(is);
	return validate(std::move(raw.table), raw.claimed);
}

void write_trace(std::ostream &os, const ApproximationTrace &a)
{
	os << "trace X=" << a.elements() << " S=" << a.stages() << " shape=" << to_string(a.shape())
	   << '\n';
	for (std::size_t x = 0; x < a.elements(); x++) {
		auto row = a.row(x);
		for (std::size_t s = 0; s < row.size(); s++) {
			if (s)
				os << ' ';
			os << row[s];
		}
		os << '\n';
	}
}

} // namespace fuzzy_ershov
