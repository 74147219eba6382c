#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fuzzy_ershov/boolean.hpp"
#include "fuzzy_ershov/errors.hpp"
#include "fuzzy_ershov/trace.hpp"

namespace fuzzy_ershov::cli {

enum ExitCode : int {
	Success = 0,
	DomainFailure = 1,
	ParseFailure = 2,
	IoFailure = 3,
};

class IoError : public Error {
public:
	using Error::Error;
};

struct RunConfig {
	std::string subcommand;
	/* ops: union|intersection|complement; gallery: harkleroad|oscillator|random|leftce|rightce */
	std::string variant;

	std::optional<std::filesystem::path> input;
	std::optional<std::filesystem::path> input2;
	std::optional<std::filesystem::path> output;

	std::optional<Shape> shape;
	std::size_t level = 0;
	std::uint64_t denominator_bound = 16;
	std::uint64_t seed = 0;
	std::optional<std::size_t> horizon;
	PrefixCounting counting = PrefixCounting::Settled;

	std::optional<std::size_t> element;
	std::size_t elements = 1;
	bool profile = false;
	std::string center = "1/2";
	std::string amplitude = "1/4";
	std::size_t count = 1;
	std::string digits;

	bool color = false;
};

/* Runs one resolved configuration; returns an ExitCode. */
int execute(const RunConfig &config, std::ostream &out, std::ostream &err);

/* Parses arguments (without the program name) and executes them. */
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace fuzzy_ershov::cli
