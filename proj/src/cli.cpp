#include "fuzzy_ershov/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fuzzy_ershov/gallery.hpp"
#include "fuzzy_ershov/hierarchy.hpp"
#include "fuzzy_ershov/mindchange.hpp"

namespace fuzzy_ershov::cli {

namespace {

/* "-" reads standard input. */
std::istringstream open_input(const std::optional<std::filesystem::path> &path, const char *flag)
{
	if (!path)
		throw ParseError(ParseError::Kind::Structure, std::string(flag) + " is required");
	std::ostringstream text;
	if (*path == "-") {
		text << std::cin.rdbuf();
	} else {
		std::ifstream in(*path);
		if (!in)
			throw IoError("cannot open '" + path->string() + "' for reading");
		text << in.rdbuf();
	}
	return std::istringstream(text.str());
}

ApproximationTrace load_trace(const RunConfig &c, const std::optional<std::filesystem::path> &path,
                              const char *flag)
{
	auto in = open_input(path, flag);
	RawTrace raw = read_raw_trace(in);
	ApproximationTrace t = validate(std::move(raw.table), c.shape.value_or(raw.claimed));
	if (c.horizon && *c.horizon != t.stages())
		t = truncate(t, *c.horizon);
	return t;
}

/* Writes to --out when given, otherwise to `out`. */
void emit(const RunConfig &c, std::ostream &out, const std::function<void(std::ostream &)> &fn)
{
	if (!c.output) {
		fn(out);
		return;
	}
	std::ofstream file(*c.output);
	if (!file)
		throw IoError("cannot open '" + c.output->string() + "' for writing");
	fn(file);
	if (!file.flush())
		throw IoError("write to '" + c.output->string() + "' failed");
}

std::string paint(const std::string &word, bool ok, bool color)
{
	if (!color)
		return word;
	return (ok ? "\x1b[32m" : "\x1b[31m") + word + "\x1b[0m";
}

std::size_t require_level(const RunConfig &c)
{
	if (c.level == 0)
		throw ParseError(ParseError::Kind::Structure, "--level must be at least 1");
	return c.level;
}

std::size_t require_horizon(const RunConfig &c)
{
	if (!c.horizon)
		throw ParseError(ParseError::Kind::Structure, "--horizon is required");
	return *c.horizon;
}

int cmd_validate(const RunConfig &c, std::ostream &out, std::ostream &err)
{
	auto in = open_input(c.input, "--in");
	RawTrace raw = read_raw_trace(in);
	Shape claimed = c.shape.value_or(raw.claimed);
	try {
		ApproximationTrace t = validate(std::move(raw.table), claimed);
		out << paint("OK", true, c.color) << " shape=" << to_string(t.shape())
		    << " X=" << t.elements() << " S=" << t.stages() << '\n';
		return Success;
	} catch (const ShapeError &e) {
		err << paint("INVALID", false, c.color) << " x=" << e.element() << " s=" << e.stage()
		    << " invariant=" << to_string(e.invariant()) << " shape=" << to_string(claimed)
		    << '\n';
		return ParseFailure;
	}
}

int cmd_classify(const RunConfig &c, std::ostream &out)
{
	ApproximationTrace t = load_trace(c, c.input, "--in");
	emit(c, out, [&](std::ostream &os) {
		if (c.profile) {
			write_profile(os, sigma_profile(t));
			write_profile(os, pi_profile(t));
		} else {
			write_level_csv(os, classify(t));
		}
	});
	return Success;
}

int cmd_decompose(const RunConfig &c, std::ostream &out)
{
	ApproximationTrace t = load_trace(c, c.input, "--in");
	BooleanDecomposition d = decompose(t, require_level(c), c.counting);
	emit(c, out, [&](std::ostream &os) { write_decomposition(os, d); });
	return Success;
}

int cmd_recompose(const RunConfig &c, std::ostream &out)
{
	auto in = open_input(c.input, "--in");
	BooleanDecomposition d = read_decomposition(in);
	ApproximationTrace t = recompose(d);
	emit(c, out, [&](std::ostream &os) { write_trace(os, t); });
	return Success;
}

int cmd_verify(const RunConfig &c, std::ostream &out)
{
	ApproximationTrace t = load_trace(c, c.input, "--in");
	TheoremReport r = verify_theorem(t, require_level(c), c.counting);
	emit(c, out, [&](std::ostream &os) { write_theorem_report(os, r, c.color); });
	return r.passed() ? Success : DomainFailure;
}

int cmd_ops(const RunConfig &c, std::ostream &out)
{
	ApproximationTrace a = load_trace(c, c.input, "--in");
	std::optional<ApproximationTrace> result;
	if (c.variant == "complement") {
		result = complement(a);
	} else {
		ApproximationTrace b = load_trace(c, c.input2, "--in2");
		result = c.variant == "union" ? union_of(a, b) : intersection_of(a, b);
	}
	emit(c, out, [&](std::ostream &os) { write_trace(os, *result); });
	return Success;
}

int cmd_cut(const RunConfig &c, std::ostream &out)
{
	ApproximationTrace t = load_trace(c, c.input, "--in");
	if (t.shape() != Shape::Sigma1 && t.shape() != Shape::Pi1)
		throw WrongShapeError("cut needs a Sigma1 (left cut) or Pi1 (right cut) trace, got " +
		                      std::string(to_string(t.shape())));
	if (c.denominator_bound == 0)
		throw ParseError(ParseError::Kind::Structure, "--denominator-bound must be positive");
	std::size_t first = c.element.value_or(0);
	std::size_t last = c.element ? first + 1 : t.elements();
	if (first >= t.elements())
		throw ParseError(ParseError::Kind::OutOfRange,
		                 "--element " + std::to_string(first) + " outside the trace");
	emit(c, out, [&](std::ostream &os) {
		for (std::size_t x = first; x < last; x++) {
			auto cut = t.shape() == Shape::Sigma1
			               ? enumerate_left_cut(t, x, c.denominator_bound)
			               : enumerate_right_cut(t, x, c.denominator_bound);
			for (std::size_t i = 0; i < cut.size(); i++)
				os << (i ? " " : "") << cut[i];
			os << '\n';
		}
	});
	return Success;
}

int cmd_gallery(const RunConfig &c, std::ostream &out)
{
	std::optional<ApproximationTrace> t;
	if (c.variant == "harkleroad") {
		auto in = open_input(c.input, "--in");
		t = harkleroad(read_halting_table(in), require_horizon(c));
	} else if (c.variant == "oscillator") {
		OscillatorSchedule sched{parse_rational(c.center), parse_rational(c.amplitude), c.count};
		t = oscillator(sched, c.horizon.value_or(2 * c.count + 1));
	} else if (c.variant == "random") {
		t = random_bounded_trace(c.seed, c.elements, require_horizon(c), require_level(c),
		                         c.denominator_bound);
	} else if (c.variant == "leftce") {
		t = left_ce_real(c.digits, c.horizon.value_or(c.digits.size() + 1));
	} else {
		t = right_ce_real(c.digits, c.horizon.value_or(c.digits.size() + 1));
	}
	emit(c, out, [&](std::ostream &os) { write_trace(os, *t); });
	return Success;
}

bool color_from_env()
{
	const char *v = std::getenv("FUZZY_ERSHOV_COLOR");
	if (!v)
		return false;
	std::string s(v);
	return !s.empty() && s != "0" && s != "never" && s != "false";
}

} // namespace

int execute(const RunConfig &c, std::ostream &out, std::ostream &err)
{
	try {
		const std::string &cmd = c.subcommand;
		if (cmd == "validate")
			return cmd_validate(c, out, err);
		if (cmd == "classify")
			return cmd_classify(c, out);
		if (cmd == "decompose")
			return cmd_decompose(c, out);
		if (cmd == "recompose")
			return cmd_recompose(c, out);
		if (cmd == "verify")
			return cmd_verify(c, out);
		if (cmd == "ops")
			return cmd_ops(c, out);
		if (cmd == "cut")
			return cmd_cut(c, out);
		if (cmd == "gallery")
			return cmd_gallery(c, out);
		err << "error: unknown subcommand '" << cmd << "'\n";
		return ParseFailure;
	} catch (const IoError &e) {
		err << "io error: " << e.what() << '\n';
		return IoFailure;
	} catch (const LevelError &e) {
		err << "level error: x=" << e.element() << ": " << e.what() << '\n';
		return DomainFailure;
	} catch (const ShapeError &e) {
		err << "invalid trace: x=" << e.element() << " s=" << e.stage()
		    << " invariant=" << to_string(e.invariant()) << ": " << e.what() << '\n';
		return ParseFailure;
	} catch (const Error &e) {
		err << "error: " << e.what() << '\n';
		return ParseFailure;
	} catch (const std::out_of_range &e) {
		err << "error: " << e.what() << '\n';
		return ParseFailure;
	}
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	RunConfig c;
	c.color = color_from_env();

	CLI::App app{"Finite-horizon tools for the fuzzy Ershov hierarchy", "fuzzy-ershov"};
	app.require_subcommand(1);

	std::string shape, counting = "settled";
	std::string in, in2, outpath;
	std::size_t horizon = 0;

	auto io = [&](CLI::App *sub, bool two_inputs) {
		sub->add_option("--in", in, "input file, - for stdin");
		if (two_inputs)
			sub->add_option("--in2", in2, "second input file");
		sub->add_option("--out", outpath, "output file (default stdout)");
		sub->add_option("--horizon", horizon, "number of stages to use");
	};
	auto trace_opts = [&](CLI::App *sub, bool two_inputs) {
		io(sub, two_inputs);
		sub->add_option("--shape", shape, "claimed shape (overrides the file header)")
		    ->check(CLI::IsMember({"Delta2", "Sigma1", "Pi1", "Crisp"}));
	};
	auto level_opts = [&](CLI::App *sub) {
		sub->add_option("--level", c.level, "hierarchy level n")->required();
		sub->add_option("--counting", counting, "prefix counting: settled|lookahead")
		    ->check(CLI::IsMember({"settled", "lookahead"}));
	};

	auto *validate_cmd = app.add_subcommand("validate", "check a trace against its shape");
	trace_opts(validate_cmd, false);

	auto *classify_cmd = app.add_subcommand("classify", "report observed hierarchy levels");
	trace_opts(classify_cmd, false);
	classify_cmd->add_flag("--profile", c.profile, "print sign profiles instead of CSV");

	auto *decompose_cmd = app.add_subcommand("decompose", "split a trace into c.e. pairs");
	trace_opts(decompose_cmd, false);
	level_opts(decompose_cmd);

	auto *recompose_cmd = app.add_subcommand("recompose", "max-min recomposition of a bundle");
	io(recompose_cmd, false);

	auto *verify_cmd = app.add_subcommand("verify", "decompose, recompose and check");
	trace_opts(verify_cmd, false);
	level_opts(verify_cmd);

	auto *ops_cmd = app.add_subcommand("ops", "fuzzy set algebra");
	ops_cmd->require_subcommand(1);
	for (const char *op : {"union", "intersection", "complement"})
		trace_opts(ops_cmd->add_subcommand(op, std::string(op) + " of traces"),
		           std::string(op) != "complement");

	auto *cut_cmd = app.add_subcommand("cut", "grid enumeration of left/right cuts");
	trace_opts(cut_cmd, false);
	cut_cmd->add_option("--denominator-bound", c.denominator_bound, "largest grid denominator");
	cut_cmd->add_option("--element", c.element, "single element to enumerate");

	auto *gallery_cmd = app.add_subcommand("gallery", "example trace families");
	gallery_cmd->require_subcommand(1);
	auto *hark = gallery_cmd->add_subcommand("harkleroad", "toy halting table trace");
	io(hark, false);
	auto *osc = gallery_cmd->add_subcommand("oscillator", "oscillating single element");
	io(osc, false);
	osc->add_option("--center", c.center, "center rational");
	osc->add_option("--amplitude", c.amplitude, "amplitude rational");
	osc->add_option("--count", c.count, "number of up/down swings");
	auto *rnd = gallery_cmd->add_subcommand("random", "seeded trace of bounded level");
	io(rnd, false);
	rnd->add_option("--seed", c.seed, "random seed");
	rnd->add_option("--level", c.level, "level n")->required();
	rnd->add_option("--elements", c.elements, "number of elements X");
	rnd->add_option("--denominator-bound", c.denominator_bound, "grid denominator");
	for (const char *kind : {"leftce", "rightce"}) {
		auto *real = gallery_cmd->add_subcommand(kind, "dyadic real from binary digits");
		io(real, false);
		real->add_option("--digits", c.digits, "binary digits d1 d2 ...")->required();
	}

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e, out, err);
		return code == 0 ? Success : ParseFailure;
	}

	auto *sub = app.get_subcommands().front();
	c.subcommand = sub->get_name();
	if (!sub->get_subcommands().empty())
		c.variant = sub->get_subcommands().front()->get_name();

	try {
		if (!shape.empty())
			c.shape = parse_shape(shape);
		c.counting = parse_prefix_counting(counting);
	} catch (const Error &e) {
		err << "error: " << e.what() << '\n';
		return ParseFailure;
	}
	auto resolve = [](const std::string &p) -> std::optional<std::filesystem::path> {
		if (p.empty())
			return std::nullopt;
		if (p == "-")
			return std::filesystem::path("-");
		return std::filesystem::absolute(p);
	};
	c.input = resolve(in);
	c.input2 = resolve(in2);
	c.output = resolve(outpath);
	if (horizon > 0)
		c.horizon = horizon;

	return execute(c, out, err);
}

} // namespace fuzzy_ershov::cli
