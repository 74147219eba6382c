#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "fuzzy_ershov/boolean.hpp"
#include "fuzzy_ershov/gallery.hpp"
#include "fuzzy_ershov/hierarchy.hpp"
#include "support.hpp"

using namespace fuzzy_ershov;
using namespace fuzzy_ershov::testing;

namespace {

/* Max-min recomposition evaluated directly on the component tables. */
Table oracle_recompose(const BooleanDecomposition &d)
{
	Table t(d.elements(), d.stages());
	for (std::size_t x = 0; x < d.elements(); x++)
		for (std::size_t s = 0; s < d.stages(); s++) {
			UnitRational v;
			for (const auto &p : d.pairs()) {
				UnitRational a = p.a.at(x, s), nb = p.b.at(x, s).complement();
				UnitRational m = a < nb ? a : nb;
				if (v < m)
					v = m;
			}
			t.at(x, s) = v;
		}
	return t;
}

std::vector<std::string> component_rows(const BooleanDecomposition &d)
{
	std::vector<std::string> out;
	for (const auto &p : d.pairs()) {
		out.push_back(row_text(p.a, 0));
		out.push_back(row_text(p.b, 0));
	}
	return out;
}

} // namespace

TEST_CASE("decompose a monotone trace at level 1")
{
	auto f = trace_of({"0 1/4 1/2"});
	for (auto mode : {PrefixCounting::Settled, PrefixCounting::Lookahead}) {
		auto d = decompose(f, 1, mode);
		CHECK(d.k() == 0);
		REQUIRE(d.pairs().size() == 1);
		CHECK(d.pairs()[0].a.table() == f.table());
		CHECK(row_text(d.pairs()[0].b, 0) == "0 0 0");
	}
}

TEST_CASE("decompose the worked level-3 example")
{
	auto f = trace_of({"0 1/2 1/4 3/4"});

	auto verbatim = decompose(f, 3, PrefixCounting::Lookahead);
	CHECK(verbatim.k() == 1);
	CHECK(component_rows(verbatim) ==
	      std::vector<std::string>{"0 0 0 0", "0 1/2 1 1", "0 0 1/4 3/4", "0 0 0 0"});
	auto h = recompose(verbatim);
	CHECK(row_text(h, 0) == "0 0 1/4 3/4");
	CHECK(classify(h).sigma_changes[0] == 0);

	auto settled = decompose(f, 3);
	CHECK(component_rows(settled) ==
	      std::vector<std::string>{"0 1/2 1/2 1/2", "0 0 3/4 1", "0 0 0 3/4", "0 0 0 0"});
	CHECK(recompose(settled).table() == f.table());
}

TEST_CASE("verbatim prefix counting loses the peak of a falling tail")
{
	// stabilizes at stage 3 < S-1, so the limit is conclusive
	auto f = trace_of({"0 1/4 1 1/2 1/2"});
	auto verbatim = verify_theorem(f, 2, PrefixCounting::Lookahead);
	CHECK(verbatim.limits[0] == LimitStatus::Mismatch);
	CHECK(verbatim.recomposed_finals[0] == q(1, 4));
	CHECK_FALSE(verbatim.passed(TheoremCheck::LimitEquality));
	CHECK(verbatim.passed(TheoremCheck::MindChangeBound));

	auto settled = verify_theorem(f, 2);
	CHECK(settled.limits[0] == LimitStatus::Match);
	CHECK(settled.recomposed_finals[0] == q(1, 2));
	CHECK(settled.passed());
}

TEST_CASE("odd levels leave the last B empty")
{
	for (std::uint64_t seed = 0; seed < 200; seed++) {
		std::size_t n = 1 + 2 * (seed % 3);
		auto f = random_bounded_trace(seed, 3, 20, n);
		for (auto mode : {PrefixCounting::Settled, PrefixCounting::Lookahead}) {
			auto d = decompose(f, n, mode);
			const auto &last = d.pairs().back().b;
			for (std::size_t x = 0; x < last.elements(); x++)
				for (std::size_t s = 0; s < last.stages(); s++)
					CHECK(last.at(x, s).is_zero());
		}
	}
}

TEST_CASE("decompose preconditions name the witnessing element")
{
	auto f = trace_of({"0 1/4", "0 1/2 ", "0 1"});
	CHECK_NOTHROW(decompose(f, 1));

	try {
		decompose(trace_of({"0 1/2 1/2", "0 1/2 1/4"}), 1);
		FAIL("expected LevelError");
	} catch (const LevelError &e) {
		CHECK(e.element() == 1);
	}
	try {
		decompose(trace_of({"0 0", "1/2 1"}), 4);
		FAIL("expected LevelError");
	} catch (const LevelError &e) {
		CHECK(e.element() == 1);
	}
	CHECK_THROWS_AS(decompose(trace_of({"0 0"}), 0), LevelError);

	auto osc = oscillator({q(1, 2), q(1, 4), 2}, 5);
	CHECK_THROWS_AS(decompose(osc, 2), LevelError);
	CHECK_NOTHROW(decompose(osc, 4));
}

TEST_CASE("recompose")
{
	auto a = trace_of({"0 1/3 1/2"}, Shape::Sigma1);
	auto zero = trace_of({"0 0 0"}, Shape::Sigma1);
	auto b = trace_of({"0 1/2 1"}, Shape::Sigma1);

	auto single = BooleanDecomposition::from_pairs(1, {{a, zero}});
	CHECK(recompose(single).table() == a.table());
	CHECK(recompose(single).shape() == Shape::Delta2);

	auto dead = BooleanDecomposition::from_pairs(2, {{zero, b}});
	CHECK(row_text(recompose(dead), 0) == "0 0 0");

	auto mixed = BooleanDecomposition::from_pairs(4, {{a, b}, {zero, b}});
	CHECK(row_text(recompose(mixed), 0) == "0 1/3 0");

	CHECK_THROWS_AS(BooleanDecomposition::from_pairs(3, {{a, zero}}), DimensionError);
	CHECK_THROWS_AS(BooleanDecomposition::from_pairs(3, {{a, zero}, {a, b}}), LevelError);
	CHECK_THROWS_AS(
	    BooleanDecomposition::from_pairs(1, {{a, trace_of({"0 0"}, Shape::Sigma1)}}),
	    DimensionError);
	CHECK_THROWS_AS(BooleanDecomposition::from_pairs(1, {{trace_of({"0 1 0"}), zero}}),
	                WrongShapeError);
}

TEST_CASE("verify_theorem on the worked example")
{
	auto f = trace_of({"0 1/2 1/4 3/4"});

	auto settled = verify_theorem(f, 3);
	CHECK(settled.passed());
	CHECK(settled.k == 1);
	CHECK(settled.limits[0] == LimitStatus::Inconclusive);
	CHECK(settled.recomposition_observed_n == 3);
	using Sets = std::vector<std::vector<std::size_t>>;
	CHECK(settled.barrier_history[0] == Sets{{}, {}, {1}, {1}});
	CHECK(settled.barrier_bound() == 1);

	auto verbatim = verify_theorem(f, 3, PrefixCounting::Lookahead);
	CHECK(verbatim.passed());
	CHECK(verbatim.recomposition_observed_n == 1);
	CHECK(verbatim.barrier_history[0] == Sets{{}, {}, {}, {}});

	std::ostringstream os;
	write_theorem_report(os, settled);
	CHECK(os.str() == "theorem n=3 k=1 counting=settled\n"
	                  "x,input_final,recomposed_final,limit,recomposed_sigma_changes,barrier\n"
	                  "0,3/4,3/4,inconclusive,2,{1}\n"
	                  "check limit_equality PASS\n"
	                  "check mind_change_bound PASS observed_n=3 level=3\n"
	                  "check barrier_monotone PASS\n"
	                  "check barrier_size PASS\n"
	                  "result PASS\n");
}

TEST_CASE("verify_theorem on Sigma1 traces at level 1")
{
	for (std::uint64_t seed = 0; seed < 100; seed++) {
		auto f = random_sigma1_trace(seed, 3, 12, 8);
		auto r = verify_theorem(f, 1);
		CHECK(r.passed());
		for (const auto &history : r.barrier_history)
			for (const auto &xs : history)
				CHECK(xs.empty());
	}
}

TEST_CASE("property: settled decomposition round trip")
{
	for (std::uint64_t seed = 0; seed < 1000; seed++) {
		std::size_t n = 1 + seed % 6;
		auto f = random_bounded_trace(seed, 1 + seed % 8, 2 + seed % 31, n);
		auto d = decompose(f, n);
		for (const auto &p : d.pairs()) {
			CHECK(satisfies(p.a.table(), Shape::Sigma1));
			CHECK(satisfies(p.b.table(), Shape::Sigma1));
		}
		auto h = recompose(d);
		CHECK(h.table() == oracle_recompose(d));
		CHECK(h.table() == f.table());

		auto r = verify_theorem(f, n);
		CHECK(r.passed());
		for (std::size_t x = 0; x < f.elements(); x++)
			CHECK(r.recomposed_sigma_changes[x] <= n - 1);
	}
}

TEST_CASE("property: verbatim decomposition keeps the structural guarantees")
{
	for (std::uint64_t seed = 0; seed < 500; seed++) {
		std::size_t n = 1 + seed % 6;
		auto f = random_bounded_trace(seed, 4, 24, n);
		auto d = decompose(f, n, PrefixCounting::Lookahead);
		CHECK(recompose(d).table() == oracle_recompose(d));
		auto r = verify_theorem(f, n, PrefixCounting::Lookahead);
		CHECK(r.passed(TheoremCheck::MindChangeBound));
		CHECK(r.passed(TheoremCheck::BarrierMonotone));
		CHECK(r.passed(TheoremCheck::BarrierSize));
	}
}

TEST_CASE("property: arbitrary c.e. pairs recompose within level 2(k+1)")
{
	for (std::uint64_t seed = 0; seed < 400; seed++) {
		std::size_t pairs = 1 + seed % 4;
		bool odd = seed % 2 == 1;
		std::vector<ComponentPair> comps;
		for (std::size_t i = 0; i < pairs; i++) {
			auto a = random_sigma1_trace(seed * 31 + 2 * i, 3, 24, 12);
			auto b = random_sigma1_trace(seed * 31 + 2 * i + 1, 3, 24, 12);
			if (odd && i + 1 == pairs)
				b = validate(Table(3, 24), Shape::Sigma1);
			comps.push_back({a, b});
		}
		std::size_t n = odd ? 2 * pairs - 1 : 2 * pairs;
		auto d = BooleanDecomposition::from_pairs(n, comps);
		auto h = recompose(d);
		CHECK(classify(h).observed_n <= n);
		for (std::size_t x = 0; x < h.elements(); x++) {
			auto history = barrier_history(d, x);
			CHECK(history.front().empty());
			for (std::size_t s = 0; s + 1 < history.size(); s++)
				CHECK(std::includes(history[s + 1].begin(), history[s + 1].end(),
				                    history[s].begin(), history[s].end()));
			CHECK(history.back().size() <= (n % 2 == 0 ? pairs : pairs - 1));
		}
	}
}

TEST_CASE("crisp special case: components are crisp sets")
{
	for (std::uint64_t seed = 0; seed < 200; seed++) {
		auto f = random_crisp_trace(seed, 3, 16);
		std::size_t n = classify(f).observed_n;
		auto d = decompose(f, n);
		for (const auto &p : d.pairs()) {
			CHECK(satisfies(p.a.table(), Shape::Crisp));
			CHECK(satisfies(p.b.table(), Shape::Crisp));
		}
		CHECK(recompose(d).table() == f.table());
	}
}

TEST_CASE("decomposition bundle format")
{
	auto d = decompose(trace_of({"0 1/2 1/4 3/4"}), 3, PrefixCounting::Lookahead);
	std::ostringstream os;
	write_decomposition(os, d);
	const std::string golden = "decomp n=3 k=1 pairs=2\n"
	                           "trace X=1 S=4 shape=Sigma1\n0 0 0 0\n"
	                           "trace X=1 S=4 shape=Sigma1\n0 1/2 1 1\n"
	                           "trace X=1 S=4 shape=Sigma1\n0 0 1/4 3/4\n"
	                           "trace X=1 S=4 shape=Sigma1\n0 0 0 0\n";
	CHECK(os.str() == golden);

	std::istringstream in(golden);
	CHECK(read_decomposition(in) == d);

	auto parse = [](const std::string &s) {
		std::istringstream is(s);
		return read_decomposition(is);
	};
	CHECK_THROWS_AS(parse("decomp n=3 k=0 pairs=2\n"), ParseError);
	CHECK_THROWS_AS(parse("decomp n=3 k=1\n"), ParseError);
	CHECK_THROWS_AS(parse("nonsense\n"), ParseError);
	CHECK_THROWS_AS(parse("decomp n=1 k=0 pairs=1\ntrace X=1 S=2 shape=Sigma1\n0 1\n"),
	                ParseError);
	CHECK_THROWS_AS(parse("decomp n=1 k=0 pairs=1\n"
	                      "trace X=1 S=2 shape=Sigma1\n0 1\n"
	                      "trace X=1 S=2 shape=Sigma1\n0 1\n"),
	                LevelError);
	CHECK_THROWS_AS(parse("decomp n=2 k=0 pairs=1\n"
	                      "trace X=1 S=2 shape=Delta2\n0 1\n"
	                      "trace X=1 S=2 shape=Sigma1\n0 1\n"),
	                WrongShapeError);
}
