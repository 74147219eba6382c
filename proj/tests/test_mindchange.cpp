#include <doctest.h>

#include <sstream>

#include "fuzzy_ershov/gallery.hpp"
#include "fuzzy_ershov/mindchange.hpp"
#include "support.hpp"

using namespace fuzzy_ershov;
using namespace fuzzy_ershov::testing;

namespace {

std::vector<int> signs_of(const MindChangeProfile &p, std::size_t x)
{
	std::vector<int> out;
	for (std::size_t s = 0; s < p.stages; s++)
		out.push_back(p.sign(x, s));
	return out;
}

} // namespace

TEST_CASE("sigma_profile")
{
	auto flat = sigma_profile(trace_of({"0 0 0"}));
	CHECK(signs_of(flat, 0) == std::vector<int>{1, 1, 1});
	CHECK(flat.change_count(0) == 0);

	auto wave = sigma_profile(trace_of({"0 1/2 1/4 3/4"}));
	CHECK(signs_of(wave, 0) == std::vector<int>{1, 1, -1, 1});
	CHECK(wave.change_stages[0] == std::vector<std::size_t>{1, 2});
	CHECK(wave.change_count(0) == 2);

	auto ties = sigma_profile(trace_of({"0 1/4 1/4 1/2"}));
	CHECK(signs_of(ties, 0) == std::vector<int>{1, 1, 1, 1});
	CHECK(ties.change_count(0) == 0);

	// ties carry a negative sign forward too
	auto down_tie = sigma_profile(trace_of({"1/2 1/4 1/4 1/4 1/2"}));
	CHECK(signs_of(down_tie, 0) == std::vector<int>{1, -1, -1, -1, 1});
}

TEST_CASE("pi_profile")
{
	auto flat = pi_profile(trace_of({"1 1 1"}));
	CHECK(signs_of(flat, 0) == std::vector<int>{-1, -1, -1});
	CHECK(flat.change_count(0) == 0);

	auto p = pi_profile(trace_of({"1 1/2 3/4"}));
	CHECK(signs_of(p, 0) == std::vector<int>{-1, -1, 1});
	CHECK(p.change_count(0) == 1);
	CHECK(p.variant == Variant::Pi);
}

TEST_CASE("update_profile")
{
	CHECK(update_profile(trace_of({"0 0 0"})).update_count(0) == 0);
	auto u = update_profile(trace_of({"0 1/2 1/2 1"}));
	CHECK(u.update_count(0) == 2);
	CHECK(u.update_stages[0] == std::vector<std::size_t>{0, 2});
}

TEST_CASE("change_count_prefix")
{
	auto p = sigma_profile(trace_of({"0 1/2 1/4 3/4"}));
	CHECK(change_count_prefix(p, 0, 0) == 0);
	CHECK(change_count_prefix(p, 0, 1) == 1);
	CHECK(change_count_prefix(p, 0, 2) == 2);
	// no flip is assumed past the horizon
	CHECK(change_count_prefix(p, 0, 3) == 2);
	CHECK_THROWS_AS(change_count_prefix(p, 0, 4), std::out_of_range);
	CHECK_THROWS_AS(change_count_prefix(p, 1, 0), std::out_of_range);

	auto flat = sigma_profile(trace_of({"1/3 1/3 1/3"}));
	for (std::size_t s = 0; s < 3; s++)
		CHECK(change_count_prefix(flat, 0, s) == 0);
}

TEST_CASE("write_profile")
{
	std::ostringstream os;
	write_profile(os, sigma_profile(trace_of({"0 1/2 1/4 3/4", "0 0 0 0"})));
	CHECK(os.str() == "x=0 variant=Sigma signs=++-+ changes=1,2 count=2\n"
	                  "x=1 variant=Sigma signs=++++ changes=- count=0\n");
}

TEST_CASE("property: profiles agree with the case-by-case recursion")
{
	for (std::uint64_t seed = 0; seed < 300; seed++) {
		auto a = random_delta2_trace(seed, 5, 20, 6);
		auto sigma = sigma_profile(a);
		auto pi = pi_profile(a);
		auto upd = update_profile(a);
		for (std::size_t x = 0; x < a.elements(); x++) {
			CHECK(signs_of(sigma, x) == oracle_signs(a.row(x), 1));
			CHECK(signs_of(pi, x) == oracle_signs(a.row(x), -1));
			CHECK(upd.update_count(x) == oracle_value_changes(a.row(x)));
			CHECK(upd.update_count(x) >= sigma.change_count(x));
			CHECK(upd.update_count(x) >= pi.change_count(x));
			std::size_t prev = 0;
			for (std::size_t s = 0; s < a.stages(); s++) {
				std::size_t c = change_count_prefix(sigma, x, s);
				CHECK(c >= prev);
				prev = c;
			}
			CHECK(prev == sigma.change_count(x));
		}
	}
}

TEST_CASE("property: complement duality")
{
	for (std::uint64_t seed = 0; seed < 300; seed++) {
		auto a = random_delta2_trace(seed, 4, 16, 8);
		auto pi_c = pi_profile(complement(a));
		auto sigma = sigma_profile(a);
		for (std::size_t x = 0; x < a.elements(); x++)
			for (std::size_t s = 0; s < a.stages(); s++)
				CHECK(pi_c.sign(x, s) == -sigma.sign(x, s));
	}
}

TEST_CASE("property: crisp flip law")
{
	for (std::uint64_t seed = 0; seed < 300; seed++) {
		auto a = random_crisp_trace(seed, 4, 20);
		auto sigma = sigma_profile(a);
		auto upd = update_profile(a);
		for (std::size_t x = 0; x < a.elements(); x++) {
			std::size_t flips = upd.update_count(x);
			CHECK(sigma.change_count(x) == (flips == 0 ? 0 : flips - 1));
		}
	}
}

TEST_CASE("property: extending the horizon never lowers counts")
{
	for (std::uint64_t seed = 0; seed < 200; seed++) {
		auto a = random_delta2_trace(seed, 3, 15, 5);
		for (std::size_t S = 1; S < a.stages(); S++) {
			auto shorter = truncate(a, S);
			auto ls = sigma_profile(shorter), ll = sigma_profile(a);
			auto us = update_profile(shorter), ul = update_profile(a);
			for (std::size_t x = 0; x < a.elements(); x++) {
				CHECK(ls.change_count(x) <= ll.change_count(x));
				CHECK(us.update_count(x) <= ul.update_count(x));
			}
		}
	}
}

TEST_CASE("property: monotone shapes have no mind changes")
{
	for (std::uint64_t seed = 0; seed < 200; seed++) {
		auto a = random_sigma1_trace(seed, 4, 16, 10);
		CHECK(sigma_profile(a).max_change_count() == 0);
		CHECK(pi_profile(complement(a)).max_change_count() == 0);
	}
}
