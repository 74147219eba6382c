#include "fuzzy_ershov/boolean.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fuzzy_ershov/mindchange.hpp"

namespace fuzzy_ershov {

std::string_view to_string(PrefixCounting c) noexcept
{
	return c == PrefixCounting::Settled ? "settled" : "lookahead";
}

PrefixCounting parse_prefix_counting(std::string_view text)
{
	if (text == "settled")
		return PrefixCounting::Settled;
	if (text == "lookahead")
		return PrefixCounting::Lookahead;
	throw ParseError(ParseError::Kind::Malformed,
	                 "unknown prefix counting '" + std::string(text) + "'");
}

std::string_view to_string(TheoremCheck c) noexcept
{
	switch (c) {
	case TheoremCheck::LimitEquality: return "limit_equality";
	case TheoremCheck::MindChangeBound: return "mind_change_bound";
	case TheoremCheck::BarrierMonotone: return "barrier_monotone";
	case TheoremCheck::BarrierSize: return "barrier_size";
	}
	return "?";
}

BooleanDecomposition BooleanDecomposition::from_pairs(std::size_t n,
                                                      std::vector<ComponentPair> pairs)
{
	if (n == 0)
		throw LevelError(0, "level must be at least 1");
	std::size_t k = (n - 1) / 2;
	if (pairs.size() != k + 1)
		throw DimensionError("level " + std::to_string(n) + " needs " + std::to_string(k + 1) +
		                     " pairs, got " + std::to_string(pairs.size()));
	const ApproximationTrace &first = pairs.front().a;
	for (std::size_t i = 0; i < pairs.size(); i++) {
		for (const ApproximationTrace *t : {&pairs[i].a, &pairs[i].b}) {
			if (t->shape() != Shape::Sigma1)
				throw WrongShapeError("component of pair " + std::to_string(i + 1) +
				                      " is not Sigma1");
			if (t->elements() != first.elements() || t->stages() != first.stages())
				throw DimensionError("component of pair " + std::to_string(i + 1) +
				                     " differs in dimensions");
		}
	}
	if (n % 2 == 1) {
		const ApproximationTrace &last = pairs.back().b;
		for (std::size_t x = 0; x < last.elements(); x++)
			for (std::size_t s = 0; s < last.stages(); s++)
				if (!last.at(x, s).is_zero())
					throw LevelError(x, "odd level " + std::to_string(n) + " requires B_" +
					                        std::to_string(k + 1) + " to be empty");
	}
	return BooleanDecomposition(n, std::move(pairs));
}

namespace {

std::vector<std::size_t> prefix_counts(const MindChangeProfile &p, std::size_t x,
                                       PrefixCounting counting)
{
	std::vector<std::size_t> c(p.stages);
	for (std::size_t s = 0; s < p.stages; s++) {
		if (counting == PrefixCounting::Lookahead)
			c[s] = change_count_prefix(p, x, s);
		else
			c[s] = s == 0 ? 0 : change_count_prefix(p, x, s - 1);
	}
	return c;
}

} // namespace

BooleanDecomposition decompose(const ApproximationTrace &f, std::size_t n,
                               PrefixCounting counting)
{
	if (n == 0)
		throw LevelError(0, "level must be at least 1");
	auto sigma = sigma_profile(f);
	for (std::size_t x = 0; x < f.elements(); x++) {
		if (!f.at(x, 0).is_zero())
			throw LevelError(x, "element " + std::to_string(x) + " does not start at 0");
		if (sigma.change_count(x) + 1 > n)
			throw LevelError(x, "element " + std::to_string(x) + " has " +
			                        std::to_string(sigma.change_count(x)) +
			                        " mind changes, level " + std::to_string(n) +
			                        " allows " + std::to_string(n - 1));
	}

	const std::size_t k = (n - 1) / 2;
	const std::size_t X = f.elements(), S = f.stages();
	std::vector<Table> a(k + 1, Table(X, S)), b(k + 1, Table(X, S));
	for (std::size_t x = 0; x < X; x++) {
		auto c = prefix_counts(sigma, x, counting);
		for (std::size_t i = 1; i <= k + 1; i++) {
			Table &ha = a[i - 1];
			Table &hb = b[i - 1];
			for (std::size_t s = 0; s < S; s++) {
				if (c[s] < 2 * i - 2) {
					ha.at(x, s) = UnitRational::zero();
				} else if (c[s] == 2 * i - 2) {
					ha.at(x, s) = f.at(x, s);
				} else {
					// c(0) <= 1 < 2i-2 for i >= 2, and c(0) = 0 for i = 1 since f(x,0) = 0
					if (s == 0)
						throw std::logic_error("frozen A component at stage 0");
					ha.at(x, s) = ha.at(x, s - 1);
				}

				if (c[s] < 2 * i - 1)
					hb.at(x, s) = UnitRational::zero();
				else if (c[s] == 2 * i - 1)
					hb.at(x, s) = f.at(x, s).complement();
				else
					hb.at(x, s) = UnitRational::one();
			}
		}
	}

	std::vector<ComponentPair> pairs;
	for (std::size_t i = 0; i <= k; i++)
		pairs.push_back({validate(std::move(a[i]), Shape::Sigma1),
		                 validate(std::move(b[i]), Shape::Sigma1)});
	return BooleanDecomposition::from_pairs(n, std::move(pairs));
}

ApproximationTrace recompose(const BooleanDecomposition &d)
{
	Table t(d.elements(), d.stages());
	for (std::size_t x = 0; x < d.elements(); x++) {
		for (std::size_t s = 0; s < d.stages(); s++) {
			UnitRational best;
			for (const auto &p : d.pairs())
				best = std::max(best, std::min(p.a.at(x, s), p.b.at(x, s).complement()));
			t.at(x, s) = best;
		}
	}
	return validate(std::move(t), Shape::Delta2);
}

std::vector<std::vector<std::size_t>> barrier_history(const BooleanDecomposition &d,
                                                      std::size_t x)
{
	std::vector<std::vector<std::size_t>> out(d.stages());
	for (std::size_t s = 0; s < d.stages(); s++)
		for (std::size_t i = 0; i < d.pairs().size(); i++) {
			const auto &p = d.pairs()[i];
			if (p.b.at(x, s).complement() < p.a.at(x, s))
				out[s].push_back(i + 1);
		}
	return out;
}

bool TheoremReport::passed(TheoremCheck c) const
{
	return std::none_of(failures.begin(), failures.end(),
	                    [c](const Failure &f) { return f.check == c; });
}

TheoremReport verify_theorem(const ApproximationTrace &f, std::size_t n, PrefixCounting counting)
{
	BooleanDecomposition d = decompose(f, n, counting);
	ApproximationTrace h = recompose(d);
	auto f_snap = limit_snapshot(f);
	auto h_snap = limit_snapshot(h);
	auto h_sigma = sigma_profile(h);

	TheoremReport r;
	r.n = n;
	r.k = d.k();
	r.counting = counting;
	r.input_finals = f_snap.final_values;
	r.recomposed_finals = h_snap.final_values;
	r.recomposition_observed_n = h_sigma.max_change_count() + 1;

	const std::size_t last = f.stages() - 1;
	for (std::size_t x = 0; x < f.elements(); x++) {
		if (!f_snap.stabilized_before_horizon(x)) {
			r.limits.push_back(LimitStatus::Inconclusive);
		} else if (f_snap.final_values[x] == h_snap.final_values[x]) {
			r.limits.push_back(LimitStatus::Match);
		} else {
			r.limits.push_back(LimitStatus::Mismatch);
			r.failures.push_back({TheoremCheck::LimitEquality, x, last,
			                      "input limit " + f_snap.final_values[x].str() +
			                          ", recomposed " + h_snap.final_values[x].str()});
		}

		const auto &changes = h_sigma.change_stages[x];
		r.recomposed_sigma_changes.push_back(changes.size());
		if (changes.size() > n - 1)
			r.failures.push_back({TheoremCheck::MindChangeBound, x, changes[n - 1],
			                      std::to_string(changes.size()) + " mind changes, bound " +
			                          std::to_string(n - 1)});

		auto history = barrier_history(d, x);
		for (std::size_t s = 0; s + 1 < history.size(); s++) {
			if (!std::includes(history[s + 1].begin(), history[s + 1].end(),
			                   history[s].begin(), history[s].end())) {
				r.failures.push_back({TheoremCheck::BarrierMonotone, x, s,
				                      "X_" + std::to_string(s) + " not contained in X_" +
				                          std::to_string(s + 1)});
				break;
			}
		}
		if (history.back().size() > r.barrier_bound())
			r.failures.push_back({TheoremCheck::BarrierSize, x, last,
			                      "|X| = " + std::to_string(history.back().size()) +
			                          ", bound " + std::to_string(r.barrier_bound())});
		r.barrier_history.push_back(std::move(history));
	}
	return r;
}

void write_decomposition(std::ostream &os, const BooleanDecomposition &d)
{
	os << "decomp n=" << d.level() << " k=" << d.k() << " pairs=" << d.pairs().size() << '\n';
	for (const auto &p : d.pairs()) {
		write_trace(os, p.a);
		write_trace(os, p.b);
	}
}

namespace {

std::size_t manifest_field(std::istringstream &in, const std::string &key)
{
	std::string token;
	in >> token;
	if (token.rfind(key + "=", 0) != 0)
		throw ParseError(ParseError::Kind::Structure, "manifest: expected '" + key + "=<int>'");
	std::string digits = token.substr(key.size() + 1);
	if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
		throw ParseError(ParseError::Kind::Structure, "manifest: bad integer in '" + token + "'");
	return std::stoul(digits);
}

} // namespace

BooleanDecomposition read_decomposition(std::istream &is)
{
	std::string line;
	while (std::getline(is, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
	}
	std::istringstream in(line);
	std::string tag;
	in >> tag;
	if (tag != "decomp")
		throw ParseError(ParseError::Kind::Structure,
		                 "expected manifest 'decomp n=<int> k=<int> pairs=<int>'");
	std::size_t n = manifest_field(in, "n");
	std::size_t k = manifest_field(in, "k");
	std::size_t count = manifest_field(in, "pairs");
	if (n == 0 || k != (n - 1) / 2 || count != k + 1)
		throw ParseError(ParseError::Kind::Structure, "manifest fields are inconsistent");

	std::vector<ComponentPair> pairs;
	for (std::size_t i = 0; i < count; i++) {
		ApproximationTrace a = read_trace(is);
		ApproximationTrace b = read_trace(is);
		pairs.push_back({std::move(a), std::move(b)});
	}
	return BooleanDecomposition::from_pairs(n, std::move(pairs));
}

namespace {

std::string paint(std::string_view word, bool ok, bool color)
{
	if (!color)
		return std::string(word);
	return std::string(ok ? "\x1b[32m" : "\x1b[31m") + std::string(word) + "\x1b[0m";
}

const char *limit_word(LimitStatus s)
{
	switch (s) {
	case LimitStatus::Match: return "match";
	case LimitStatus::Mismatch: return "mismatch";
	case LimitStatus::Inconclusive: return "inconclusive";
	}
	return "?";
}

} // namespace

void write_theorem_report(std::ostream &os, const TheoremReport &r, bool color)
{
	os << "theorem n=" << r.n << " k=" << r.k << " counting=" << to_string(r.counting) << '\n';
	os << "x,input_final,recomposed_final,limit,recomposed_sigma_changes,barrier\n";
	for (std::size_t x = 0; x < r.limits.size(); x++) {
		os << x << ',' << r.input_finals[x] << ',' << r.recomposed_finals[x] << ','
		   << limit_word(r.limits[x]) << ',' << r.recomposed_sigma_changes[x] << ",{";
		const auto &final_set = r.barrier_history[x].back();
		for (std::size_t j = 0; j < final_set.size(); j++)
			os << (j ? " " : "") << final_set[j];
		os << "}\n";
	}
	for (TheoremCheck c : {TheoremCheck::LimitEquality, TheoremCheck::MindChangeBound,
	                       TheoremCheck::BarrierMonotone, TheoremCheck::BarrierSize}) {
		os << "check " << to_string(c) << ' ';
		auto it = std::find_if(r.failures.begin(), r.failures.end(),
		                       [c](const auto &f) { return f.check == c; });
		if (it == r.failures.end())
			os << paint("PASS", true, color);
		else
			os << paint("FAIL", false, color) << " x=" << it->x << " s=" << it->s << ' '
			   << it->detail;
		if (c == TheoremCheck::MindChangeBound)
			os << " observed_n=" << r.recomposition_observed_n << " level=" << r.n;
		os << '\n';
	}
	os << "result " << paint(r.passed() ? "PASS" : "FAIL", r.passed(), color) << '\n';
}

} // namespace fuzzy_ershov
