#include "folim/pairing.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>

#include "folim/error.hpp"
#include "folim/evaluator.hpp"
#include "folim/rng.hpp"

namespace folim {
namespace {

// Conjuncts are checked as soon as their last free variable is assigned, so
// failing prefixes are cut off and fully checked prefixes are counted in bulk.
struct Counter {
  std::vector<Evaluator> parts;
  std::vector<std::vector<std::size_t>> at_level;  // conjunct indices by level
  std::vector<std::int64_t> tail;                  // n^(k - level)
  std::vector<NodeId> tuple;
  std::size_t k = 0;
  NodeId n = 0;
  std::size_t last_level = 0;

  std::int64_t count(std::size_t level) {
    for (auto i : at_level[level])
      if (!parts[i](tuple)) return 0;
    if (level >= last_level) return tail[level];
    std::int64_t c = 0;
    for (NodeId v = 0; v < n; ++v) {
      tuple[level] = v;
      c += count(level + 1);
    }
    return c;
  }
};

Counter make_counter(const PlaneCTree& s, const FormulaPtr& f, const std::vector<std::string>& vars) {
  Counter c;
  c.k = vars.size();
  c.n = static_cast<NodeId>(s.size());
  c.tuple.assign(c.k, 0);
  c.at_level.resize(c.k + 1);
  std::vector<FormulaPtr> conj = f->op == Op::And ? f->kids : std::vector<FormulaPtr>{f};
  for (const auto& g : conj) {
    std::size_t level = 0;
    for (const auto& v : free_variables(g))
      level = std::max(level, static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin()) + 1);
    c.at_level[level].push_back(c.parts.size());
    c.last_level = std::max(c.last_level, level);
    c.parts.emplace_back(s, g, vars);
  }
  c.tail.assign(c.k + 1, 1);
  for (std::size_t l = c.k; l-- > 0;) c.tail[l] = c.tail[l + 1] * c.n;
  return c;
}

}  // namespace

unsigned default_threads() {
  if (const char* e = std::getenv("FOLIM_THREADS")) {
    int v = std::atoi(e);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

Rational stone_pairing(const PlaneCTree& s, const FormulaPtr& f, unsigned threads) {
  const auto vars = free_variables(f);
  const std::size_t k = vars.size();
  const auto n = static_cast<std::int64_t>(s.size());
  std::int64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > (std::int64_t{1} << 62) / n) throw ValidationError("tuple space too large for exact pairing");
    total *= n;
  }
  if (threads == 0) threads = default_threads();
  std::int64_t hits = 0;
  if (k == 0 || threads <= 1 || n < 2) {
    Counter c = make_counter(s, f, vars);
    hits = c.count(0);
  } else {
    // Split on the first variable; each worker owns its own evaluators.
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
    std::vector<std::int64_t> part(threads, 0);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          Counter c = make_counter(s, f, vars);
          for (auto i : c.at_level[0])
            if (!c.parts[i](c.tuple)) return;
          for (NodeId v = static_cast<NodeId>(w); v < n; v += static_cast<NodeId>(threads)) {
            c.tuple[0] = v;
            part[w] += c.count(1);
          }
        } catch (...) {
          errs[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
    for (auto p : part) hits += p;
  }
  return Rational(hits, total);
}

McEstimate stone_pairing_mc(const PlaneCTree& s, const FormulaPtr& f, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw ValidationError("samples must be >= 1");
  Evaluator ev(s, f);
  Rng rng(seed);
  std::vector<NodeId> tuple(ev.free_order().size());
  McEstimate m;
  m.samples = samples;
  for (std::uint64_t i = 0; i < samples; ++i) {
    for (auto& x : tuple) x = static_cast<NodeId>(uniform_below(rng, s.size()));
    if (ev(tuple)) ++m.hits;
  }
  m.estimate = static_cast<double>(m.hits) / static_cast<double>(samples);
  m.stderr_ = std::sqrt(m.estimate * (1 - m.estimate) / static_cast<double>(samples));
  return m;
}

std::string format_rational(const Rational& r, bool decimal, int places) {
  std::ostringstream os;
  if (!decimal) {
    os << r.numerator() << '/' << r.denominator();
    return os.str();
  }
  // Exact long division, rounded half up at the last place.
  std::int64_t num = r.numerator(), den = r.denominator();
  bool negative = num < 0;
  if (negative) num = -num;
  std::int64_t whole = num / den;
  __int128 rem = num % den;
  std::string digits;
  for (int i = 0; i < places + 1; ++i) {
    rem *= 10;
    digits.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
    rem %= den;
  }
  bool up = digits.back() >= '5';
  digits.pop_back();
  for (int i = places - 1; up && i >= 0; --i) {
    if (digits[i] == '9') {
      digits[i] = '0';
    } else {
      ++digits[i];
      up = false;
    }
  }
  if (up) ++whole;
  os << (negative ? "-" : "") << whole;
  if (places > 0) os << '.' << digits;
  return os.str();
}

}  // namespace folim
