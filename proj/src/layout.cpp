#include "otis/layout.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "otis/heuchenne.hpp"
#include "otis/iso_canon.hpp"
#include "otis/otis_builder.hpp"
#include "otis/debruijn.hpp"

namespace otis {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

LayoutPermutation::LayoutPermutation(std::uint64_t p_prime, std::uint64_t q_prime,
                                     std::vector<std::uint64_t> mapping)
    : p_prime_(p_prime), q_prime_(q_prime), lambda_(gcd(p_prime, q_prime)), mapping_(std::move(mapping)) {}

namespace {

void check_primes(std::uint64_t p_prime, std::uint64_t q_prime) {
  if (p_prime < 1 || q_prime < 1) throw std::invalid_argument("p' and q' must be positive");
  if (p_prime + q_prime - 1 > (std::uint64_t{1} << 24)) throw std::invalid_argument("p' + q' too large");
}

}  // namespace

LayoutPermutation LayoutPermutation::build_g(std::uint64_t p_prime, std::uint64_t q_prime) {
  check_primes(p_prime, q_prime);
  const std::uint64_t n = p_prime + q_prime - 1;
  std::vector<std::uint64_t> g(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i + 2 <= q_prime) {
      g[i] = i + p_prime;
    } else if (i == q_prime - 1) {
      g[i] = p_prime - 1;
    } else {
      g[i] = i - q_prime;
    }
  }
  return {p_prime, q_prime, std::move(g)};
}

LayoutPermutation LayoutPermutation::build_f(std::uint64_t p_prime, std::uint64_t q_prime) {
  check_primes(p_prime, q_prime);
  const std::uint64_t n = p_prime + q_prime - 1;
  std::vector<std::uint64_t> f(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i + 2 <= q_prime) {
      f[i] = i + p_prime;
    } else if (i == q_prime - 1) {
      f[i] = p_prime - 1;
    } else {
      f[i] = (i + p_prime - 1) % n;
    }
  }
  return {p_prime, q_prime, std::move(f)};
}

std::vector<std::vector<std::uint64_t>> orbits(const LayoutPermutation& perm) {
  const auto& map = perm.mapping();
  std::vector<bool> seen(map.size(), false);
  std::vector<std::vector<std::uint64_t>> result;
  for (std::uint64_t start = 0; start < map.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::uint64_t> orbit;
    for (std::uint64_t i = start; !seen[i]; i = map[i]) {
      seen[i] = true;
      orbit.push_back(i);
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool is_cyclic(const LayoutPermutation& perm) { return orbits(perm).size() == 1; }

bool gcd_layout_test(std::uint64_t p_prime, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (p_prime > n + 1) throw std::invalid_argument("p' must lie in [0, n+1]");
  return gcd(p_prime, n + 1) == 1;
}

std::uint64_t euler_totient(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("totient needs m >= 1");
  std::uint64_t result = m;
  for (std::uint64_t f = 2; f <= m / f; ++f) {
    if (m % f != 0) continue;
    while (m % f == 0) m /= f;
    result -= result / f;
  }
  if (m > 1) result -= result / m;
  return result;
}

bool line_digraph_layout_test(std::uint64_t p, std::uint64_t q, std::uint64_t d) {
  const OtisParams params(p, q, d);
  return gcd(params.p(), params.q()) % params.d() == 0;
}

bool is_power_of(std::uint64_t value, std::uint64_t d) {
  if (value == 0 || d < 2) return value == 1;
  while (value % d == 0) value /= d;
  return value == 1;
}

namespace {

std::uint64_t log_of_power(std::uint64_t value, std::uint64_t d) {
  std::uint64_t k = 0;
  while (value > 1) {
    value /= d;
    ++k;
  }
  return k;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t f = 1; f <= m / f; ++f) {
    if (m % f != 0) continue;
    small.push_back(f);
    if (f != m / f) large.push_back(m / f);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

template <class Task>
void run_parallel(std::size_t count, std::size_t threads, Task task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) task(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          task(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::string to_string(Evidence evidence) {
  switch (evidence) {
    case Evidence::kGcdFastPath:
      return "gcd-fast-path";
    case Evidence::kLineDigraphExclusion:
      return "line-digraph-exclusion";
    case Evidence::kCanonicalForm:
      return "canonical-form";
  }
  return "unknown";
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> LayoutReport::positives() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& c : candidates) {
    if (c.isomorphic) out.emplace_back(c.p, c.q);
  }
  return out;
}

nlohmann::ordered_json to_json(const LayoutReport& report) {
  nlohmann::ordered_json candidates = nlohmann::ordered_json::array();
  for (const auto& c : report.candidates) {
    candidates.push_back({{"p", c.p}, {"q", c.q}, {"isomorphic", c.isomorphic}, {"evidence", to_string(c.evidence)}});
  }
  nlohmann::ordered_json min_pair = nullptr;
  if (report.min_p_plus_q) min_pair = {report.min_p_plus_q->first, report.min_p_plus_q->second};
  return {{"d", report.d},
          {"vertices", report.vertices},
          {"candidates", std::move(candidates)},
          {"layout_count", report.layout_count},
          {"min_p_plus_q", std::move(min_pair)}};
}

LayoutReport enumerate_layouts(const MultiDigraph& target, std::uint64_t d, const LayoutOptions& options) {
  if (d < 2) throw std::invalid_argument("d must be greater than 1");
  if (!is_d_regular(target, d)) {
    throw std::invalid_argument("target is not " + std::to_string(d) + "-regular");
  }
  check_size_bound(target.vertex_count(), options.size_bound, "layout target");

  const CanonicalForm target_form = canonical_form(target, options.size_bound);
  const bool target_is_line = target.vertex_count() > 0 && is_nth_line_digraph(target, 1).is_nth_line;

  LayoutReport report;
  report.d = d;
  report.vertices = target.vertex_count();
  for (std::uint64_t p : divisors(d * target.vertex_count())) {
    report.candidates.push_back({p, d * target.vertex_count() / p, false, Evidence::kCanonicalForm});
  }

  std::vector<std::vector<std::string>> disagreements(report.candidates.size());
  run_parallel(report.candidates.size(), options.threads, [&](std::size_t k) {
    LayoutCandidate& c = report.candidates[k];
    const MultiDigraph h = build_h(OtisParams(c.p, c.q, d), options.size_bound);
    c.isomorphic = canonical_form(h, options.size_bound) == target_form;

    const auto disagree = [&](const char* test, bool predicted) {
      std::ostringstream msg;
      msg << "(" << c.p << "," << c.q << "): " << test << " predicts "
          << (predicted ? "a layout" : "no layout") << " but canonical forms disagree";
      disagreements[k].push_back(msg.str());
    };
    bool fast = false;
    if (options.debruijn_dimension && is_power_of(c.p, d) && is_power_of(c.q, d)) {
      fast = true;
      c.evidence = Evidence::kGcdFastPath;
      const bool predicted = gcd_layout_test(log_of_power(c.p, d), *options.debruijn_dimension);
      if (predicted != c.isomorphic) disagree("gcd test", predicted);
    }
    if (target_is_line && !line_digraph_layout_test(c.p, c.q, d)) {
      if (!fast) c.evidence = Evidence::kLineDigraphExclusion;
      if (c.isomorphic) disagree("line digraph test", false);
    }
  });
  for (auto& msgs : disagreements) {
    for (auto& msg : msgs) report.fast_path_disagreements.push_back(std::move(msg));
  }

  for (const auto& c : report.candidates) {
    if (!c.isomorphic) continue;
    ++report.layout_count;
    if (!report.min_p_plus_q || c.p + c.q < report.min_p_plus_q->first + report.min_p_plus_q->second) {
      report.min_p_plus_q = {c.p, c.q};
    }
  }
  return report;
}

nlohmann::ordered_json to_json(const ConjectureReport& report) {
  nlohmann::ordered_json counterexamples = nlohmann::ordered_json::array();
  for (const auto& [p, q] : report.counterexamples) counterexamples.push_back({p, q});
  return {{"d", report.d},
          {"n", report.n},
          {"holds", report.holds()},
          {"counterexamples", std::move(counterexamples)},
          {"cross_check_failures", report.cross_check_failures},
          {"layouts", to_json(report.layouts)}};
}

ConjectureReport check_conjecture(std::uint64_t d, std::uint64_t n, const LayoutOptions& options) {
  const MultiDigraph target = build_debruijn(DeBruijnParams(d, n), options.size_bound);
  LayoutOptions with_hint = options;
  with_hint.debruijn_dimension = n;

  ConjectureReport report;
  report.d = d;
  report.n = n;
  report.layouts = enumerate_layouts(target, d, with_hint);
  report.cross_check_failures = report.layouts.fast_path_disagreements;
  for (const auto& c : report.layouts.candidates) {
    if (c.isomorphic && !(is_power_of(c.p, d) && is_power_of(c.q, d))) {
      report.counterexamples.emplace_back(c.p, c.q);
    }
  }
  return report;
}

}  // namespace otis
