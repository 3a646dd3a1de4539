#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "otis/debruijn.hpp"
#include "otis/graph_io.hpp"
#include "otis/heuchenne.hpp"
#include "otis/iso_canon.hpp"
#include "otis/layout.hpp"
#include "otis/otis_builder.hpp"

namespace otis::cli {

namespace {

// Thrown by validation callbacks; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::size_t size_bound = kDefaultSizeBound;
  std::size_t threads = 0;
};

std::size_t size_bound_from_env() {
  const char* value = std::getenv("OTIS_SIZE_BOUND");
  if (value == nullptr || *value == '\0') return kDefaultSizeBound;
  try {
    std::size_t used = 0;
    const unsigned long long parsed = std::stoull(value, &used);
    if (used != std::string(value).size()) throw std::invalid_argument(value);
    return static_cast<std::size_t>(parsed);
  } catch (const std::exception&) {
    throw UsageError(std::string("OTIS_SIZE_BOUND is not a nonnegative integer: ") + value);
  }
}

std::string format_orbit(const std::vector<std::uint64_t>& orbit) {
  std::ostringstream s;
  s << '{';
  for (std::size_t k = 0; k < orbit.size(); ++k) s << (k ? "," : "") << orbit[k];
  s << '}';
  return s.str();
}

void print_layout_text(std::ostream& out, const LayoutReport& report) {
  out << "target: " << report.vertices << " vertices, d=" << report.d << '\n';
  for (const auto& c : report.candidates) {
    out << "  p=" << c.p << " q=" << c.q << ": " << (c.isomorphic ? "layout" : "no layout") << " ["
        << to_string(c.evidence) << "]\n";
  }
  out << "layout_count=" << report.layout_count << '\n';
  if (report.min_p_plus_q) {
    out << "min p+q: (" << report.min_p_plus_q->first << "," << report.min_p_plus_q->second << ")\n";
  } else {
    out << "min p+q: none\n";
  }
  for (const auto& msg : report.fast_path_disagreements) out << "DISAGREEMENT " << msg << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"OTIS layouts, De Bruijn digraphs and line digraph recognition", "otis"};
  app.require_subcommand(1);
  Settings settings;
  std::optional<std::size_t> size_bound_flag;
  app.add_option("--size-bound", size_bound_flag,
                 "Largest vertex count to materialize (default 4096, or $OTIS_SIZE_BOUND)");
  app.add_option("--threads", settings.threads, "Worker threads for layout enumeration (0 = all cores)");

  // Each subcommand sets `action`; it runs after parsing succeeds.
  std::function<int()> action;

  std::uint64_t p = 0, q = 0, d = 0, n = 1, p_prime = 0, q_prime = 0;
  std::string format = "edgelist";
  std::string report_format = "text";
  std::string graph_path, file_a, file_b;

  auto* construct = app.add_subcommand("construct", "Write H(p,q,d)");
  construct->add_option("-p", p, "Transmitter group count")->required();
  construct->add_option("-q", q, "Receiver group count")->required();
  construct->add_option("-d", d, "Electronic group size")->required();
  construct->add_option("--format", format, "edgelist, dot or json")->capture_default_str();
  construct->callback([&] {
    [[maybe_unused]] const OtisParams checked(p, q, d);
    const GraphFormat fmt = parse_graph_format(format);
    action = [&, fmt] {
      write_graph(out, build_h(OtisParams(p, q, d), settings.size_bound), fmt);
      return kExitHolds;
    };
  });

  auto* debruijn = app.add_subcommand("debruijn", "Write B(d,n)");
  debruijn->add_option("-d", d, "Alphabet size")->required();
  debruijn->add_option("-n", n, "Word length")->required();
  debruijn->add_option("--format", format, "edgelist, dot or json")->capture_default_str();
  debruijn->callback([&] {
    const DeBruijnParams params(d, n);
    const GraphFormat fmt = parse_graph_format(format);
    action = [&, params, fmt] {
      write_graph(out, build_debruijn(params, settings.size_bound), fmt);
      return kExitHolds;
    };
  });

  auto* orbits_cmd = app.add_subcommand("orbits", "Orbits of the layout permutation g_{p',q'}");
  orbits_cmd->add_option("--p-prime", p_prime, "p'")->required();
  orbits_cmd->add_option("--q-prime", q_prime, "q'")->required();
  orbits_cmd->callback([&] {
    const LayoutPermutation g = LayoutPermutation::build_g(p_prime, q_prime);
    action = [&, g] {
      const auto parts = orbits(g);
      out << "lambda=" << g.lambda() << "; orbits:";
      for (const auto& orbit : parts) out << ' ' << format_orbit(orbit);
      out << "; cyclic: " << (parts.size() == 1 ? "yes" : "no") << '\n';
      return parts.size() == 1 ? kExitHolds : kExitFails;
    };
  });

  auto* layout_test = app.add_subcommand("layout-test", "Does B(d,n) have an OTIS(d^p', d^(n+1-p')) layout?");
  layout_test->add_option("--p-prime", p_prime, "p' in [0, n+1]")->required();
  layout_test->add_option("-n", n, "De Bruijn dimension")->required();
  layout_test->callback([&] {
    const bool yes = gcd_layout_test(p_prime, n);
    action = [&, yes] {
      out << (yes ? "yes" : "no") << " (gcd(" << p_prime << "," << n + 1 << ")=" << gcd(p_prime, n + 1) << ")\n";
      return yes ? kExitHolds : kExitFails;
    };
  });

  auto* line_check = app.add_subcommand("line-check", "Is H(p,q,d) or a graph file an nth line digraph?");
  auto* lp = line_check->add_option("-p", p, "Transmitter group count");
  auto* lq = line_check->add_option("-q", q, "Receiver group count");
  auto* ld = line_check->add_option("-d", d, "Electronic group size");
  auto* lg = line_check->add_option("--graph", graph_path, "Edge-list file");
  line_check->add_option("-n", n, "Line digraph order")->capture_default_str();
  lp->excludes(lg);
  lq->excludes(lg);
  ld->excludes(lg);
  line_check->callback([&] {
    if (n < 1) throw UsageError("-n must be at least 1");
    const bool from_file = lg->count() > 0;
    if (!from_file) {
      if (lp->count() == 0 || lq->count() == 0 || ld->count() == 0) {
        throw UsageError("line-check needs either -p -q -d or --graph");
      }
      [[maybe_unused]] const OtisParams checked(p, q, d);
    }
    action = [&, from_file] {
      const MultiDigraph g = from_file ? read_edge_list_file(graph_path, settings.size_bound)
                                       : build_h(OtisParams(p, q, d), settings.size_bound);
      const LineRecognitionVerdict verdict = is_nth_line_digraph(g, n);
      out << verdict.describe() << '\n';
      return verdict.is_nth_line ? kExitHolds : kExitFails;
    };
  });

  auto* layouts = app.add_subcommand("layouts", "All OTIS(p,q,d) layouts of B(d,n) or of a graph file");
  layouts->add_option("-d", d, "Degree")->required();
  auto* lay_n = layouts->add_option("-n", n, "De Bruijn dimension");
  auto* lay_g = layouts->add_option("--graph", graph_path, "Edge-list file instead of B(d,n)");
  lay_n->excludes(lay_g);
  layouts->add_option("--format", report_format, "text or json")->capture_default_str();
  layouts->callback([&] {
    if (report_format != "text" && report_format != "json") throw UsageError("--format must be text or json");
    const bool from_file = lay_g->count() > 0;
    if (!from_file) {
      if (lay_n->count() == 0) throw UsageError("layouts needs -n or --graph");
      [[maybe_unused]] const DeBruijnParams checked(d, n);
    }
    action = [&, from_file] {
      LayoutOptions options;
      options.size_bound = settings.size_bound;
      options.threads = settings.threads;
      MultiDigraph target;
      if (from_file) {
        target = read_edge_list_file(graph_path, settings.size_bound);
      } else {
        target = build_debruijn(DeBruijnParams(d, n), settings.size_bound);
        options.debruijn_dimension = n;
      }
      const LayoutReport report = enumerate_layouts(target, d, options);
      if (report_format == "json") {
        out << to_json(report).dump() << '\n';
      } else {
        print_layout_text(out, report);
      }
      return report.fast_path_disagreements.empty() ? kExitHolds : kExitFails;
    };
  });

  auto* conjecture = app.add_subcommand("conjecture", "Check that every OTIS layout of B(d,n) uses powers of d");
  conjecture->add_option("-d", d, "Degree")->required();
  conjecture->add_option("-n", n, "De Bruijn dimension")->required();
  conjecture->add_option("--format", report_format, "text or json")->capture_default_str();
  conjecture->callback([&] {
    if (report_format != "text" && report_format != "json") throw UsageError("--format must be text or json");
    [[maybe_unused]] const DeBruijnParams checked(d, n);
    action = [&] {
      LayoutOptions options;
      options.size_bound = settings.size_bound;
      options.threads = settings.threads;
      const ConjectureReport report = check_conjecture(d, n, options);
      if (report_format == "json") {
        out << to_json(report).dump() << '\n';
      } else {
        print_layout_text(out, report.layouts);
        for (const auto& [cp, cq] : report.counterexamples) {
          out << "counterexample: (" << cp << "," << cq << ")\n";
        }
        out << (report.holds() ? "conjecture holds" : "conjecture FAILS") << " at (d=" << d << ", n=" << n
            << ")\n";
      }
      return report.holds() ? kExitHolds : kExitFails;
    };
  });

  auto* iso = app.add_subcommand("isomorphic", "Are two edge-list graphs isomorphic?");
  iso->add_option("file_a", file_a, "First edge-list file")->required();
  iso->add_option("file_b", file_b, "Second edge-list file")->required();
  iso->callback([&] {
    action = [&] {
      const MultiDigraph a = read_edge_list_file(file_a, settings.size_bound);
      const MultiDigraph b = read_edge_list_file(file_b, settings.size_bound);
      const bool yes = isomorphic(a, b, settings.size_bound);
      out << (yes ? "yes" : "no") << '\n';
      return yes ? kExitHolds : kExitFails;
    };
  });

  try {
    settings.size_bound = size_bound_from_env();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (size_bound_flag) settings.size_bound = *size_bound_flag;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace otis::cli
