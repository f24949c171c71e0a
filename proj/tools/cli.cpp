#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "biorder/chrompoly.hpp"
#include "biorder/errors.hpp"
#include "biorder/json_io.hpp"
#include "biorder/oracle.hpp"
#include "biorder/orderpoly.hpp"

namespace biorder::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string mode = "strict";
  std::string format = "text";
  std::string kind = "all";
  std::string labeling = "natural";
  long x = -1;
  long y = -1;
  std::uint64_t budget = kDefaultBudget;
};

void print_poly(std::ostream& out, const BiPoly& p, const std::string& format) {
  if (format == "json") {
    out << json(p).dump() << '\n';
  } else {
    out << p.to_string() << '\n';
  }
}

void require_point(const Options& o) {
  if (o.x < 0 || o.y < 0) throw InputError("--x and --y are required nonnegative integers");
}

json blocks_json(const Flat& f) { return f.blocks; }

// Largest x0 <= cap with x0^n within budget.
long affordable_x(int n, long cap, std::uint64_t budget) {
  long x0 = cap;
  while (x0 > 0 && map_space_size(x0, n) > budget) --x0;
  return x0;
}

CheckReport sweep_poset_oracle(const BicoloredPoset& p, Mode mode, std::uint64_t budget) {
  const BiPoly poly = omega(p, mode);
  const long x_max = affordable_x(p.size(), 8, budget);
  CheckReport report{std::string("poset-oracle-") + to_string(mode), true, std::nullopt};
  long points = 0;
  for (long x0 = 0; x0 <= x_max && report.passed; ++x0) {
    const long y_lo = mode == Mode::kStrict ? 0 : 1;
    const long y_hi = mode == Mode::kStrict ? x0 : x0 + 1;
    for (long y0 = y_lo; y0 <= y_hi; ++y0) {
      const std::uint64_t count = brute_count(p, mode, x0, y0, budget);
      const Rational value = poly.evaluate(x0, y0);
      ++points;
      if (!(value == Rational(mpz_class(std::to_string(count), 10)))) {
        report.passed = false;
        report.witness = json{{"poset", p},
                              {"mode", to_string(mode)},
                              {"point", {{"x", x0}, {"y", y0}}},
                              {"polynomial", poly.to_string()},
                              {"polynomial_value", value.to_string()},
                              {"brute_count", count}};
        break;
      }
    }
  }
  report.details = {{"x_max", x_max}, {"points", points}};
  return report;
}

CheckReport compare_polys(const std::string& name, const BiPoly& computed, const BiPoly& oracle,
                          const json& input) {
  CheckReport report{name, computed == oracle, std::nullopt};
  if (!report.passed) {
    json witness{{"input", input}, {"computed", computed.to_string()}, {"oracle", oracle.to_string()}};
    if (auto point = find_difference_point(computed, oracle)) {
      witness["point"] = {{"x", point->first}, {"y", point->second}};
      witness["computed_value"] = computed.evaluate(point->first, point->second).to_string();
      witness["oracle_value"] = oracle.evaluate(point->first, point->second).to_string();
    }
    report.witness = std::move(witness);
  }
  return report;
}

std::vector<CheckReport> poset_checks(const BicoloredPoset& p, const std::string& kind, std::uint64_t budget) {
  std::vector<CheckReport> reports;
  const bool all = kind == "all";
  if (kind == "graph-reciprocity") throw InputError("graph-reciprocity needs graph input");
  if (all || kind == "poset-reciprocity") reports.push_back(check_reciprocity_poset(p));
  if (all || kind == "oracle") {
    for (Mode mode : {Mode::kStrict, Mode::kWeak}) {
      reports.push_back(sweep_poset_oracle(p, mode, budget));
      const BiPoly interpolated = interpolate_poly(
          [&](long x0, long y0) { return brute_count(p, mode, x0, y0, budget); }, p.size(), mode);
      reports.push_back(compare_polys(std::string("poset-interpolation-") + to_string(mode), omega(p, mode),
                                      interpolated, json(p)));
    }
  }
  return reports;
}

std::vector<CheckReport> graph_checks(const Graph& g, const std::string& kind, std::uint64_t budget) {
  std::vector<CheckReport> reports;
  const bool all = kind == "all";
  if (kind == "poset-reciprocity") throw InputError("poset-reciprocity needs poset input");
  if (all || kind == "graph-reciprocity") {
    CheckReport sweep{"graph-reciprocity", true, std::nullopt};
    long points = 0;
    for (long x0 = 1; x0 <= 5 && sweep.passed; ++x0) {
      for (long y0 = 1; y0 <= x0; ++y0) {
        CheckReport r = check_reciprocity_graph(g, x0, y0, budget);
        ++points;
        if (!r.passed) {
          sweep.passed = false;
          sweep.witness = r.witness;
          break;
        }
      }
    }
    sweep.details = {{"points", points}};
    reports.push_back(std::move(sweep));
    reports.push_back(check_reciprocity_graph_poly(g));
  }
  if (all || kind == "oracle") {
    const BiPoly chi = chi_poly(g);
    const long x_max = affordable_x(g.size(), 6, budget);
    CheckReport sweep{"graph-oracle", true, std::nullopt};
    for (long x0 = 0; x0 <= x_max && sweep.passed; ++x0) {
      for (long y0 = 0; y0 <= x0; ++y0) {
        const std::uint64_t count = chi_brute(g, x0, y0, budget);
        const Rational value = chi.evaluate(x0, y0);
        if (!(value == Rational(mpz_class(std::to_string(count), 10)))) {
          sweep.passed = false;
          sweep.witness = json{{"graph", g},
                               {"point", {{"x", x0}, {"y", y0}}},
                               {"polynomial", chi.to_string()},
                               {"polynomial_value", value.to_string()},
                               {"brute_count", count}};
          break;
        }
      }
    }
    sweep.details = {{"x_max", x_max}};
    reports.push_back(std::move(sweep));
    const BiPoly interpolated =
        interpolate_poly([&](long x0, long y0) { return chi_brute(g, x0, y0, budget); }, g.size(), Mode::kStrict);
    reports.push_back(compare_polys("graph-interpolation", chi, interpolated, json(g)));
    reports.push_back(compare_polys("graph-diagonal-classical", chi.compose(BiPoly::x(), BiPoly::x()),
                                    chi_classical(g), json(g)));
  }
  return reports;
}

int emit_reports(const std::vector<CheckReport>& reports, const std::string& format, std::ostream& out) {
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  if (format == "json") {
    out << json{{"passed", passed}, {"reports", reports}}.dump(2) << '\n';
  } else {
    for (const CheckReport& r : reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (r.witness) out << " witness=" << r.witness->dump();
      out << '\n';
    }
  }
  return passed ? kOk : kCheckFailed;
}

int dispatch(const std::string& verb, const Options& o, std::ostream& out) {
  const json input = read_json_file(o.input);
  const bool json_out = o.format == "json";

  if (verb == "poset-poly") {
    print_poly(out, omega(poset_from_json(input), parse_mode(o.mode)), o.format);
  } else if (verb == "poset-count") {
    require_point(o);
    const BicoloredPoset p = poset_from_json(input);
    const Mode mode = parse_mode(o.mode);
    const std::uint64_t count = brute_count(p, mode, o.x, o.y, o.budget);
    if (json_out) {
      out << json{{"mode", to_string(mode)}, {"x", o.x}, {"y", o.y}, {"count", count}}.dump() << '\n';
    } else {
      out << count << '\n';
    }
  } else if (verb == "graph-poly") {
    print_poly(out, chi_poly(graph_from_json(input)), o.format);
  } else if (verb == "graph-count") {
    require_point(o);
    const std::uint64_t count = chi_brute(graph_from_json(input), o.x, o.y, o.budget);
    if (json_out) {
      out << json{{"x", o.x}, {"y", o.y}, {"count", count}}.dump() << '\n';
    } else {
      out << count << '\n';
    }
  } else if (verb == "list-extensions") {
    const BicoloredPoset p = poset_from_json(input);
    const Labeling lab = o.labeling == "reverse-natural" ? reverse_natural_labeling(p) : natural_labeling(p);
    json listing = json::array();
    std::ostringstream text;
    for (const LinearExtension& l : linear_extensions(p)) {
      const Word w = word_of(l, lab, p);
      const AscDes ad = asc_des(w);
      listing.push_back({{"order", l.order},
                         {"word", w.letters},
                         {"celeste_pos", w.celeste_pos ? json(*w.celeste_pos) : json(nullptr)},
                         {"ascents", ad.asc},
                         {"descents", ad.des}});
      for (std::size_t i = 0; i < l.order.size(); ++i) text << (i ? " " : "") << l.order[i];
      text << " | word";
      for (int letter : w.letters) text << ' ' << letter;
      text << " | celeste_pos " << (w.celeste_pos ? std::to_string(*w.celeste_pos) : "-") << '\n';
    }
    if (json_out) {
      out << json{{"labeling", lab.labels}, {"extensions", listing}}.dump(2) << '\n';
    } else {
      out << text.str();
    }
  } else if (verb == "list-flats") {
    json listing = json::array();
    for (const Flat& f : flats(graph_from_json(input))) {
      if (json_out) {
        listing.push_back({{"blocks", blocks_json(f)}, {"quotient", f.quotient}, {"contracted", f.contracted}});
        continue;
      }
      for (std::size_t b = 0; b < f.blocks.size(); ++b) {
        out << (b ? " " : "") << '{';
        for (std::size_t i = 0; i < f.blocks[b].size(); ++i) out << (i ? "," : "") << f.blocks[b][i];
        out << '}';
      }
      out << " | contracted " << f.contracted.size() << '\n';
    }
    if (json_out) out << listing.dump(2) << '\n';
  } else if (verb == "list-orientations") {
    json listing = json::array();
    for (const AcyclicOrientation& sigma : acyclic_orientations(graph_from_json(input))) {
      if (json_out) {
        listing.push_back(sigma.directed_edges);
        continue;
      }
      for (std::size_t e = 0; e < sigma.directed_edges.size(); ++e) {
        out << (e ? " " : "") << sigma.directed_edges[e].first << "->" << sigma.directed_edges[e].second;
      }
      out << '\n';
    }
    if (json_out) out << listing.dump(2) << '\n';
  } else if (verb == "check") {
    const bool is_graph = input.is_object() && input.contains("edges");
    auto reports = is_graph ? graph_checks(graph_from_json(input), o.kind, o.budget)
                            : poset_checks(poset_from_json(input), o.kind, o.budget);
    return emit_reports(reports, o.format, out);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bivariate order and chromatic polynomials"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", o.input, "Poset or graph JSON file")->required(); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "strict or weak")->check(CLI::IsMember({"strict", "weak"}));
  };
  auto add_point = [&](CLI::App* sub) {
    sub->add_option("--x", o.x, "x value")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--y", o.y, "y value")->required()->check(CLI::NonNegativeNumber);
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Maximum enumerated objects per oracle call");
  };

  auto* poset_poly = app.add_subcommand("poset-poly", "Bivariate order polynomial of a bicolored poset");
  add_input(poset_poly);
  add_mode(poset_poly);
  add_format(poset_poly);
  auto* poset_count = app.add_subcommand("poset-count", "Brute-force count of (x,y)-maps");
  add_input(poset_count);
  add_mode(poset_count);
  add_point(poset_count);
  add_budget(poset_count);
  add_format(poset_count);
  auto* graph_poly = app.add_subcommand("graph-poly", "Bivariate chromatic polynomial of a graph");
  add_input(graph_poly);
  add_format(graph_poly);
  auto* graph_count = app.add_subcommand("graph-count", "Brute-force count of bivariate colorings");
  add_input(graph_count);
  add_point(graph_count);
  add_budget(graph_count);
  add_format(graph_count);
  auto* list_ext = app.add_subcommand("list-extensions", "Linear extensions with their words");
  add_input(list_ext);
  add_format(list_ext);
  list_ext->add_option("--labeling", o.labeling, "natural or reverse-natural")
      ->check(CLI::IsMember({"natural", "reverse-natural"}));
  auto* list_flats = app.add_subcommand("list-flats", "Flats (connected partitions) of a graph");
  add_input(list_flats);
  add_format(list_flats);
  auto* list_orient = app.add_subcommand("list-orientations", "Acyclic orientations of a graph");
  add_input(list_orient);
  add_format(list_orient);
  auto* check = app.add_subcommand("check", "Verify identities against brute-force oracles");
  add_input(check);
  add_format(check);
  add_budget(check);
  check->add_option("--kind", o.kind, "Check to run")
      ->check(CLI::IsMember({"poset-reciprocity", "graph-reciprocity", "oracle", "all"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace biorder::cli
