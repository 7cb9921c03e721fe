#pragma once

// Command-line front end: argument parsing and command execution.

#include "polyvol/polyvol.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace polyvol::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNotApplicable = 2, kMismatch = 3 };

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  MethodLimits limits;
};

/// A file path holding an edge list or DSL text, or inline DSL.
inline GraphInput load_graph(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    const auto text = read_text_file(arg);
    if (!text) throw ParameterError("cannot read " + arg);
    if (looks_like_edge_list(*text)) return GraphInput::from_graph(parse_edge_list(*text), arg);
    return GraphInput::from_spec(parse_family(*text));
  }
  return GraphInput::from_spec(parse_family(arg));
}

inline nlohmann::json rational_json(const Rational& r) {
  return {{"numerator", numerator_of(r).str()}, {"denominator", denominator_of(r).str()}, {"approx", to_double(r)}};
}

inline std::string format_double(double x, int places = 6) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(places) << x;
  return ss.str();
}

inline std::string format_mc(const McEstimate& e) {
  return format_double(e.estimate) + " ± " + format_double(e.standard_error);
}

/// Left-justifies to `width` code points (the output contains "≈" and "±").
inline std::string pad(std::string s, std::size_t width) {
  std::size_t points = 0;
  for (unsigned char c : s) points += (c & 0xC0) != 0x80 ? 1 : 0;
  if (points < width) s.append(width - points, ' ');
  return s;
}

inline void emit(Context& ctx, const nlohmann::json& flat) { ctx.out << flat.dump() << "\n"; }

// ---------------------------------------------------------------------------

struct VolumeArgs {
  std::string graph;
  std::string method = "auto";
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
};

inline int run_volume(Context& ctx, const VolumeArgs& a) {
  const GraphInput in = load_graph(a.graph);
  const auto method = parse_method(a.method);
  if (!method) throw CLI::ValidationError("--method", "unknown method '" + a.method + "'");

  if (*method == Method::mc) {
    const McEstimate e = mc_volume(in.graph, a.samples, a.seed);
    if (ctx.json)
      emit(ctx, {{"command", "volume"}, {"graph", in.label}, {"method", "mc"}, {"estimate", e.estimate},
                 {"stderr", e.standard_error}, {"samples", e.samples}, {"seed", a.seed}});
    else
      ctx.out << format_mc(e) << "\n";
    return kOk;
  }

  const Method used = *method == Method::automatic ? resolve_auto(in) : *method;
  const Rational v = exact_volume(in, used, ctx.limits);
  if (ctx.json) {
    nlohmann::json j{{"command", "volume"}, {"graph", in.label}, {"method", method_name(used)}};
    j.update(rational_json(v));
    emit(ctx, j);
  } else {
    ctx.out << render(v) << "\n";
  }
  return kOk;
}

inline int run_count(Context& ctx, const std::string& graph, std::int64_t t) {
  const GraphInput in = load_graph(graph);
  const BigInt c = lattice_count(in.graph, t);
  if (ctx.json)
    emit(ctx, {{"command", "count"}, {"graph", in.label}, {"t", t}, {"count", c.str()}});
  else
    ctx.out << c.str() << "\n";
  return kOk;
}

inline int run_sliced(Context& ctx, const std::string& graph) {
  const GraphInput in = load_graph(graph);
  if (!in.spec) throw MethodNotApplicable("sliced volumes need a join expression, not an explicit graph");
  const SlicedVolume s = sliced_from_spec(*in.spec);
  const Rational total = sliced_eval(s, 1);
  if (ctx.json) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.high.coefficients()) coeffs.push_back(to_string(c));
    nlohmann::json j{{"command", "sliced"}, {"graph", in.label}, {"n", s.n}, {"high", coeffs}};
    j.update(rational_json(total));
    emit(ctx, j);
    return kOk;
  }
  ctx.out << "low (0 <= c <= 1/2): c^" << s.n << "\n";
  ctx.out << "high (1/2 <= c <= 1): " << s.high.to_string("c") << "\n";
  ctx.out << "volume: " << render(total) << "\n";
  return kOk;
}

inline int run_ehrhart(Context& ctx, const std::string& graph) {
  const GraphInput in = load_graph(graph);
  const EhrhartFit fit = ehrhart_fit(in.graph);
  const bool integral = fit.parity == EhrhartFit::Parity::integral;
  const Rational vol = ehrhart_volume(fit);
  std::optional<HStar> h;
  if (integral) h = hstar(in.graph);

  if (ctx.json) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : fit.poly.coefficients()) coeffs.push_back(to_string(c));
    nlohmann::json j{{"command", "ehrhart"}, {"graph", in.label}, {"n", fit.n},
                     {"parity", integral ? "integral" : "even-only"}, {"poly", coeffs}};
    if (h) {
      nlohmann::json hs = nlohmann::json::array();
      for (const auto& c : h->coefficients) hs.push_back(c.str());
      j["hstar"] = hs;
    }
    j.update(rational_json(vol));
    emit(ctx, j);
    return kOk;
  }
  ctx.out << "parity: " << (integral ? "integral" : "even-only") << "\n";
  if (integral)
    ctx.out << "L(t) = " << fit.poly.to_string("t") << "\n";
  else
    ctx.out << "L(2s) = " << fit.poly.to_string("s") << "\n";
  if (h) {
    ctx.out << "h*: [";
    for (std::size_t i = 0; i < h->coefficients.size(); ++i) ctx.out << (i ? ", " : "") << h->coefficients[i].str();
    ctx.out << "]\n";
  } else {
    ctx.out << "h*: n/a (non-bipartite)\n";
  }
  ctx.out << "volume: " << render(vol) << "\n";
  return kOk;
}

/// vol(C_n) for the trace identity; n = 2 uses the cycle formula value E_1/2 = 1/2.
inline Rational cycle_trace_volume(int n, const MethodLimits& limits) {
  if (n == 2) return Rational(1, 2);
  return rvf_volume(build_family(FamilySpec::cycle(n)), limits.rvf_max_vertices);
}

inline int run_series(Context& ctx, int n, std::int64_t terms) {
  const Decimal partial = series_partial(n, terms);
  const Decimal target = series_target(n, cycle_trace_volume(n, ctx.limits));
  const Decimal diff = mp::abs(partial - target);
  if (ctx.json) {
    emit(ctx, {{"command", "series"}, {"n", n}, {"terms", terms}, {"partial", partial.str(30)},
               {"target", target.str(30)}, {"difference", diff.str(6, std::ios::scientific)}});
    return kOk;
  }
  ctx.out << "partial: " << partial.str(30) << "\n";
  ctx.out << "target: " << target.str(30) << "\n";
  ctx.out << "difference: " << diff.str(6, std::ios::scientific) << "\n";
  return kOk;
}

struct CrosscheckArgs {
  std::string graph;
  std::string methods = "rvf,closed,join,perm,symmetric,ehrhart,mc";
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
};

inline int run_crosscheck(Context& ctx, const CrosscheckArgs& a) {
  const GraphInput in = load_graph(a.graph);
  std::vector<Method> methods;
  std::stringstream list(a.methods);
  for (std::string item; std::getline(list, item, ',');) {
    const auto m = parse_method(item);
    if (!m || *m == Method::automatic) throw CLI::ValidationError("--methods", "unknown method '" + item + "'");
    methods.push_back(*m);
  }

  struct Row {
    Method method;
    std::optional<Rational> exact;
    std::optional<McEstimate> mc;
    std::string note;
  };
  std::vector<Row> rows;
  std::optional<Rational> reference;
  bool all_agree = true;

  for (Method m : methods) {
    Row row{m, std::nullopt, std::nullopt, {}};
    if (m == Method::mc) {
      row.mc = mc_volume(in.graph, a.samples, a.seed);
    } else {
      try {
        row.exact = exact_volume(in, m, ctx.limits);
        if (!reference) {
          reference = row.exact;
          row.note = "reference";
        } else if (*row.exact == *reference) {
          row.note = "agree";
        } else {
          row.note = "MISMATCH";
          all_agree = false;
        }
      } catch (const MethodNotApplicable& e) {
        row.note = std::string("n/a: ") + e.what();
      } catch (const SizeError& e) {
        row.note = std::string("n/a: ") + e.what();
      }
    }
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (!row.mc) continue;
    if (!reference) {
      row.note = "no exact reference";
      continue;
    }
    const double ref = to_double(*reference);
    const double dev = std::abs(row.mc->estimate - ref);
    const double band = 4.0 * row.mc->standard_error;
    const bool ok = dev <= band || (row.mc->standard_error == 0.0 && dev == 0.0);
    row.note = ok ? "within 4 sigma" : "OUTSIDE 4 sigma";
    all_agree = all_agree && ok;
  }

  for (const auto& row : rows) {
    if (ctx.json) {
      nlohmann::json j{{"command", "crosscheck"}, {"graph", in.label}, {"method", method_name(row.method)},
                       {"status", row.note}};
      if (row.exact) j.update(rational_json(*row.exact));
      if (row.mc) {
        j["estimate"] = row.mc->estimate;
        j["stderr"] = row.mc->standard_error;
      }
      emit(ctx, j);
      continue;
    }
    const std::string value = row.exact ? render(*row.exact) : row.mc ? format_mc(*row.mc) : "-";
    ctx.out << pad(std::string(method_name(row.method)), 10) << pad(value, 32) << row.note << "\n";
  }
  if (!reference) throw MethodNotApplicable("no exact method applies to " + in.label);
  return all_agree ? kOk : kMismatch;
}

inline std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected A..B, got '" + s + "'");
  }
}

inline FamilySpec family_member(const std::string& kind, int n) {
  if (kind == "null") return FamilySpec::null(n);
  if (kind == "path") return FamilySpec::path(n);
  if (kind == "cycle") return FamilySpec::cycle(n);
  if (kind == "complete") return FamilySpec::complete(n);
  if (kind == "kbip") return FamilySpec::complete_bipartite(n, n);
  if (kind == "bn") return FamilySpec::bn(n);
  throw CLI::ValidationError("family", "unknown family '" + kind + "' (null, path, cycle, complete, kbip, bn)");
}

inline int run_families(Context& ctx, const std::string& kind, const std::string& range, const std::string& method_arg) {
  const auto [lo, hi] = parse_range(range);
  const auto method = parse_method(method_arg);
  if (!method || *method == Method::mc) throw CLI::ValidationError("--method", "unknown exact method '" + method_arg + "'");
  for (int n = lo; n <= hi; ++n) {
    const GraphInput in = GraphInput::from_spec(family_member(kind, n));
    const Method used = *method == Method::automatic ? resolve_auto(in) : *method;
    const Rational v = exact_volume(in, used, ctx.limits);
    if (ctx.json) {
      nlohmann::json j{{"command", "families"}, {"graph", in.label}, {"method", method_name(used)}};
      j.update(rational_json(v));
      emit(ctx, j);
    } else {
      ctx.out << in.label << " " << render(v) << "\n";
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

/// Applies POLYVOL_MAX_N, which may only lower the rvf size guard.
inline MethodLimits limits_from_env() {
  MethodLimits limits;
  if (const char* env = std::getenv("POLYVOL_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) throw CLI::ValidationError("POLYVOL_MAX_N", "must be a nonnegative integer");
    if (v < limits.rvf_max_vertices) limits.rvf_max_vertices = static_cast<int>(v);
  }
  return limits;
}

inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact volumes of graph polytopes P(G) = {x in [0,1]^n : x_i + x_j <= 1 for ij in E}", "polyvol"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit one flat JSON object per result");

  VolumeArgs vol;
  auto* volume = app.add_subcommand("volume", "Exact (or Monte Carlo) volume of P(G)");
  volume->add_option("graph", vol.graph, "Graph DSL expression or graph file")->required();
  volume->add_option("--method", vol.method, "auto, rvf, closed, join, perm, symmetric, ehrhart, mc");
  volume->add_option("--samples", vol.samples, "Monte Carlo sample count");
  volume->add_option("--seed", vol.seed, "Monte Carlo seed");

  std::string count_graph;
  std::int64_t count_t = 0;
  auto* count = app.add_subcommand("count", "Lattice points of the t-th dilate of P(G)");
  count->add_option("graph", count_graph, "Graph DSL expression or graph file")->required();
  count->add_option("t", count_t, "Dilation factor")->required()->check(CLI::NonNegativeNumber);

  std::string sliced_graph;
  auto* sliced = app.add_subcommand("sliced", "Sliced volume vol(G,c) of a join expression over null graphs");
  sliced->add_option("graph", sliced_graph, "Join expression")->required();

  std::string ehrhart_graph;
  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart interpolation and h* vector");
  ehrhart->add_option("graph", ehrhart_graph, "Graph DSL expression or graph file")->required();

  int series_n = 0;
  std::int64_t series_terms = 1000;
  auto* series = app.add_subcommand("series", "Partial sum of sum_k 1/(4k+1)^n against pi^n vol(C_n)/2^n");
  series->add_option("n", series_n, "Exponent (>= 2)")->required();
  series->add_option("--terms", series_terms, "Terms K on each side of k = 0");

  CrosscheckArgs cross;
  auto* crosscheck = app.add_subcommand("crosscheck", "Run several methods and compare");
  crosscheck->add_option("graph", cross.graph, "Graph DSL expression or graph file")->required();
  crosscheck->add_option("--methods", cross.methods, "Comma-separated method list");
  crosscheck->add_option("--samples", cross.samples, "Monte Carlo sample count");
  crosscheck->add_option("--seed", cross.seed, "Monte Carlo seed");

  std::string fam_kind;
  std::string fam_range;
  std::string fam_method = "auto";
  auto* families = app.add_subcommand("families", "Volumes over a range of family members, e.g. `families path 1..10`");
  families->add_option("family", fam_kind, "null, path, cycle, complete, kbip, bn")->required();
  families->add_option("range", fam_range, "A..B")->required();
  families->add_option("--method", fam_method, "Exact method");

  std::vector<const char*> argv{"polyvol"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Context ctx{out, err, json, limits_from_env()};
    if (volume->parsed()) return run_volume(ctx, vol);
    if (count->parsed()) return run_count(ctx, count_graph, count_t);
    if (sliced->parsed()) return run_sliced(ctx, sliced_graph);
    if (ehrhart->parsed()) return run_ehrhart(ctx, ehrhart_graph);
    if (series->parsed()) return run_series(ctx, series_n, series_terms);
    if (crosscheck->parsed()) return run_crosscheck(ctx, cross);
    if (families->parsed()) return run_families(ctx, fam_kind, fam_range, fam_method);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MethodNotApplicable& e) {
    err << "not applicable: " << e.what() << "\n";
    return kNotApplicable;
  } catch (const SizeError& e) {
    err << "not applicable: " << e.what() << "\n";
    return kNotApplicable;
  }
  return kUsage;
}

}  // namespace polyvol::cli
