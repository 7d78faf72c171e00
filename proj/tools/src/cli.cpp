// SPDX-License-Identifier: Apache-2.0
#include "subadd_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "subadd/constructions.hpp"
#include "subadd/errors.hpp"
#include "subadd/exponent.hpp"
#include "subadd/exponent_grid.hpp"
#include "subadd/independence.hpp"
#include "subadd/matrix.hpp"
#include "subadd/tensor_families.hpp"
#include "subadd/tensor_io.hpp"
#include "subadd/witness_io.hpp"

namespace subadd::cli {

namespace {

struct SpecOptions {
  bool c1 = false, c2 = false, c3 = false, c4 = false;
  std::string n;
  std::size_t a = 0, d = 0, N = 0;
  std::string system;
};

void add_spec_options(CLI::App& app, SpecOptions& o) {
  app.add_flag("--c1", o.c1, "Construction 1 (spider plus matrix, one odd size)");
  app.add_flag("--c2", o.c2, "Construction 2 (legs 2, 2, a+2 plus matrix a)");
  app.add_flag("--c3", o.c3, "Construction 3 (d legs of weight n plus matrix N)");
  app.add_flag("--c4", o.c4, "Construction 4 (spider plus order-3 unit tensor)");
  app.add_option("--n", o.n, "Sizes: n1,n2,n3 for C1 and C4, n for C3");
  app.add_option("--a", o.a, "C2 parameter a");
  app.add_option("--d", o.d, "C3 order parameter d");
  app.add_option("--N", o.N, "C3 matrix size (default n^d)");
  app.add_option("--system", o.system, "C4 independence system file");
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("--n: bad size '" + item + "'");
    }
    if (pos != item.size() || v < 1) throw std::invalid_argument("--n: bad size '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

ConstructionSpec make_spec(const SpecOptions& o) {
  const int chosen = int(o.c1) + int(o.c2) + int(o.c3) + int(o.c4);
  if (chosen != 1) throw std::invalid_argument("choose exactly one of --c1, --c2, --c3, --c4");
  auto three = [&](const char* who) {
    const auto n = parse_sizes(o.n);
    if (n.size() != 3) throw std::invalid_argument(std::string(who) + " needs --n n1,n2,n3");
    return n;
  };
  ConstructionSpec spec;
  if (o.c1) {
    const auto n = three("--c1");
    spec = C1Spec{n[0], n[1], n[2]};
  } else if (o.c2) {
    spec = C2Spec{o.a};
  } else if (o.c3) {
    const auto n = parse_sizes(o.n);
    if (n.size() != 1) throw std::invalid_argument("--c3 needs --n n");
    spec = C3Spec{o.d, n[0], o.N};
  } else {
    const auto n = three("--c4");
    C4Spec c4{n[0], n[1], n[2], std::nullopt};
    if (!o.system.empty()) {
      std::ifstream in(o.system);
      if (!in) throw std::invalid_argument("cannot open system file " + o.system);
      c4.system = read_system(in);
    }
    spec = std::move(c4);
  }
  validate_spec(spec);
  return spec;
}

// Writes `text` to the --out file, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file " + path);
  file << text;
  if (!file) throw std::runtime_error("write failed for " + path);
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Checks a witness file against the construction's target instead of the
// built family.
VerificationReport verify_external_witness(const ConstructionSpec& spec, const std::string& file,
                                           const GenericRankOptions& options) {
  if (std::holds_alternative<C3Spec>(spec)) throw std::invalid_argument("--witness does not apply to C3");
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open witness file " + file);
  const SpanWitness w = read_witness(in);
  const Summands s = build_summands(spec);
  if (w.ambient != family_shape(s) || w.mode != 3) throw std::invalid_argument("witness shape does not match the construction");
  const RationalTensor target = s.target();
  VerificationReport r;
  r.construction = construction_name(spec);
  r.parameters = construction_parameters(spec);
  r.witness_size = w.family.size();
  r.lower_bound = border_rank_lower_bound(target);
  r.trivial_additive_bound = s.trivial_bound();
  r.identity_holds = !w.family.empty() && family_defect(w.family, w.ambient) == expected_defect(s);
  const SpanLimitReport span = verify_span_limit_witness(target, w.family, 3, options);
  r.border_rank_upper_confirmed = span.generic_rank_ok && span.contained;
  r.strict_subadditivity = r.border_rank_upper_confirmed && r.witness_size < r.trivial_additive_bound;
  return r;
}

int cmd_verify(const SpecOptions& o, const std::string& format, const std::string& path, std::uint64_t seed,
               const std::string& witness_file, std::ostream& out, std::ostream& err) {
  const ConstructionSpec spec = make_spec(o);
  if (!witness_file.empty()) {
    if (format == "witness") throw std::invalid_argument("--witness and --format witness cannot be combined");
    err << "checking witness " << witness_file << " for " << construction_name(spec) << "\n";
    const VerificationReport report = verify_external_witness(spec, witness_file, GenericRankOptions{true, seed});
    emit(path, report_text(report), out);
    return report.border_rank_upper_confirmed ? kExitOk : kExitFailure;
  }
  if (format == "witness" && std::holds_alternative<C3Spec>(spec)) {
    throw std::invalid_argument("--format witness: C3 is certified by its decomposition, not a span family");
  }
  err << "verifying " << construction_name(spec) << "(" << construction_parameters(spec) << ")\n";
  const VerificationReport report = verify_construction(spec, GenericRankOptions{true, seed});
  if (format == "witness") {
    const Summands s = build_summands(spec);
    emit(path, witness_text(SpanWitness{family_shape(s), 3, build_family(spec)}), out);
  } else {
    emit(path, report_text(report), out);
  }
  err << (report.border_rank_upper_confirmed ? "upper bound confirmed\n" : "upper bound NOT confirmed\n");
  return report.border_rank_upper_confirmed ? kExitOk : kExitFailure;
}

int cmd_search_m(const std::vector<std::size_t>& n, std::size_t target, const std::string& path, std::ostream& out) {
  const auto found = find_independence_system(n[0], n[1], n[2], target);
  std::ostringstream os;
  os << "grid = " << n[0] << "," << n[1] << "," << n[2] << '\n'
     << "target = " << target << '\n'
     << "exists = " << (found ? "true" : "false") << '\n';
  if (n[0] % 2 == 0 && n[1] % 2 == 0 && n[2] % 2 == 0) {
    const IndependenceSystem lemma = independence_system_even(n[0], n[1], n[2]);
    os << "lemma_size = " << lemma.size() << '\n'
       << "matches_lemma = " << ((found.has_value() == (target <= lemma.size())) ? "true" : "false") << '\n';
    write_system(os, lemma);
  } else if (found) {
    write_system(os, *found);
  }
  emit(path, os.str(), out);
  return kExitOk;
}

struct GridOptions {
  std::string family;
  bool figure_defaults = false;
  std::map<std::string, std::string> ranges;
  std::string format = "csv";
  std::string out;
  unsigned jobs = 1;
  std::string count = "published";
};

int cmd_grid(const GridOptions& g, std::ostream& out, std::ostream& err) {
  GridSpec spec;
  spec.family = parse_family(g.family);
  if (g.count == "verified") spec.count = C3Count::kVerified;
  else if (g.count != "published") throw std::invalid_argument("--c3-count must be published or verified");
  if (g.figure_defaults) spec = GridSpec{spec.family, figure_defaults(spec.family).axes, spec.count};
  const auto axes = grid_axes(spec.family);
  for (const auto& [name, text] : g.ranges) {
    if (std::none_of(axes.begin(), axes.end(), [&](const auto& a) { return a.first == name; })) {
      throw std::invalid_argument("--" + name + " is not an axis of " + g.family);
    }
  }
  if (!g.figure_defaults) spec.axes.clear();
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const auto it = g.ranges.find(axes[i].first);
    if (it == g.ranges.end()) {
      if (!g.figure_defaults) throw std::invalid_argument("missing --" + axes[i].first + " (or use --figure-defaults)");
      continue;
    }
    const GridAxis axis{axes[i].first, parse_range(it->second, axes[i].second)};
    if (g.figure_defaults) spec.axes[i] = axis;
    else spec.axes.push_back(axis);
  }
  err << "grid " << g.family << " with " << g.jobs << " job(s)\n";
  const auto points = generate_grid(spec, g.jobs);
  std::ostringstream os;
  if (g.format == "csv") write_csv(os, points);
  else if (g.format == "ppm") write_ppm(os, spec, points);
  else throw std::invalid_argument("--format must be csv or ppm");
  emit(g.out, os.str(), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of border-rank subadditivity constructions and exponent bounds", "subadd"};
  app.require_subcommand(1);

  SpecOptions verify_spec;
  std::string verify_format = "text", verify_out;
  std::uint64_t seed = 0;
  std::string witness_file;
  auto* verify = app.add_subcommand("verify", "Verify a construction and print its report");
  add_spec_options(*verify, verify_spec);
  verify->add_option("--format", verify_format, "text or witness")->check(CLI::IsMember({"text", "witness"}));
  verify->add_option("--out", verify_out, "Output file (default stdout)");
  verify->add_option("--seed", seed, "Seed of the randomized rank pre-check");
  verify->add_option("--witness", witness_file, "Check this witness file instead of the built family");

  std::vector<std::size_t> grid_sizes;
  std::size_t target = 0;
  std::string search_out;
  auto* search = app.add_subcommand("search-m", "Search for an independence system of a given size");
  search->add_option("sizes", grid_sizes, "n1 n2 n3")->required()->expected(3);
  search->add_option("--target", target, "System size")->required();
  search->add_option("--out", search_out, "Output file (default stdout)");

  std::vector<std::size_t> schonhage;
  std::string omega_out;
  auto* omega = app.add_subcommand("omega", "Schonhage exponent optimization");
  omega->add_option("--schonhage", schonhage, "n1 n2")->required()->expected(2);
  omega->add_option("--out", omega_out, "Output file (default stdout)");

  GridOptions grid_opts;
  std::map<std::string, std::string> range_text;
  auto* grid = app.add_subcommand("grid", "Exponent bound grids as CSV or PPM");
  grid->add_option("--family", grid_opts.family, "ext_mamu, multi_emamu_fixed_d, multi_emamu_p_of_d or dome")->required();
  grid->add_flag("--figure-defaults", grid_opts.figure_defaults, "Use the published figure ranges");
  for (const char* axis : {"n3", "n4", "d", "n", "p"}) {
    grid->add_option(std::string("--") + axis, range_text[axis], "Range lo..hi[:step]");
  }
  grid->add_option("--format", grid_opts.format, "csv or ppm")->check(CLI::IsMember({"csv", "ppm"}));
  grid->add_option("--out", grid_opts.out, "Output file (default stdout)");
  grid->add_option("--jobs", grid_opts.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  grid->add_option("--c3-count", grid_opts.count, "published or verified P'' count for multi_emamu");

  std::string dump_kind, dump_out;
  std::vector<std::size_t> dump_sizes;
  SpecOptions dump_spec;
  auto* dump = app.add_subcommand("dump", "Print a tensor in the dump format");
  dump->add_option("kind", dump_kind, "unit, mamu, wstate or target")
      ->required()
      ->check(CLI::IsMember({"unit", "mamu", "wstate", "target"}));
  dump->add_option("sizes", dump_sizes, "unit: order rank; mamu: m1 m2 m3");
  add_spec_options(*dump, dump_spec);
  dump->add_option("--out", dump_out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_spec, verify_format, verify_out, seed, witness_file, out, err);
    if (search->parsed()) return cmd_search_m(grid_sizes, target, search_out, out);
    if (omega->parsed()) {
      const SchonhageResult r = schonhage_omega(schonhage[0], schonhage[1]);
      emit(omega_out, "p_star = " + format_real(r.p_star) + "\nomega_star = " + format_real(r.omega_star) + "\n", out);
      return kExitOk;
    }
    if (grid->parsed()) {
      for (const auto& [axis, text] : range_text) {
        if (!text.empty()) grid_opts.ranges[axis] = text;
      }
      return cmd_grid(grid_opts, out, err);
    }
    if (dump->parsed()) {
      RationalTensor t;
      if (dump_kind == "unit") {
        if (dump_sizes.size() != 2) throw std::invalid_argument("dump unit needs: order rank");
        t = unit_tensor(dump_sizes[0], dump_sizes[1]);
      } else if (dump_kind == "mamu") {
        if (dump_sizes.size() != 3) throw std::invalid_argument("dump mamu needs: m1 m2 m3");
        t = mamu(dump_sizes[0], dump_sizes[1], dump_sizes[2]);
      } else if (dump_kind == "wstate") {
        t = w_state();
      } else {
        t = build_summands(make_spec(dump_spec)).target();
      }
      emit(dump_out, dump_tensor(t), out);
      return kExitOk;
    }
  } catch (const SearchGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace subadd::cli
