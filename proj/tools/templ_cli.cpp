// templ: checks, nerves, comparison routes, counterexamples and property runs.
// Exit status: 0 pass, 1 a check failed, 2 unreadable input or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "templ/compare.hpp"
#include "templ/counterexamples.hpp"
#include "templ/generators.hpp"
#include "templ/spec_io.hpp"

using namespace templ;
using io::Json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Report report;
  Json payload;  // witnesses, certificates
  std::optional<io::SpecFile> output;
};

struct Options {
  std::string file;
  std::string kind;
  std::string route = "roundtrip";
  std::string name;
  std::string form = "templicial";
  std::size_t truncation = 2;
  std::uint64_t seed = 0;
  std::size_t cases = 200;
  std::string out;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool color() {
  const char* c = std::getenv("TEMPL_COLOR");
  return c != nullptr && std::string(c) == "always";
}

void write_output(const Options& o, const io::SpecFile& spec) {
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw UsageError("cannot write " + o.out);
  out << io::emit(spec);
}

int finish(const Options& o, const std::string& command, const std::string& digest, const Outcome& oc) {
  if (oc.output && !o.out.empty()) write_output(o, *oc.output);
  const bool pass = oc.report.passed();
  if (o.format == "json") {
    Json j;
    j["tool_version"] = io::kToolVersion;
    j["command"] = command;
    j["input_digest"] = digest;
    j["results"] = io::report_json(oc.report);
    if (!oc.payload.is_null()) j["payload"] = oc.payload;
    j["verdict"] = pass ? "pass" : "fail";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << io::kToolVersion << "  " << command << "\n";
    std::cout << "input sha256 " << digest << "\n";
    for (const auto& t : oc.report.tallies()) {
      std::cout << (t.failed == 0 ? "  ok    " : "  FAIL  ") << t.law << "  (" << t.checked << " checked";
      if (t.failed != 0) std::cout << ", " << t.failed << " failed";
      std::cout << ")\n";
    }
    for (const auto& f : oc.report.failures())
      std::cout << "    " << f.law << (f.where.empty() ? "" : " at " + f.where)
                << (f.detail.empty() ? "" : ": " + f.detail) << "\n";
    for (const auto& n : oc.report.notes()) std::cout << "  note: " << n << "\n";
    if (!oc.payload.is_null()) std::cout << "  payload: " << oc.payload.dump() << "\n";
    const char* on = color() ? (pass ? "\033[32m" : "\033[31m") : "";
    const char* off = color() ? "\033[0m" : "";
    std::cout << "verdict: " << on << (pass ? "pass" : "fail") << off << "\n";
  }
  return pass ? 0 : 1;
}

template <class T>
const T& expect(const io::SpecFile& spec, std::string_view what) {
  if (const T* v = std::get_if<T>(&spec.value)) return *v;
  throw UsageError("expected " + std::string(what) + ", got " + io::to_string(spec.kind));
}

// ---- check ----------------------------------------------------------------------

Outcome cmd_check(const io::SpecFile& spec) {
  Outcome oc;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, nerve::EnrichedCategory>) oc.report = nerve::check_category(v);
        else if constexpr (std::is_same_v<T, TruncatedTemplicial>) oc.report = check_templicial(v);
        else if constexpr (std::is_same_v<T, BasedColax>) oc.report = check_based(v);
        else if constexpr (std::is_same_v<T, TruncatedSimplicial>) oc.report = check_simplicial(v);
        else oc.report = precat::check_precat(v);
      },
      spec.value);
  return oc;
}

// ---- nerve --------------------------------------------------------------------------

Outcome cmd_nerve(const io::SpecFile& spec, const Options& o) {
  const auto& c = expect<nerve::EnrichedCategory>(spec, "a category");
  Outcome oc;
  oc.report.merge(nerve::check_category(c), "input");
  if (!oc.report.passed()) return oc;
  Json sizes = Json::array();
  if (o.form == "simplicial") {
    if (!c.instance.cartesian()) throw UsageError("the simplicial nerve needs a finset category");
    auto x = nerve::nerve_classical(c, o.truncation);
    oc.report.merge(check_simplicial(x), "nerve");
    for (const auto& l : x.levels) sizes.push_back(l.size());
    oc.output = io::make_spec(x);
  } else {
    auto x = nerve::nerve_enriched(c, o.truncation);
    oc.report.merge(check_templicial(x), "nerve");
    for (const auto& l : x.data.levels) sizes.push_back(l.total_size());
    oc.output = io::make_spec(x);
  }
  oc.payload["level_sizes"] = sizes;
  return oc;
}

// ---- compare ------------------------------------------------------------------------

Outcome route_roundtrip(const io::SpecFile& spec) {
  const auto& x = expect<TruncatedTemplicial>(spec, "a templicial object");
  Outcome oc;
  auto res = compare::roundtrip_theorem_check(x);
  oc.report = res.report;
  if (res.unit) oc.payload["unit"] = io::templicial_morphism_json(*res.unit);
  if (res.counit) oc.payload["counit"] = io::based_morphism_json(*res.counit);
  oc.payload["independent_search"] = to_string(res.independent.status);
  if (res.independent.witness) oc.payload["independent_witness"] = io::templicial_morphism_json(*res.independent.witness);
  return oc;
}

Outcome route_c(const io::SpecFile& spec) {
  const auto& x = expect<TruncatedTemplicial>(spec, "a templicial object");
  Outcome oc;
  oc.report.merge(check_templicial(x), "input");
  auto y = compare::collapse_c(x);
  oc.report.merge(check_based(y), "collapse");
  oc.report.merge(compare::check_decomposition(y), "decomposition");
  oc.output = io::make_spec(y);
  return oc;
}

Outcome route_d(const io::SpecFile& spec) {
  const auto& y = expect<BasedColax>(spec, "a based colax functor");
  Outcome oc;
  oc.report.merge(check_based(y), "input");
  oc.report.merge(compare::check_decomposition(y), "decomposition");
  if (!oc.report.passed()) return oc;
  auto x = compare::decompose_d(y);
  oc.report.merge(check_templicial(x), "decompose");
  oc.output = io::make_spec(x);
  return oc;
}

Outcome route_leinster(const io::SpecFile& spec) {
  Outcome oc;
  if (const auto* x = std::get_if<TruncatedSimplicial>(&spec.value)) {
    oc.report.merge(check_simplicial(*x), "input");
    auto f = nerve::leinster_forward(*x);
    oc.report.merge(check_colax(f), "forward");
    oc.report.check(nerve::leinster_backward(f, x->base) == *x, "backward-forward-identity");
    oc.output = io::make_spec(BasedColax{f, x->base, vcat::identity(x->levels[0])});
    return oc;
  }
  const auto& y = expect<BasedColax>(spec, "a simplicial object or based colax functor");
  oc.report.merge(check_colax(y.underlying), "input");
  auto x = nerve::leinster_backward(y.underlying, y.base);
  oc.report.merge(check_simplicial(x), "backward");
  oc.report.check(same_data(nerve::leinster_forward(x), y.underlying), "forward-backward-identity");
  oc.output = io::make_spec(x);
  return oc;
}

Outcome route_simpson(const io::SpecFile& spec) {
  Outcome oc;
  if (const auto* p = std::get_if<precat::PrecatData>(&spec.value)) {
    oc.report.merge(precat::check_precat(*p), "input");
    if (!oc.report.passed()) return oc;
    auto x = precat::simpson_forward(*p);
    oc.report.merge(check_simplicial(x), "forward");
    oc.report.check(precat::simpson_backward(x) == *p, "backward-forward-identity");
    oc.output = io::make_spec(x);
    return oc;
  }
  const auto& x = expect<TruncatedSimplicial>(spec, "a precategory or simplicial object");
  oc.report.merge(check_simplicial(x), "input");
  auto p = precat::simpson_backward(x);
  oc.report.merge(precat::check_precat(p), "backward");
  const bool literal = precat::simpson_forward(p) == x;
  oc.report.check(precat::simpson_backward(precat::simpson_forward(p)) == p, "backward-forward-identity");
  if (!literal) oc.report.note("simplices are not grouped by vertex sequence; forward . backward is a reordering");
  oc.output = io::make_spec(p);
  return oc;
}

Outcome route_cprime(const io::SpecFile& spec) {
  Outcome oc;
  if (const auto* p = std::get_if<precat::PrecatData>(&spec.value)) {
    oc.report.merge(precat::check_precat(*p), "input");
    if (!oc.report.passed()) return oc;
    auto x = precat::cprime(*p);
    oc.report.merge(check_templicial(x), "cprime");
    oc.output = io::make_spec(x);
    return oc;
  }
  // A templicial object in the image of c' splits level 2 into middle-vertex blocks.
  const auto& x = expect<TruncatedTemplicial>(spec, "a precategory or templicial object");
  oc.report.merge(check_templicial(x), "input");
  oc.report.merge(cx::block_decomposition_report(x));
  Json dims = Json::array();
  const std::size_t s = x.vertices.size();
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      Json blocks = Json::array();
      for (std::size_t c = 0; c < s; ++c) blocks.push_back(cx::middle_block_subspace(x, a, b, c).cols());
      dims.push_back({{"pair", {x.vertices[a], x.vertices[b]}}, {"block_dims", blocks},
                      {"dim", x.level(2)(a, b).size()}});
    }
  oc.payload["level2_blocks"] = dims;
  return oc;
}

Outcome cmd_compare(const io::SpecFile& spec, const std::string& route) {
  if (route == "roundtrip") return route_roundtrip(spec);
  if (route == "c") return route_c(spec);
  if (route == "d") return route_d(spec);
  if (route == "leinster") return route_leinster(spec);
  if (route == "simpson") return route_simpson(spec);
  if (route == "cprime") return route_cprime(spec);
  throw UsageError("unknown route " + route);
}

// ---- counterexample --------------------------------------------------------------------

Outcome cmd_counterexample(const std::string& name) {
  Outcome oc;
  Report& r = oc.report;
  if (name == "alpha") {
    auto res = cx::run_alpha_counterexample(3, 3);
    r.check(res.simplicial, "nerve-simplicial");
    r.check(res.commutes, "alpha-simplicial-map");
    r.check(res.augmented, "alpha-augmented");
    r.check(!res.multiplicative, "alpha-not-multiplicative");
    for (const auto& n : res.report.notes()) r.note(n);
    oc.payload["basis_sizes"] = res.basis_sizes;
    oc.payload["witness"] = res.witness;
    oc.payload["details"] = io::report_json(res.report);
  } else if (name == "y") {
    auto res = cx::run_Y_counterexample();
    r.merge(res.report);
    oc.payload["block_dims"] = res.block_dims;
    oc.payload["sum_dim"] = res.sum_dim;
    oc.payload["total_dim"] = res.total_dim;
    oc.payload["w_in_sum"] = res.w_in_sum;
    oc.output = io::make_spec(cx::y_object());
  } else if (name == "coalg-disj") {
    auto res = cx::run_coalgebra_disj_failure();
    r.merge(res.report);
    oc.payload["subspaces_examined"] = res.subspaces_examined;
    oc.payload["preimage_dims"] = res.preimage_dims;
    oc.payload["pullback_dims"] = res.pullback_dims;
    oc.payload["algorithms_agree"] = res.algorithms_agree;
  } else {
    throw UsageError("unknown counterexample " + name + " (alpha, y, coalg-disj)");
  }
  return oc;
}

// ---- proptest ------------------------------------------------------------------------------

Outcome cmd_proptest(const Options& o) {
  Outcome oc;
  oc.report.merge(precat::disj_properties_finset(o.seed, o.cases), "finset");
  oc.report.merge(precat::decomposing_properties_matmod(o.seed, o.cases), "matmod");
  return oc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"templ: templicial objects, colax functors and precategories at desk scale"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "Write the produced spec file here");
  };

  auto* check = app.add_subcommand("check", "Check every law of a spec file");
  check->add_option("file", o.file)->required();
  check->add_option("--kind", o.kind, "Expected kind of the input");
  add_common(check);

  auto* nerve_cmd = app.add_subcommand("nerve", "Truncated nerve of a category spec");
  nerve_cmd->add_option("file", o.file)->required();
  nerve_cmd->add_option("--truncation", o.truncation, "Top level N")->check(CLI::Range(0, 6));
  nerve_cmd->add_option("--form", o.form)->check(CLI::IsMember({"templicial", "simplicial"}));
  add_common(nerve_cmd);

  auto* compare_cmd = app.add_subcommand("compare", "Run a comparison functor or round trip");
  compare_cmd->add_option("file", o.file)->required();
  compare_cmd->add_option("--route", o.route)
      ->check(CLI::IsMember({"c", "d", "roundtrip", "leinster", "simpson", "cprime"}));
  add_common(compare_cmd);

  auto* cx_cmd = app.add_subcommand("counterexample", "Reproduce alpha, y or coalg-disj");
  cx_cmd->add_option("name", o.name)->required();
  add_common(cx_cmd);

  auto* prop = app.add_subcommand("proptest", "Seeded decomposing-category property runs");
  prop->add_option("--seed", o.seed, "Seed");
  prop->add_option("--cases", o.cases, "Cases per suite");
  add_common(prop);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (prop->parsed()) {
      const std::string args = "proptest --seed " + std::to_string(o.seed) + " --cases " + std::to_string(o.cases);
      return finish(o, args, io::sha256_hex(args), cmd_proptest(o));
    }
    if (cx_cmd->parsed()) {
      const std::string args = "counterexample " + o.name;
      return finish(o, args, io::sha256_hex(args), cmd_counterexample(o.name));
    }
    const std::string text = read_file(o.file);
    const std::string digest = io::sha256_hex(text);
    const io::SpecFile spec = io::parse(text);
    if (check->parsed()) {
      if (!o.kind.empty() && o.kind != io::to_string(spec.kind))
        throw UsageError("expected kind " + o.kind + ", got " + io::to_string(spec.kind));
      return finish(o, "check", digest, cmd_check(spec));
    }
    if (nerve_cmd->parsed()) {
      Outcome oc = cmd_nerve(spec, o);
      if (o.out.empty() && oc.output && oc.report.passed()) {
        std::cout << io::emit(*oc.output);
        return 0;
      }
      return finish(o, "nerve --truncation " + std::to_string(o.truncation), digest, oc);
    }
    return finish(o, "compare --route " + o.route, digest, cmd_compare(spec, o.route));
  } catch (const io::SpecError& e) {
    std::cerr << "templ: " << o.file << ": " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "templ: " << e.what() << "\n";
    return 2;
  } catch (const vcat::InstanceError& e) {
    std::cerr << "templ: instance error: " << e.what() << "\n";
    return 2;
  } catch (const precat::PrecatError& e) {
    std::cerr << "templ: " << e.what() << "\n";
    return 1;
  }
}
