// brokentoric: command-line front end for broken toric variety invariants.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input complex,
// 3 internal assertion failure (engine disagreement, failed check).

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "brokentoric/cli/document.hpp"
#include "brokentoric/cli/report.hpp"
#include "brokentoric/error.hpp"
#include "brokentoric/invariants/invariants.hpp"
#include "brokentoric/polytope/generators.hpp"
#include "brokentoric/sheaves/sheaf.hpp"

namespace bt = brokentoric;
namespace inv = brokentoric::invariants;
namespace poly = brokentoric::polytope;

using bt::cli::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kInternal = 3;

struct Input {
  std::string text;
  bt::cli::ComplexDocument doc;
  poly::PolytopeComplex complex;
};

Input load(const std::string& path) {
  Input in;
  in.text = bt::cli::read_file(path);
  in.doc = bt::cli::parse_document(in.text);
  in.complex = bt::cli::build(in.doc);
  return in;
}

struct Output {
  bool as_json = false;
  std::string command;
};

int emit(const Output& out, const Input& in, std::string kind, json payload, const std::string& text, bool ok) {
  if (out.as_json) {
    bt::cli::ReportDocument doc{std::move(kind), std::move(payload), out.command, bt::cli::sha256_hex(in.text)};
    std::cout << doc.dump();
  } else {
    std::cout << text;
  }
  return ok ? kOk : kInternal;
}

std::string header(const Input& in) {
  const auto& p = in.complex;
  std::string name = in.doc.name.value_or("unnamed complex");
  std::string f;
  for (auto x : p.f_vector()) f += (f.empty() ? "" : ",") + std::to_string(x);
  return name + ": " + std::to_string(p.cells_of_dim(0).size()) + " vertices, top dimension " +
         std::to_string(p.top_dim()) + ", f-vector (" + f + ")\n";
}

std::size_t parse_count(const std::string& text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw bt::PreconditionError("expected a nonnegative integer, got '" + text + "'");
  return value;
}

struct Generated {
  poly::PolytopeComplex complex;
  std::string name;
};

Generated generate_named(const std::vector<std::string>& args, std::size_t at) {
  if (args.size() < at + 2) throw bt::PreconditionError("expected a generator name and parameter");
  const std::size_t param = parse_count(args[at + 1]);
  return {poly::generate(args[at], param), args[at] + "(" + args[at + 1] + ")"};
}

Generated generate_from(const std::vector<std::string>& args, std::optional<std::size_t> k) {
  if (args.empty()) throw bt::PreconditionError("generate needs a generator name");
  const std::string& verb = args.front();
  auto expect = [&](std::size_t count) {
    if (args.size() != count)
      throw bt::PreconditionError("'" + verb + "' takes " + std::to_string(count - 1) + " arguments");
  };
  if (verb == "example") {
    expect(2);
    if (args[1] == "2.6") return {poly::necklace(), "example-2.6"};
    if (args[1] == "2.7") return {poly::two_triangles(), "example-2.7"};
    throw bt::PreconditionError("unknown example '" + args[1] + "' (expected 2.6 or 2.7)");
  }
  if (verb == "necklace") {
    expect(1);
    return {poly::necklace(), "necklace"};
  }
  if (verb == "skeleton") {
    expect(3);
    if (!k) throw bt::PreconditionError("skeleton needs --k");
    auto base = generate_named(args, 1);
    return {poly::skeleton(base.complex, *k), "skeleton(" + base.name + "," + std::to_string(*k) + ")"};
  }
  if (verb == "boundary") {
    expect(3);
    auto base = generate_named(args, 1);
    return {poly::boundary(base.complex), "boundary(" + base.name + ")"};
  }
  if (verb == "product") {
    expect(5);
    auto a = generate_named(args, 1);
    auto b = generate_named(args, 3);
    return {poly::product(a.complex, b.complex), "product(" + a.name + "," + b.name + ")"};
  }
  expect(2);
  return generate_named(args, 0);
}

int cmd_generate(const std::vector<std::string>& args, std::optional<std::size_t> k, const std::string& out_path,
                 const std::string& name) {
  auto g = generate_from(args, k);
  const auto text = bt::cli::serialize_document(bt::cli::to_document(g.complex, name.empty() ? g.name : name));
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw bt::PreconditionError("cannot write '" + out_path + "'");
    file << text;
  }
  return kOk;
}

int cmd_validate(const Output& out, const Input& in) {
  const auto& p = in.complex;
  json payload{{"f_vector", p.f_vector()},
               {"vertices", p.cells_of_dim(0).size()},
               {"top_dim", p.top_dim()},
               {"pure", p.is_pure()},
               {"maximal_cells", p.maximal_cells().size()}};
  std::string text = header(in) + "maximal cells: " + std::to_string(p.maximal_cells().size()) +
                     "\npure: " + (p.is_pure() ? "yes" : "no");
  if (p.maximal_cells().size() == 1) {
    const bool simple = poly::is_simple(p);
    payload["simple"] = simple;
    text += std::string("\nsingle polytope, simple: ") + (simple ? "yes" : "no");
  }
  return emit(out, in, "validate", payload, text + "\nvalid\n", true);
}

int cmd_e2(const Output& out, const Input& in, bt::cohomology::Engine engine) {
  const auto e2 = inv::e2_page(in.complex, engine);
  return emit(out, in, "e2", bt::cli::to_json(e2),
              header(in) + "E2 page, entry (p,q) = h^p(P, R^q f_* Q):\n" + bt::cli::render_e2(e2), true);
}

int cmd_betti(const Output& out, const Input& in, bt::cohomology::Engine engine) {
  const auto e2 = inv::e2_page(in.complex, engine);
  const auto b = inv::betti_broken_toric(e2);
  const auto checks = inv::euler_check(in.complex, e2);
  json payload = bt::cli::to_json(b);
  payload["e2"] = bt::cli::to_json(e2);
  payload["checks"] = bt::cli::to_json(checks);
  const std::string text = header(in) + "E2 page, entry (p,q) = h^p(P, R^q f_* Q):\n" + bt::cli::render_e2(e2) +
                           bt::cli::render_betti(b) + bt::cli::render_checks(checks);
  return emit(out, in, "betti", payload, text, checks.passed());
}

int cmd_filtration(const Output& out, const Input& in, bt::cohomology::Engine engine) {
  const auto e2 = inv::e2_page(in.complex, engine);
  const auto table = inv::leray_weight_table(e2);
  json payload = bt::cli::to_json(table);
  payload["e2"] = bt::cli::to_json(e2);
  const std::string text = header(in) + "Leray filtration dim L_k H^i, weights W_2k = W_2k+1 = L_k:\n" +
                           bt::cli::render_filtration(table);
  return emit(out, in, "filtration", payload, text, true);
}

std::string grid_tuple(const std::vector<std::int64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

inv::SignedGrid signed_grid(const inv::E2Page& e2) {
  inv::SignedGrid g(e2.grid.size());
  for (std::size_t p = 0; p < e2.grid.size(); ++p)
    for (auto x : e2.grid[p]) g[p].push_back(static_cast<std::int64_t>(x));
  return g;
}

int cmd_formulas(const Output& out, const Input& in, bt::cohomology::Engine engine, bool skeletal,
                 std::optional<std::size_t> k) {
  const auto& parent = in.complex;
  inv::Report checks;
  json payload;
  std::string text = header(in);

  if (!skeletal) {
    const auto h = inv::h_vector_formula(parent);
    const auto e2 = inv::e2_page(parent, engine);
    checks = inv::verify_vanishing(parent, e2, inv::VanishingMode::toric_diagonal);
    payload = {{"f_vector", parent.f_vector()}, {"h_vector", h}, {"e2", bt::cli::to_json(e2)}};
    text += "h-vector " + grid_tuple(h) + "\nE2 page:\n" + bt::cli::render_e2(e2);
  } else {
    if (!k) throw bt::PreconditionError("--skeletal needs --k");
    const auto prediction = inv::skeletal_formula(parent, *k, engine);
    const auto skeleton = poly::skeleton(parent, *k);
    const auto e2 = inv::e2_page(skeleton, engine);
    const auto engine_grid = signed_grid(e2);
    const auto b = inv::betti_broken_toric(e2);

    payload = {{"k", *k},
               {"parent_dim", prediction.parent_dim},
               {"predicted", prediction.general},
               {"engine", bt::cli::to_json(e2)},
               {"betti", b.dims}};
    text += "skeleton of dimension " + std::to_string(*k) + "\npredicted E2 (from the solid parent):\n" +
            bt::cli::render_grid(prediction.general) + "engine E2 of the skeleton:\n" + bt::cli::render_e2(e2);
    checks.add("predicted grid equals engine grid", prediction.general == engine_grid);
    if (prediction.simple) {
      payload["predicted_simple"] = *prediction.simple;
      text += "predicted E2 (simple-polytope form):\n" + bt::cli::render_grid(*prediction.simple);
      checks.add("simple-polytope prediction equals engine grid", *prediction.simple == engine_grid);
    }

    if (poly::is_simple(parent) && *k + 1 == prediction.parent_dim) {
      const auto closed = inv::skeletal_closed_form(parent);
      std::vector<std::int64_t> actual(b.dims.begin(), b.dims.end());
      payload["closed_form"] = {{"corrected", closed.corrected}, {"printed", closed.printed}};
      text += "Betti numbers " + grid_tuple(actual) + "\nclosed form, exponent n+1-i:  " +
              grid_tuple(closed.corrected) + "\nclosed form, exponent n+1-2i: " + grid_tuple(closed.printed) + "\n";
      checks.add("closed form (exponent n+1-i) equals Betti numbers", closed.corrected == actual);
      checks.add("closed form (exponent n+1-2i) for reference", true,
                 closed.printed == actual ? "agrees" : "differs " + grid_tuple(closed.printed));
    }
  }
  payload["checks"] = bt::cli::to_json(checks);
  return emit(out, in, "formulas", payload, text + bt::cli::render_checks(checks), checks.passed());
}

int cmd_sheaf(const Output& out, const Input& in, bt::cohomology::Engine engine, std::size_t degree,
              const std::vector<std::size_t>& facets, bool stalks) {
  const auto& p = in.complex;
  const auto sheaf = facets.empty() ? bt::sheaves::moment_sheaf(p, degree)
                                    : bt::sheaves::structural_sheaf(p, degree, facets);
  const auto labels = bt::cli::wedge_labels(p.ambient_dim(), degree);
  const auto compat = bt::sheaves::check_cell_compatibility(p, sheaf);

  inv::Report checks;
  checks.add("cell compatibility", compat.passed,
             compat.passed ? "" : std::to_string(compat.violations.size()) + " violating face pairs");
  json payload{{"degree", degree}, {"facets", facets}};
  std::string text = header(in) + (facets.empty() ? "moment sheaf" : "structural sheaf") + " of degree " +
                     std::to_string(degree) + "\n";
  if (stalks) {
    payload["stalks"] = bt::cli::stalks_to_json(p, sheaf, labels);
    text += bt::cli::render_stalks(p, sheaf, labels);
  }
  if (compat.passed) {
    const auto h = bt::cohomology::sheaf_cohomology(p, sheaf, engine);
    payload["cohomology"] = h.dims;
    std::string hs;
    for (auto x : h.dims) hs += (hs.empty() ? "" : ",") + std::to_string(x);
    text += "cohomology h^0..: (" + hs + ")\n";
  }
  payload["checks"] = bt::cli::to_json(checks);
  return emit(out, in, "sheaf", payload, text + bt::cli::render_checks(checks), checks.passed());
}

int cmd_verify(const Output& out, const Input& in, bt::cohomology::Engine engine, bool toric, bool mv) {
  const auto& p = in.complex;
  inv::Report checks;
  std::optional<inv::E2Page> e2;
  try {
    e2 = inv::e2_page(p, engine);
    checks.add("engine agreement", true, std::string(bt::cohomology::to_string(engine)));
  } catch (const bt::InternalError& e) {
    checks.add("engine agreement", false, e.what());
  }

  if (e2) {
    const bool single = p.maximal_cells().size() == 1;
    if (single) {
      checks.append(inv::verify_vanishing(p, *e2, inv::VanishingMode::toric_diagonal));
    } else {
      checks.append(inv::verify_vanishing(p, *e2, inv::VanishingMode::lower));
      if (toric) checks.add("toric diagonal", false, "input is not a single polytope");
      else checks.skip("toric diagonal", "input is not a single polytope");
    }
    checks.append(inv::euler_check(p, *e2));

    const auto table = inv::leray_weight_table(*e2);
    bool monotone = true;
    for (const auto& row : table.leray)
      for (std::size_t k = 1; k < row.size(); ++k) monotone = monotone && row[k - 1] <= row[k];
    const auto b = inv::betti_broken_toric(*e2);
    bool saturates = true;
    for (std::size_t i = 0; i < table.leray.size(); ++i) saturates = saturates && table.leray[i].back() == b.dims[i];
    checks.add("Leray filtration increasing and exhaustive", monotone && saturates);

    if (single && p.top_dim() >= 1) {
      if (poly::is_simple(p)) {
        bool exact = true;
        std::string detail;
        const auto facets = bt::sheaves::facets_of_polytope(p);
        for (std::size_t i = 0; i <= static_cast<std::size_t>(p.top_dim()); ++i) {
          const auto report = bt::sheaves::peel_sequence(p, i, facets);
          exact = exact && report.exact;
          if (!report.exact) detail += "degree " + std::to_string(i) + " not exact; ";
        }
        checks.add("facet peeling exact (facet id order)", exact,
                   detail.empty() ? "contractibility of the peeled unions not checked" : detail);
      } else {
        checks.skip("facet peeling", "polytope is not simple");
      }
    }
  }

  if (mv) {
    if (p.top_dim() >= 1) checks.append(inv::mayer_vietoris_check(p, engine));
    else checks.skip("Mayer-Vietoris chi identity", "complex has no cells of positive dimension");
  }

  json payload{{"checks", bt::cli::to_json(checks)}};
  if (e2) payload["e2"] = bt::cli::to_json(*e2);
  return emit(out, in, "verify", payload, header(in) + bt::cli::render_checks(checks), checks.passed());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of broken toric varieties over polytope complexes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "brokentoric 1.0");

  std::string input;
  bool as_json = false;
  std::string engine_name = "both";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input, "complex document (JSON)")->required();
    sub->add_flag("--json", as_json, "emit a JSON report document");
    sub->add_option("--engine", engine_name, "cohomology engine")
        ->check(CLI::IsMember({"cellular", "bar", "both"}))
        ->capture_default_str();
  };

  std::vector<std::string> gen_args;
  std::optional<std::size_t> k;
  std::string out_path;
  std::string doc_name;
  auto* generate = app.add_subcommand("generate", "write a generated complex document");
  generate->add_option("generator", gen_args,
                       "cube 3 | simplex 2 | polygon 5 | pyramid 4 | cross_polytope 3 | skeleton <gen> <n> --k k | "
                       "boundary <gen> <n> | product <gen> <n> <gen> <n> | example 2.6 | example 2.7")
      ->required();
  generate->add_option("--k", k, "skeleton dimension");
  generate->add_option("-o,--output", out_path, "output file (default stdout)");
  generate->add_option("--name", doc_name, "document name");

  auto* validate = app.add_subcommand("validate", "check a complex document");
  auto* betti = app.add_subcommand("betti", "E2 page, Betti numbers and Euler check");
  auto* e2 = app.add_subcommand("e2", "E2 page of the Leray spectral sequence");
  auto* filtration = app.add_subcommand("filtration", "Leray filtration and weight labels");
  auto* formulas = app.add_subcommand("formulas", "h-vector or skeletal formulas against the engine");
  auto* sheaf = app.add_subcommand("sheaf", "stalks and cohomology of a moment or structural sheaf");
  auto* verify = app.add_subcommand("verify", "run the invariant checks");
  for (auto* sub : {validate, betti, e2, filtration, formulas, sheaf, verify}) add_common(sub);

  bool skeletal = false;
  formulas->add_flag("--skeletal", skeletal, "input is the solid parent; compare predictions for its k-skeleton");
  formulas->add_option("--k", k, "skeleton dimension");

  std::size_t degree = 0;
  std::vector<std::size_t> facets;
  bool stalks = false;
  sheaf->add_option("--moment", degree, "sheaf degree i")->required();
  sheaf->add_option("--facets", facets, "facet cell ids: structural sheaf S^i(A) instead of the moment sheaf")
      ->delimiter(',');
  sheaf->add_flag("--stalks", stalks, "print the stalk table");

  bool toric = false;
  bool mv = false;
  verify->add_flag("--toric", toric, "require the toric diagonal checks");
  verify->add_flag("--mv", mv, "Mayer-Vietoris chi identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  Output out{as_json, "brokentoric"};
  for (int a = 1; a < argc; ++a) out.command += std::string(" ") + argv[a];

  try {
    if (generate->parsed()) return cmd_generate(gen_args, k, out_path, doc_name);
    const auto engine = bt::cohomology::parse_engine(engine_name);
    const Input in = load(input);
    if (validate->parsed()) return cmd_validate(out, in);
    if (betti->parsed()) return cmd_betti(out, in, engine);
    if (e2->parsed()) return cmd_e2(out, in, engine);
    if (filtration->parsed()) return cmd_filtration(out, in, engine);
    if (formulas->parsed()) return cmd_formulas(out, in, engine, skeletal, k);
    if (sheaf->parsed()) return cmd_sheaf(out, in, engine, degree, facets, stalks);
    if (verify->parsed()) return cmd_verify(out, in, engine, toric, mv);
  } catch (const bt::InvalidComplex& e) {
    std::cerr << "invalid complex: " << e.what() << "\n";
    return kInvalid;
  } catch (const bt::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const bt::InternalError& e) {
    std::cerr << "internal assertion failed: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
