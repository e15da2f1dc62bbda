// amr: solve, generate, evaluate and ablate Raven-style matrices, plus an
// algebra scratchpad for monomial ideals and Gröbner bases.
//
// Exit codes: 0 success, 1 per-file or evaluation errors, 2 usage errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"

#include "amr/batch.hpp"
#include "amr/error.hpp"
#include "amr/generation.hpp"
#include "amr/groebner.hpp"
#include "amr/invariance.hpp"
#include "amr/io.hpp"
#include "amr/raven_xml.hpp"
#include "amr/svg.hpp"
#include "amr/synthetic.hpp"
#include "amr/text_format.hpp"

namespace fs = std::filesystem;
using namespace amr;

namespace {

struct GlobalOptions {
  std::string schema = "iraven-full";
  std::uint64_t seed = 0;
  std::string deltas = "1,2,-1,-2";
  std::string ops = "+-";
  std::string modules = "all";
  std::size_t jobs = 1;
  std::string out;
  std::string svg;
  std::string mapping;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_deltas(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--deltas: not an integer: '" + item + "'");
    }
  }
  return out;
}

std::vector<BinaryOp> parse_ops(const std::string& text) {
  std::vector<BinaryOp> out;
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    auto op = parse_op(c);
    if (!op) throw UsageError(std::string("--ops: unknown operator '") + c + "'");
    out.push_back(*op);
  }
  return out;
}

SolverConfig solver_config(const GlobalOptions& g) {
  SolverConfig config;
  config.deltas = parse_deltas(g.deltas);
  config.binary_ops = parse_ops(g.ops);
  config.modules = parse_modules(g.modules);
  validate_config(config);
  return config;
}

void emit(const Json& doc, const GlobalOptions& g) {
  if (g.out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    write_json_file(doc, g.out);
  }
}

struct Loaded {
  std::string source;
  RpmInstance instance;
};

struct LoadResult {
  std::vector<Loaded> instances;
  Json errors = Json::array();
};

LoadResult load_inputs(const std::vector<std::string>& args, const AttributeSchema& schema, const GlobalOptions& g) {
  const auto paths = expand_inputs(args);
  if (paths.empty()) throw UsageError("no input files matched");
  const RavenMapping mapping = g.mapping.empty() ? RavenMapping{} : load_mapping(g.mapping);
  const auto loaded = parallel_map<RpmInstance>(paths.size(), g.jobs, [&](std::size_t i) {
    return paths[i].extension() == ".xml" ? load_raven_xml(paths[i], schema, mapping) : load_instance(paths[i], schema);
  });
  LoadResult out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (loaded[i].value) {
      out.instances.push_back({paths[i].string(), *loaded[i].value});
    } else {
      out.errors.push_back({{"source", paths[i].string()}, {"error", loaded[i].error}});
    }
  }
  // Reports are ordered by instance id, then source.
  std::stable_sort(out.instances.begin(), out.instances.end(), [](const Loaded& a, const Loaded& b) {
    return std::tie(a.instance.id, a.source) < std::tie(b.instance.id, b.source);
  });
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Json accuracy_summary(std::span<const SelectionOutcome> outcomes) {
  Json s;
  s["scored"] = outcomes.size();
  if (outcomes.empty()) return s;
  std::size_t plain = 0;
  for (const auto& o : outcomes) plain += o.report.chosen_index == o.ground_truth ? 1 : 0;
  const Rational weighted = weighted_accuracy(outcomes);
  s["accuracy"] = static_cast<double>(plain) / static_cast<double>(outcomes.size());
  s["weighted_accuracy"] = format_rational(weighted);
  s["weighted_accuracy_value"] = weighted.get_d();
  return s;
}

// Solves every instance; appends per-instance failures to `errors`.
std::vector<std::optional<SelectionReport>> solve_all(const std::vector<Loaded>& items, const ReasoningContext& ctx,
                                                      std::size_t jobs, Json& errors) {
  const auto results = parallel_map<SelectionReport>(
      items.size(), jobs, [&](std::size_t i) { return select_answer(items[i].instance, ctx); });
  std::vector<std::optional<SelectionReport>> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    out.push_back(results[i].value);
    if (!results[i].value) errors.push_back({{"source", items[i].source}, {"error", results[i].error}});
  }
  return out;
}

int cmd_solve(const std::vector<std::string>& inputs, const GlobalOptions& g) {
  const auto t0 = std::chrono::steady_clock::now();
  const AttributeSchema schema = resolve_schema(g.schema);
  const ReasoningContext ctx(schema, solver_config(g));
  LoadResult loaded = load_inputs(inputs, schema, g);
  const auto reports = solve_all(loaded.instances, ctx, g.jobs, loaded.errors);

  Json instances = Json::array();
  std::vector<SelectionOutcome> outcomes;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (!reports[i]) continue;
    const RpmInstance& inst = loaded.instances[i].instance;
    Json entry{{"source", loaded.instances[i].source}, {"report", report_to_json(*reports[i], schema)}};
    if (inst.ground_truth) {
      entry["ground_truth"] = *inst.ground_truth;
      entry["correct"] = reports[i]->chosen_index == *inst.ground_truth;
      outcomes.push_back({*reports[i], *inst.ground_truth});
    }
    instances.push_back(std::move(entry));
  }
  Json summary = accuracy_summary(outcomes);
  summary["instances"] = instances.size();
  summary["errors"] = loaded.errors.size();
  const double secs = seconds_since(t0);
  Json doc{{"command", "solve"},
           {"schema", schema.name()},
           {"config", config_to_json(ctx.config())},
           {"instances", std::move(instances)},
           {"errors", loaded.errors},
           {"summary", summary},
           {"timing", {{"seconds", secs}, {"instances_per_second", secs > 0 ? reports.size() / secs : 0.0}}}};
  emit(doc, g);
  return loaded.errors.empty() ? 0 : 1;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

int cmd_generate(const std::vector<std::string>& inputs, const GlobalOptions& g, bool evaluate) {
  const AttributeSchema schema = resolve_schema(g.schema);
  const ReasoningContext ctx(schema, solver_config(g));
  LoadResult loaded = load_inputs(inputs, schema, g);
  const auto generated = parallel_map<GeneratedAnswer>(loaded.instances.size(), g.jobs, [&](std::size_t i) {
    return generate_answer(loaded.instances[i].instance.question_matrix(), ctx, g.seed);
  });

  Json instances = Json::array();
  Rational phi_sum = 0;
  std::size_t scored = 0;
  for (std::size_t i = 0; i < generated.size(); ++i) {
    const Loaded& item = loaded.instances[i];
    if (!generated[i].value) {
      loaded.errors.push_back({{"source", item.source}, {"error", generated[i].error}});
      continue;
    }
    const GeneratedAnswer& answer = *generated[i].value;
    Json entry{{"source", item.source}, {"instance", item.instance.id}, {"generated", generated_to_json(answer, schema)}};
    if (item.instance.ground_truth) {
      const SimilarityReport sim = similarity(answer.ideal, item.instance.answers[*item.instance.ground_truth], schema);
      entry["similarity"] = similarity_to_json(sim, schema);
      phi_sum += sim.phi;
      ++scored;
    } else if (evaluate) {
      loaded.errors.push_back({{"source", item.source}, {"error", "instance has no ground truth"}});
      continue;
    }
    if (!g.svg.empty()) {
      const fs::path target = loaded.instances.size() == 1 && fs::path(g.svg).extension() == ".svg"
                                  ? fs::path(g.svg)
                                  : fs::path(g.svg) / (item.instance.id.empty() ? "instance" + std::to_string(i) + ".svg"
                                                                                 : item.instance.id + ".svg");
      write_text(target, render_panel_svg(answer.ideal, schema));
      entry["svg"] = target.string();
    }
    instances.push_back(std::move(entry));
  }
  Json summary{{"instances", instances.size()}, {"errors", loaded.errors.size()}, {"scored", scored}};
  if (scored > 0) {
    const Rational mean = phi_sum / scored;
    summary["mean_phi"] = format_rational(mean);
    summary["mean_phi_value"] = mean.get_d();
  }
  Json doc{{"command", evaluate ? "evaluate-gen" : "generate"},
           {"schema", schema.name()},
           {"config", config_to_json(ctx.config())},
           {"seed", g.seed},
           {"instances", std::move(instances)},
           {"errors", loaded.errors},
           {"summary", summary}};
  emit(doc, g);
  return loaded.errors.empty() ? 0 : 1;
}

int cmd_ablate(const std::vector<std::string>& inputs, const GlobalOptions& g) {
  const AttributeSchema schema = resolve_schema(g.schema);
  const SolverConfig base = solver_config(g);
  LoadResult loaded = load_inputs(inputs, schema, g);
  std::erase_if(loaded.instances, [&](const Loaded& item) {
    if (item.instance.ground_truth) return false;
    loaded.errors.push_back({{"source", item.source}, {"error", "instance has no ground truth"}});
    return true;
  });
  if (loaded.instances.empty()) throw UsageError("no instance with ground truth to ablate on");

  std::vector<std::pair<std::string, ModuleSet>> variants = {{"full", base.modules}};
  for (const char* name : {"intra", "inter", "comp", "binary"}) {
    ModuleSet m = base.modules;
    if (std::string(name) == "intra") m.intra = false;
    if (std::string(name) == "inter") m.inter = false;
    if (std::string(name) == "comp") m.comp = false;
    if (std::string(name) == "binary") m.binary = false;
    variants.emplace_back(std::string("without ") + name, m);
  }
  variants.emplace_back("none", parse_modules("none"));

  Json rows = Json::array();
  for (const auto& [label, modules] : variants) {
    SolverConfig config = base;
    config.modules = modules;
    const ReasoningContext ctx(schema, config);
    Json errors = Json::array();
    const auto reports = solve_all(loaded.instances, ctx, g.jobs, errors);
    std::vector<SelectionOutcome> outcomes;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (reports[i]) outcomes.push_back({*reports[i], *loaded.instances[i].instance.ground_truth});
    }
    Json row = accuracy_summary(outcomes);
    row["variant"] = label;
    row["modules"] = format_modules(modules);
    row["errors"] = errors;
    std::cerr << label << ": " << (outcomes.empty() ? std::string("-") : row["weighted_accuracy"].get<std::string>())
              << '\n';
    for (const auto& e : errors) loaded.errors.push_back(e);
    rows.push_back(std::move(row));
  }
  Json doc{{"command", "ablate"},
           {"schema", schema.name()},
           {"config", config_to_json(base)},
           {"instances", loaded.instances.size()},
           {"variants", std::move(rows)},
           {"errors", loaded.errors}};
  emit(doc, g);
  return loaded.errors.empty() ? 0 : 1;
}

int cmd_algebra(const std::string& op, const std::vector<std::string>& args) {
  // Free variable names, ranked by first appearance.
  VariableNames names({}, false);
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw UsageError("algebra " + op + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
    }
  };
  if (op == "pd" || op == "mingen") {
    need(1);
    const Concept J = parse_concept(args[0], names);
    if (op == "mingen") {
      std::cout << format_concept(J, names) << '\n';
      return 0;
    }
    const auto pd = primary_decompose(J);
    for (const Concept& q : pd.components) std::cout << format_concept(q, names) << '\n';
    std::cerr << pd.components.size() << " components\n";
    return 0;
  }
  if (op == "intersect" || op == "sum" || op == "product") {
    need(2);
    const Concept a = parse_concept(args[0], names);
    const Concept b = parse_concept(args[1], names);
    const Concept r = op == "intersect" ? intersect(a, b) : op == "sum" ? sum(a, b) : product(a, b);
    std::cout << format_concept(r, names) << '\n';
    return 0;
  }
  if (op == "gb") {
    need(1);
    const auto polys = parse_polynomial_list(args[0], names);
    const GroebnerBasis basis = buchberger(polys);
    for (const Polynomial& p : basis.elements) std::cout << format_polynomial(p, names) << '\n';
    return 0;
  }
  if (op == "member") {
    need(2);
    const Polynomial p = parse_polynomial(args[0], names);
    const auto polys = parse_polynomial_list(args[1], names);
    const bool in = ideal_member(p, buchberger(polys));
    std::cout << (in ? "member" : "not a member") << '\n';
    return in ? 0 : 1;
  }
  throw UsageError("unknown algebra operation '" + op + "'");
}

int cmd_make_synthetic(const std::string& family_text, const std::string& configuration_text, std::size_t count,
                       const GlobalOptions& g) {
  const auto family = parse_family(family_text);
  if (!family) throw UsageError("unknown rule family '" + family_text + "'");
  const auto configuration = parse_configuration(configuration_text);
  if (!configuration) throw UsageError("unknown configuration '" + configuration_text + "'");
  const fs::path dir = g.out.empty() ? fs::path(".") : fs::path(g.out);
  fs::create_directories(dir);
  const AttributeSchema& schema = AttributeSchema::iraven_full();
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t seed = g.seed + k;
    RpmInstance inst = generate_synthetic(sample_family_config(*family, *configuration, seed), seed);
    inst.id = "synthetic-" + family_text + "-" + configuration_text + "-" + std::to_string(seed);
    const fs::path path = dir / (inst.id + ".json");
    save_instance(inst, schema, path);
    std::cout << path.string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic machine reasoning for Raven-style progressive matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--schema", g.schema, "Schema preset (iraven-full, running-example) or schema JSON path")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for every random draw")->capture_default_str();
  app.add_option("--deltas", g.deltas, "Comma-separated progression steps")->capture_default_str();
  app.add_option("--ops", g.ops, "Binary operators from + - * /")->capture_default_str();
  app.add_option("--modules", g.modules, "Enabled modules: all, none, or a subset of intra,inter,comp,binary")
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads; 0 uses every hardware thread")->capture_default_str();
  app.add_option("--out", g.out, "Output file (reports) or directory (make-synthetic)");
  app.add_option("--svg", g.svg, "SVG output file, or directory for several instances (generate)");
  app.add_option("--mapping", g.mapping, "XML attribute mapping JSON for .xml inputs");

  std::vector<std::string> inputs;
  auto* solve = app.add_subcommand("solve", "Select an answer for each instance");
  solve->add_option("inputs", inputs, "Instance files, directories or wildcard patterns")->required();
  auto* generate = app.add_subcommand("generate", "Generate the missing panel without the answer set");
  generate->add_option("inputs", inputs, "Instance files, directories or wildcard patterns")->required();
  auto* evaluate = app.add_subcommand("evaluate-gen", "Generate and compare against the ground-truth answer");
  evaluate->add_option("inputs", inputs, "Instance files, directories or wildcard patterns")->required();
  auto* ablate = app.add_subcommand("ablate", "Weighted accuracy with each module disabled");
  ablate->add_option("inputs", inputs, "Instance files, directories or wildcard patterns")->required();

  std::string algebra_op;
  std::vector<std::string> algebra_args;
  auto* algebra = app.add_subcommand("algebra", "Ideal operations: pd, mingen, intersect, sum, product, gb, member");
  algebra->add_option("operation", algebra_op, "Operation")->required();
  algebra->add_option("arguments", algebra_args, "Ideals such as \"<x*y, y*z>\" or polynomials");

  std::string family = "constant";
  std::string configuration = "center";
  std::size_t count = 1;
  auto* make = app.add_subcommand("make-synthetic", "Write seeded synthetic instances as JSON");
  make->add_option("--family", family, "constant, set-permutation, progression or arithmetic")->capture_default_str();
  make->add_option("--configuration", configuration, "center, two-entity or four-grid")->capture_default_str();
  make->add_option("--count", count, "Number of instances; seeds run from --seed upward")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(inputs, g);
    if (generate->parsed()) return cmd_generate(inputs, g, false);
    if (evaluate->parsed()) return cmd_generate(inputs, g, true);
    if (ablate->parsed()) return cmd_ablate(inputs, g);
    if (algebra->parsed()) return cmd_algebra(algebra_op, algebra_args);
    if (make->parsed()) return cmd_make_synthetic(family, configuration, count, g);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
