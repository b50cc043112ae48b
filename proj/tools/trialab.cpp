// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trialab/altmap.hpp"
#include "trialab/enumerate.hpp"
#include "trialab/error.hpp"
#include "trialab/io.hpp"
#include "trialab/minor.hpp"
#include "trialab/mu_arg.hpp"
#include "trialab/reduce.hpp"
#include "trialab/suites.hpp"
#include "trialab/transform.hpp"

namespace {

using namespace trialab;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

template <typename Writer>
void emit(const std::string& path, Writer writer) {
  if (path.empty()) {
    writer(std::cout);
  } else {
    io::write_file(path, writer);
  }
}

ReductionKind reduction_kind(const std::string& text) {
  const Complex mu = parse_mu(text);
  for (auto kind : ReductionKind::all()) {
    if (std::abs(mu - kind.value()) <= 1e-12) return kind;
  }
  throw Error(ErrorKind::InvalidArgument, "reduction --mu must be 1, w or w2, got '" + text + "'");
}

AlternatingDimap load_dimap(const std::string& path) {
  return io::read_file(path, [](std::istream& in) { return io::read_dimap(in); });
}

struct Options {
  std::string input;
  std::string output;
  std::string mu = "1";
  bool inverse = false;
  bool normalize = false;
  std::size_t element = 0;
  std::string edge;
  std::size_t times = 1;
  std::size_t edges = 0;
  std::string strategy = "rotation";
  std::vector<std::string> suites;
  std::uint64_t seed = 1;
};

int cmd_transform(const Options& o, double tol) {
  const RawVector v = io::read_file(o.input, [](std::istream& in) { return io::read_vector(in); });
  const Complex mu = parse_mu(o.mu);
  RawVector out = o.inverse ? inverse_transform(v, mu) : transform(v, mu);
  if (o.normalize && std::abs(out[0]) > tol) out = BinaryFunction::normalize(out, tol).raw();
  emit(o.output, [&](std::ostream& s) { io::write_vector(s, out); });
  return kExitOk;
}

int cmd_minor(const Options& o, double tol) {
  const BinaryFunction f =
      io::read_file(o.input, [&](std::istream& in) { return io::read_binary_function(in, o.normalize, tol); });
  const BinaryFunction out = take_minor(f, {o.element, parse_mu(o.mu)}, tol);
  emit(o.output, [&](std::ostream& s) { io::write_vector(s, out); });
  return kExitOk;
}

int cmd_validate(const Options& o) {
  const DimapSpec spec = io::read_file(o.input, [](std::istream& in) { return io::read_dimap_spec(in); });
  const ValidationReport report = validate(spec);
  if (report.empty()) {
    std::cout << "VALID\n";
    return kExitOk;
  }
  for (const auto& line : report) std::cout << "INVALID " << line << "\n";
  return kExitFailed;
}

int cmd_trial(const Options& o) {
  const AlternatingDimap g = trial_power(load_dimap(o.input), o.times);
  emit(o.output, [&](std::ostream& s) { io::write_dimap(s, g); });
  return kExitOk;
}

int cmd_reduce(const Options& o) {
  const AlternatingDimap g = reduce(load_dimap(o.input), o.edge, reduction_kind(o.mu));
  emit(o.output, [&](std::ostream& s) { io::write_dimap(s, g); });
  return kExitOk;
}

int cmd_classify(const Options& o) {
  const AlternatingDimap g = load_dimap(o.input);
  auto flag = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "edge ultraloop 1-loop w-loop w2-loop triloop semiloop(1,w,w2) proper-semiloop\n";
  for (const auto& label : g.labels()) {
    const EdgeClassification c = classify_edge(g, label);
    std::cout << label << " " << flag(c.is_ultraloop) << " " << flag(c.is_1loop) << " " << flag(c.is_omega_loop)
              << " " << flag(c.is_omega2_loop) << " " << flag(c.is_triloop) << " " << flag(c.is_mu_semiloop[0])
              << "," << flag(c.is_mu_semiloop[1]) << "," << flag(c.is_mu_semiloop[2]) << " "
              << flag(c.is_proper_semiloop) << "\n";
  }
  return kExitOk;
}

int cmd_catalog(const Options& o) {
  const GenerationStrategy strategy =
      o.strategy == "successor" ? GenerationStrategy::SuccessorPairs : GenerationStrategy::RotationFirst;
  const Catalog catalog = enumerate_dimaps(o.edges, kHardEnumerationCap, strategy);
  if (!o.output.empty()) {
    std::filesystem::create_directories(o.output);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      std::ostringstream name;
      name << "k" << o.edges << "_" << std::setw(3) << std::setfill('0') << i << ".adm";
      io::write_file((std::filesystem::path(o.output) / name.str()).string(),
                     [&](std::ostream& s) { io::write_dimap(s, catalog.maps[i]); });
    }
  }
  std::cout << "edges " << o.edges << " maps " << catalog.size() << "\n";
  std::cout << "index components genus self-trial form\n";
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const CatalogEntry& e = catalog.entries[i];
    std::cout << i << " " << e.components << " ";
    for (std::size_t j = 0; j < e.genus_profile.size(); ++j) std::cout << (j ? "," : "") << e.genus_profile[j];
    if (e.genus_profile.empty()) std::cout << "-";
    std::cout << " " << (e.self_trial ? "yes" : "no") << " " << catalog.forms[i].str() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const std::vector<std::string> names = o.suites.empty() ? suites::suite_names() : o.suites;
  bool all_pass = true;
  for (const auto& name : names) {
    const auto checks = suites::suite(name);
    bool pass = true;
    std::size_t warnings = 0;
    for (const auto& check : checks) {
      const suites::CriterionResult r = check(o.seed);
      std::cout << "  [" << r.id << "] " << suites::to_string(r.status) << " " << r.name << ": " << r.detail << "\n";
      pass = pass && r.status != suites::Status::Fail;
      warnings += r.status == suites::Status::Warn ? 1 : 0;
    }
    std::cout << "SUITE " << name << " " << (pass ? "PASS" : "FAIL") << " checks=" << checks.size()
              << " warnings=" << warnings << " seed=" << o.seed << "\n";
    all_pass = all_pass && pass;
  }
  return all_pass ? kExitOk : kExitFailed;
}

void add_catalog_options(CLI::App* app, Options& o) {
  app->add_option("--edges", o.edges, "Number of edges")->required();
  app->add_option("-o,--output", o.output, "Directory for .adm files");
  app->add_option("--strategy", o.strategy, "rotation or successor")
      ->check(CLI::IsMember({"rotation", "successor"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trialab: binary functions, transforms, minors and alternating dimaps"};
  app.require_subcommand(1);
  Options o;

  auto* transform_cmd = app.add_subcommand("transform", "Apply the mu-transform to a .bf file");
  transform_cmd->add_option("input", o.input, "Input .bf file")->required()->check(CLI::ExistingFile);
  transform_cmd->add_option("--mu", o.mu, "1, -1, w, w2, x or x+yi");
  transform_cmd->add_flag("--inverse", o.inverse, "Apply the inverse transform");
  transform_cmd->add_flag("--normalize", o.normalize, "Divide by the empty-set entry");
  transform_cmd->add_option("-o,--output", o.output, "Output file");

  auto* minor_cmd = app.add_subcommand("minor", "Take a mu-minor of a .bf file");
  minor_cmd->add_option("input", o.input, "Input .bf file")->required()->check(CLI::ExistingFile);
  minor_cmd->add_option("--mu", o.mu, "1, -1, w, w2, x or x+yi")->required();
  minor_cmd->add_option("--element", o.element, "Element index")->required();
  minor_cmd->add_flag("--normalize", o.normalize, "Normalize the input first");
  minor_cmd->add_option("-o,--output", o.output, "Output file");

  auto* dimap_cmd = app.add_subcommand("dimap", "Alternating dimap operations");
  dimap_cmd->require_subcommand(1);
  auto* validate_cmd = dimap_cmd->add_subcommand("validate", "Check a .adm file");
  validate_cmd->add_option("input", o.input)->required()->check(CLI::ExistingFile);
  auto* trial_cmd = dimap_cmd->add_subcommand("trial", "Trial of a dimap");
  trial_cmd->add_option("input", o.input)->required()->check(CLI::ExistingFile);
  trial_cmd->add_option("--times", o.times, "Number of applications");
  trial_cmd->add_option("-o,--output", o.output, "Output file");
  auto* reduce_cmd = dimap_cmd->add_subcommand("reduce", "Reduce one edge");
  reduce_cmd->add_option("input", o.input)->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("--mu", o.mu, "1, w or w2")->required();
  reduce_cmd->add_option("--edge", o.edge, "Edge label")->required();
  reduce_cmd->add_option("-o,--output", o.output, "Output file");
  auto* classify_cmd = dimap_cmd->add_subcommand("classify", "Loop and semiloop flags per edge");
  classify_cmd->add_option("input", o.input)->required()->check(CLI::ExistingFile);
  auto* dimap_catalog_cmd = dimap_cmd->add_subcommand("catalog", "Enumerate dimaps up to isomorphism");
  add_catalog_options(dimap_catalog_cmd, o);

  auto* catalog_cmd = app.add_subcommand("catalog", "Same as 'dimap catalog'");
  add_catalog_options(catalog_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("suites", o.suites, "transforms minors degeneracy dimaps claims main-theorem")
      ->check(CLI::IsMember(suites::suite_names()));
  verify_cmd->add_option("--seed", o.seed, "Seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const double tol = default_tolerance();
    if (transform_cmd->parsed()) return cmd_transform(o, tol);
    if (minor_cmd->parsed()) return cmd_minor(o, tol);
    if (validate_cmd->parsed()) return cmd_validate(o);
    if (trial_cmd->parsed()) return cmd_trial(o);
    if (reduce_cmd->parsed()) return cmd_reduce(o);
    if (classify_cmd->parsed()) return cmd_classify(o);
    if (dimap_catalog_cmd->parsed() || catalog_cmd->parsed()) return cmd_catalog(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
