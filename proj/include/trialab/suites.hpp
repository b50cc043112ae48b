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

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trialab/altmap.hpp"
#include "trialab/binfun.hpp"
#include "trialab/enumerate.hpp"
#include "trialab/gf2.hpp"
#include "trialab/minor.hpp"
#include "trialab/oracle.hpp"
#include "trialab/reduce.hpp"
#include "trialab/represent.hpp"
#include "trialab/transform.hpp"

namespace trialab::suites {

enum class Status { Pass, Fail, Warn };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Warn: return "WARN";
  }
  return "FAIL";
}

struct CriterionResult {
  int id = 0;
  std::string suite;
  std::string name;
  Status status = Status::Fail;
  std::string detail;
};

using Rng = std::mt19937_64;

inline Complex random_complex(Rng& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> coord(-radius, radius);
  return {coord(rng), coord(rng)};
}

/// Modulus in [0.5, 2], uniform angle.
inline Complex random_mu(Rng& rng) {
  std::uniform_real_distribution<double> modulus(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(modulus(rng), angle(rng));
}

inline std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline BinaryFunction random_function(Rng& rng, std::size_t m) {
  std::vector<Complex> values(std::size_t{1} << m);
  values[0] = Complex{1.0, 0.0};
  for (std::size_t x = 1; x < values.size(); ++x) values[x] = random_complex(rng);
  return BinaryFunction::make(m, std::move(values));
}

/// Random function in which the elements flagged in `degenerate` factor
/// off as (1, c) with c random or zero.
inline BinaryFunction planted_function(Rng& rng, const std::vector<bool>& degenerate) {
  const std::size_t m = degenerate.size();
  std::size_t free_count = 0;
  for (bool d : degenerate) free_count += d ? 0 : 1;
  const BinaryFunction core = random_function(rng, free_count);
  std::vector<Complex> factor(m);
  for (std::size_t i = 0; i < m; ++i) {
    factor[i] = std::bernoulli_distribution(0.25)(rng) ? Complex{} : random_complex(rng);
  }
  std::vector<Complex> values(std::size_t{1} << m);
  for (std::size_t x = 0; x < values.size(); ++x) {
    std::size_t core_index = 0;
    Complex weight{1.0, 0.0};
    for (std::size_t i = 0; i < m; ++i) {
      const bool in = (x & element_bit(m, i)) != 0;
      if (degenerate[i]) {
        if (in) weight *= factor[i];
      } else {
        core_index = (core_index << 1) | (in ? 1U : 0U);
      }
    }
    values[x] = weight * core[core_index];
  }
  return BinaryFunction::make(m, std::move(values));
}

inline double max_abs_diff(const RawVector& a, const RawVector& b) {
  double out = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) out = std::max(out, std::abs(a[k] - b[k]));
  return out;
}

template <typename... Args>
std::string cat(Args&&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

inline CriterionResult make_result(int id, std::string suite, std::string name, bool ok, std::string detail) {
  return {id, std::move(suite), std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)};
}

// ---------------------------------------------------------------- transforms

inline CriterionResult transform_composition(std::uint64_t seed) {
  Rng rng(seed * 1000 + 1);
  double worst = 0.0;
  std::size_t failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = random_size(rng, 1, 8);
    const BinaryFunction f = random_function(rng, m);
    const Complex mu1 = random_mu(rng);
    const Complex mu2 = random_mu(rng);
    const double err = max_abs_diff(transform(transform(f, mu2), mu1), transform(f, mu1 * mu2));
    const double rel = err / f.raw().max_abs();
    worst = std::max(worst, rel);
    if (rel > 1e-9) ++failures;
  }
  return make_result(1, "transforms", "transform composition", failures == 0,
                     cat("200 samples, worst relative error ", worst, ", failures ", failures));
}

inline CriterionResult fast_vs_dense(std::uint64_t seed) {
  Rng rng(seed * 1000 + 2);
  double worst = 0.0;
  std::size_t failures = 0;
  for (std::size_t m = 1; m <= 6; ++m) {
    for (int trial = 0; trial < 50; ++trial) {
      const BinaryFunction f = random_function(rng, m);
      const Complex mu = random_mu(rng);
      const double err = max_abs_diff(transform(f, mu), oracle::dense_transform(f, mu));
      worst = std::max(worst, err);
      if (err > 1e-10) ++failures;
    }
  }
  return make_result(2, "transforms", "fast vs dense Kronecker transform", failures == 0,
                     cat("300 samples (m=1..6), worst error ", worst, ", failures ", failures));
}

inline CriterionResult hadamard_duality(std::uint64_t) {
  std::size_t graphs = 0;
  std::size_t failures = 0;
  double worst = 0.0;
  for (std::size_t v = 1; v <= 4; ++v) {
    for (std::size_t e = 1; e <= 5; ++e) {
      for (const auto& g : oracle::small_graphs(v, e)) {
        ++graphs;
        const BinaryFunction cut = rowspace_indicator(gf2::Matrix{e, g.incidence_rows()});
        const RawVector image = transform(cut, Complex{-1.0, 0.0});
        const RawVector circuits = oracle::indicator(g.circuit_space(), e);
        const double residual = proportionality_residual(image, circuits);
        worst = std::max(worst, residual);
        if (residual > 1e-9) ++failures;
      }
    }
  }
  return make_result(3, "transforms", "Hadamard duality of cutset and circuit spaces", failures == 0,
                     cat(graphs, " graphs, worst proportionality residual ", worst, ", failures ", failures));
}

// -------------------------------------------------------------------- minors

inline CriterionResult transform_minor_interchange(std::uint64_t seed) {
  Rng rng(seed * 1000 + 4);
  std::size_t done = 0;
  std::size_t resampled = 0;
  std::size_t failures = 0;
  while (done < 200) {
    const std::size_t m = random_size(rng, 1, 6);
    const BinaryFunction f = random_function(rng, m);
    const std::size_t element = random_size(rng, 0, m - 1);
    const Complex mu = random_mu(rng);
    const Complex nu = random_mu(rng);
    if (is_minor_pole(nu) || is_minor_pole(mu * nu)) {
      ++resampled;
      continue;
    }
    try {
      if (!transform_minor_check(f, mu, nu, element, 1e-8)) ++failures;
      ++done;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NormalizationError) throw;
      ++resampled;
    }
  }
  const double rate = static_cast<double>(resampled) / static_cast<double>(done + resampled);
  return make_result(4, "minors", "transform-minor interchange", failures == 0 && rate <= 0.05,
                     cat("200 samples, failures ", failures, ", resample rate ", rate));
}

inline CriterionResult minor_commutativity(std::uint64_t seed) {
  Rng rng(seed * 1000 + 5);
  const std::vector<Complex> mus{Complex{1.0, 0.0}, Complex{-1.0, 0.0}, kOmega, kOmega2};
  std::size_t functions = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t resampled = 0;
  while (functions < 100) {
    const std::size_t m = random_size(rng, 2, 6);
    const BinaryFunction f = random_function(rng, m);
    std::size_t local_checks = 0;
    std::size_t local_failures = 0;
    try {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          for (const Complex& a : mus) {
            for (const Complex& b : mus) {
              ++local_checks;
              if (!minors_commute_check(f, {i, a}, {j, b}, 1e-9)) ++local_failures;
            }
          }
        }
      }
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NormalizationError) throw;
      ++resampled;
      continue;
    }
    ++functions;
    checks += local_checks;
    failures += local_failures;
  }
  return make_result(5, "minors", "minor commutativity", failures == 0,
                     cat(functions, " functions, ", checks, " ordered pairs, failures ", failures, ", resampled ",
                         resampled));
}

// ---------------------------------------------------------------- degeneracy

inline CriterionResult degeneracy_matroids(std::uint64_t) {
  std::size_t spaces = 0;
  std::size_t mismatches = 0;
  std::size_t degenerate = 0;
  for (std::size_t cols = 1; cols <= 5; ++cols) {
    std::set<std::vector<std::uint64_t>> seen;
    for (std::size_t rows = 1; rows <= 4; ++rows) {
      const std::size_t entries = rows * cols;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << entries); ++bits) {
        gf2::Matrix n{cols, {}};
        for (std::size_t r = 0; r < rows; ++r) n.rows.push_back((bits >> (r * cols)) & ((std::uint64_t{1} << cols) - 1));
        if (!seen.insert(gf2::span_of(n.rows)).second) continue;
        ++spaces;
        const BinaryFunction f = rowspace_indicator(n);
        for (std::size_t i = 0; i < cols; ++i) {
          const bool expected = oracle::is_loop(n.rows, cols, i) || oracle::is_coloop(n.rows, cols, i);
          const bool got = is_degenerate(f, i);
          degenerate += got ? 1 : 0;
          if (got != expected) ++mismatches;
        }
      }
    }
  }
  return make_result(6, "degeneracy", "degeneracy matches loops and coloops", mismatches == 0,
                     cat(spaces, " distinct rowspaces, ", degenerate, " degenerate elements, mismatches ",
                         mismatches));
}

inline CriterionResult degeneracy_mu_independence(std::uint64_t seed) {
  Rng rng(seed * 1000 + 7);
  std::size_t functions = 0;
  std::size_t mismatches = 0;
  std::size_t degenerate = 0;
  std::size_t elements = 0;
  auto distinct_pair = [&]() {
    Complex a = random_mu(rng);
    Complex b = random_mu(rng);
    while (std::abs(a - b) < 0.1) b = random_mu(rng);
    return std::pair{a, b};
  };
  auto minors_agree = [](const BinaryFunction& f, std::size_t i, Complex a, Complex b) {
    const BinaryFunction x = take_minor(f, {i, a});
    const BinaryFunction y = take_minor(f, {i, b});
    const double scale = std::max({1.0, x.raw().max_abs(), y.raw().max_abs()});
    return max_abs_diff(x, y) <= 1e-8 * scale;
  };
  while (functions < 100) {
    const std::size_t m = random_size(rng, 1, 5);
    std::vector<bool> planted(m);
    for (std::size_t i = 0; i < m; ++i) planted[i] = std::bernoulli_distribution(0.5)(rng);
    const BinaryFunction f = planted_function(rng, planted);
    std::size_t local_mismatch = 0;
    std::size_t local_degenerate = 0;
    try {
      for (std::size_t i = 0; i < m; ++i) {
        const auto [a, b] = distinct_pair();
        const auto [c, d] = distinct_pair();
        const bool first = minors_agree(f, i, a, b);
        const bool second = minors_agree(f, i, c, d);
        const bool product_form = is_degenerate(f, i);
        if (first != second || first != product_form || (planted[i] && !first)) ++local_mismatch;
        local_degenerate += first ? 1 : 0;
      }
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NormalizationError) throw;
      continue;
    }
    ++functions;
    elements += m;
    mismatches += local_mismatch;
    degenerate += local_degenerate;
  }
  return make_result(7, "degeneracy", "degeneracy is independent of the minor pair", mismatches == 0,
                     cat(functions, " functions, ", elements, " elements (", degenerate,
                         " degenerate), mismatches ", mismatches));
}

// -------------------------------------------------------------------- claims

inline CriterionResult ultraloop_eigenvector(std::uint64_t) {
  const MuMatrix m = m_matrix(kOmega);
  const Complex u{kUltraloopValue, 0.0};
  const auto image = m.apply(Complex{1.0, 0.0}, u);
  const double err = std::max(std::abs(image[0] - 1.0), std::abs(image[1] - u));
  const BinaryFunction solved = claim1_solve();
  const double solve_err = std::abs(solved[1] - u);
  const auto eig = m_matrix_eigenvalues(kOmega);
  const double eig_err = std::min(std::abs(eig[0] - 1.0) + std::abs(eig[1] - kOmega),
                                  std::abs(eig[1] - 1.0) + std::abs(eig[0] - kOmega));
  return make_result(8, "claims", "M(w) fixes (1, sqrt2-1)", err <= 1e-12 && solve_err <= 1e-12 && eig_err <= 1e-12,
                     cat("|M(w)x - x| = ", err, ", solved eigenvector error ", solve_err,
                         ", eigenvalue {1, w} error ", eig_err));
}

inline CriterionResult claim3(std::uint64_t) {
  const Claim3Result one = claim3_check(1);
  const Claim3Result two = claim3_check(2);
  return make_result(14, "claims", "maps whose reductions are all kC1", one.holds() && two.holds(),
                     cat("k=1: ", one.qualifying.size(), "/", one.catalog_size, " qualify; k=2: ",
                         two.qualifying.size(), "/", two.catalog_size, " qualify (3C1 only: ",
                         two.holds() ? "yes" : "no", ")"));
}

inline CriterionResult claim2(std::uint64_t seed) {
  Rng rng(seed * 1000 + 15);
  bool ok = true;
  std::string detail;
  for (std::size_t k = 1; k <= 3; ++k) {
    const Complex s1 = random_mu(rng);
    Complex s2 = random_mu(rng);
    while (std::abs(lambda(s1) - lambda(s2)) < 1e-3) s2 = random_mu(rng);
    const Claim2Analysis a = claim2_analysis(k, s1, s2);
    const bool pass = a.unique() && a.residual <= 1e-9 && a.deviation <= 1e-9 && a.route_determined &&
                      a.route_residual <= 1e-9 && std::abs(a.free_entry - kUltraloopValue) <= 1e-9;
    ok = ok && pass;
    detail += cat(detail.empty() ? "" : "; ", "k=", k, " rank ", a.rank_all, "/", a.unknowns, " residual ",
                  a.residual, " deviation ", a.deviation, " two-suffice ", a.two_suffice() ? "yes" : "no",
                  " one-mu rank ", a.rank_one);
  }
  return make_result(15, "claims", "unique function with all minors F(C1)^k", ok, detail);
}

// -------------------------------------------------------------------- dimaps

inline CriterionResult enumeration_counts(std::uint64_t) {
  const std::size_t c0 = enumerate_dimaps(0).size();
  const std::size_t c1 = enumerate_dimaps(1).size();
  const std::size_t c2 = enumerate_dimaps(2).size();
  return make_result(9, "dimaps", "enumeration counts", c0 == 1 && c1 == 1 && c2 == 4,
                     cat("k=0: ", c0, ", k=1: ", c1, ", k=2: ", c2));
}

inline CriterionResult self_trial_two_edges(std::uint64_t) {
  const auto members = self_trial_members(enumerate_dimaps(2));
  const bool ok = members.size() == 1 && isomorphic(members.front(), ultraloops(2));
  return make_result(10, "dimaps", "2C1 is the only self-trial two-edge map", ok,
                     cat(members.size(), " self-trial member(s)"));
}

inline AlternatingDimap random_dimap(Rng& rng, std::size_t k) {
  EdgePermutations p;
  p.left.resize(k);
  p.right.resize(k);
  std::iota(p.left.begin(), p.left.end(), 0);
  std::iota(p.right.begin(), p.right.end(), 0);
  std::shuffle(p.left.begin(), p.left.end(), rng);
  std::shuffle(p.right.begin(), p.right.end(), rng);
  for (std::size_t i = 0; i < k; ++i) p.labels.push_back("x" + std::to_string(i));
  std::shuffle(p.labels.begin(), p.labels.end(), rng);
  return AlternatingDimap::from_permutations(p);
}

inline CriterionResult trial_cubed(std::uint64_t seed) {
  std::size_t maps = 0;
  std::size_t failures = 0;
  for (std::size_t k = 0; k <= 3; ++k) {
    for (const auto& g : enumerate_dimaps(k).maps) {
      ++maps;
      if (!labeled_equal(trial_power(g, 3), g) || !validate(trial(g).map).empty()) ++failures;
    }
  }
  Rng rng(seed * 1000 + 11);
  for (int i = 0; i < 100; ++i) {
    const AlternatingDimap g = random_dimap(rng, 4);
    ++maps;
    if (!labeled_equal(trial(trial(trial(g).map).map).map, g)) ++failures;
  }
  return make_result(11, "dimaps", "trial applied three times is the identity", failures == 0,
                     cat(maps, " maps, failures ", failures));
}

inline CriterionResult trial_minor_identity(std::uint64_t) {
  std::size_t checks = 0;
  std::size_t failures = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (const auto& g : enumerate_dimaps(k).maps) {
      for (const auto& label : g.labels()) {
        for (auto mu : ReductionKind::all()) {
          for (auto nu : ReductionKind::all()) {
            ++checks;
            if (!trial_minor_check(g, label, mu, nu)) ++failures;
          }
        }
      }
    }
  }
  return make_result(12, "dimaps", "triality-minor identity", failures == 0,
                     cat(checks, " (G, e, mu, nu) cases, failures ", failures));
}

inline CriterionResult triloop_equivalence(std::uint64_t) {
  std::size_t edges = 0;
  std::size_t triloops = 0;
  std::size_t mismatches = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (const auto& g : enumerate_dimaps(k).maps) {
      for (const auto& label : g.labels()) {
        ++edges;
        const bool flag = classify_edge(g, label).is_triloop;
        triloops += flag ? 1 : 0;
        if (flag != is_degenerate_edge(g, label)) ++mismatches;
      }
    }
  }
  return make_result(13, "dimaps", "triloops are exactly the degenerate edges", mismatches == 0,
                     cat(edges, " edges, ", triloops, " triloops, mismatches ", mismatches));
}

inline CriterionResult noncommuting_witness(std::uint64_t) {
  for (std::size_t k = 2; k <= 4; ++k) {
    const Catalog catalog = enumerate_dimaps(k);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      if (const auto w = find_noncommuting_pair(catalog.maps[i])) {
        return make_result(17, "dimaps", "non-commuting reduction pair exists", true,
                           cat("found at k=", k, ", map ", catalog.forms[i].str(), ": (", w->first_edge, ",",
                               w->first_kind.name(), ") vs (", w->second_edge, ",", w->second_kind.name(), ")"));
      }
    }
  }
  return {17, "dimaps", "non-commuting reduction pair exists", Status::Warn, "NOT-FOUND-AT-CAP k<=4"};
}

// -------------------------------------------------------------- main theorem

inline CriterionResult main_theorem(std::uint64_t seed) {
  Rng rng(seed * 1000 + 16);
  std::vector<Complex> nus{Complex{1.0, 0.0}};
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < 10; ++i) nus.push_back(std::polar(1.0, angle(rng)));
  const MainTheoremReport report = main_theorem_check(5, nus);
  std::size_t uk_failures = 0;
  for (const auto& [k, r] : report.uk_reports) uk_failures += r.passed() ? 0 : 1;
  std::size_t obstructions = 0;
  for (const auto& w : report.witnesses) obstructions += w.is_obstruction() ? 1 : 0;
  return make_result(16, "main-theorem", "U_k representable, other two-edge maps obstructed", report.passed(),
                     cat(report.uk_reports.size(), " U_k checks (k<=5, ", nus.size(), " phases), failures ",
                         uk_failures, "; obstruction witnesses ", obstructions, "/", report.witnesses.size(),
                         "; empty class ", report.empty_class_passes ? "passes" : "fails"));
}

// -------------------------------------------------------------------- suites

using CriterionFn = std::function<CriterionResult(std::uint64_t)>;

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"transforms", "minors", "degeneracy", "dimaps", "claims",
                                              "main-theorem"};
  return names;
}

inline std::vector<CriterionFn> suite(const std::string& name) {
  if (name == "transforms") return {transform_composition, fast_vs_dense, hadamard_duality};
  if (name == "minors") return {transform_minor_interchange, minor_commutativity};
  if (name == "degeneracy") return {degeneracy_matroids, degeneracy_mu_independence};
  if (name == "dimaps") {
    return {enumeration_counts, self_trial_two_edges, trial_cubed, trial_minor_identity, triloop_equivalence,
            noncommuting_witness};
  }
  if (name == "claims") return {ultraloop_eigenvector, claim3, claim2};
  if (name == "main-theorem") return {main_theorem};
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

/// Every criterion, ordered by id.
inline std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (const auto& name : suite_names()) {
    for (const auto& fn : suite(name)) out.push_back(fn(seed));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

}  // namespace trialab::suites
