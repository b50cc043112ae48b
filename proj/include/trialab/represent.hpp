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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trialab/altmap.hpp"
#include "trialab/binfun.hpp"
#include "trialab/enumerate.hpp"
#include "trialab/error.hpp"
#include "trialab/minor.hpp"
#include "trialab/reduce.hpp"
#include "trialab/transform.hpp"

namespace trialab {

/// A proposed representation (F, eps, nu) of a class of dimaps.
/// epsilon[g][e] is the ground-set element of images[g] assigned to edge e
/// (by edge index) of members[g].
struct RepresentationCandidate {
  std::vector<AlternatingDimap> members;
  std::vector<BinaryFunction> images;
  std::vector<std::vector<std::size_t>> epsilon;
  Complex nu{1.0, 0.0};
};

struct ConditionResult {
  bool pass = true;
  std::string witness;

  void fail(std::string why) {
    if (pass) witness = std::move(why);
    pass = false;
  }
};

/// Conditions (a) totality, (b) bijections, (c) |nu| = 1, (d) trial vs the
/// w-transform, (e) reductions vs minors.
struct CheckReport {
  ConditionResult totality;
  ConditionResult bijections;
  ConditionResult unit_phase;
  ConditionResult triality;
  ConditionResult minors;
  std::size_t comparisons = 0;

  bool passed() const {
    return totality.pass && bijections.pass && unit_phase.pass && triality.pass && minors.pass;
  }
};

namespace detail {

/// P[x] = source[y], where element j of x corresponds to element
/// element_map[j] of y.
inline RawVector pull_back(const RawVector& source, const std::vector<std::size_t>& element_map) {
  const std::size_t m = element_map.size();
  std::vector<Complex> out(std::size_t{1} << m);
  for (std::size_t x = 0; x < out.size(); ++x) {
    std::size_t y = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (x & element_bit(m, j)) y |= element_bit(m, element_map[j]);
    }
    out[x] = source[y];
  }
  return RawVector(m, std::move(out));
}

inline std::vector<std::size_t> inverse_map(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = i;
  return out;
}

/// Does some isomorphism phi: h_like -> member carry F(member) onto `target`?
/// `element_edge[j]` is the edge of h_like matching element j of `target`.
inline bool matches_some_isomorphism(const AlternatingDimap& h_like, const AlternatingDimap& member,
                                     const BinaryFunction& member_image,
                                     const std::vector<std::size_t>& member_epsilon,
                                     const std::vector<std::size_t>& element_edge, const RawVector& target,
                                     double tol) {
  for (const auto& phi : isomorphisms(h_like, member)) {
    std::vector<std::size_t> element_map(element_edge.size());
    for (std::size_t j = 0; j < element_edge.size(); ++j) element_map[j] = member_epsilon[phi[element_edge[j]]];
    if (proportional(target, pull_back(member_image, element_map), tol)) return true;
  }
  return false;
}

}  // namespace detail

inline CheckReport check_representation(const RepresentationCandidate& c, double tol = kDefaultTol) {
  CheckReport report;
  const std::size_t n = c.members.size();
  if (c.images.size() != n || c.epsilon.size() != n) {
    report.totality.fail("F or eps is not defined on every member");
    report.bijections.fail("not evaluated");
    report.triality.fail("not evaluated");
    report.minors.fail("not evaluated");
  }
  if (std::abs(std::abs(c.nu) - 1.0) > tol) report.unit_phase.fail("|nu| = " + std::to_string(std::abs(c.nu)));
  if (!report.totality.pass) return report;

  std::map<CanonicalForm, std::size_t> index;
  for (std::size_t g = 0; g < n; ++g) index.emplace(canonical_form(c.members[g]), g);

  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t edges = c.members[g].num_edges();
    if (c.images[g].m() != edges || c.epsilon[g].size() != edges) {
      report.bijections.fail("member " + std::to_string(g) + ": edge count, dimension and eps size differ");
      continue;
    }
    std::vector<bool> hit(edges, false);
    for (std::size_t element : c.epsilon[g]) {
      if (element >= edges || hit[element]) {
        report.bijections.fail("member " + std::to_string(g) + ": eps is not a bijection");
        break;
      }
      hit[element] = true;
    }
  }
  if (!report.bijections.pass) {
    report.triality.fail("not evaluated");
    report.minors.fail("not evaluated");
    return report;
  }

  for (std::size_t g = 0; g < n; ++g) {
    const AlternatingDimap& G = c.members[g];
    const auto edge_of_element = detail::inverse_map(c.epsilon[g]);
    for (const auto& mu : ReductionKind::all()) {
      for (std::size_t e = 0; e < G.num_edges(); ++e) {
        const AlternatingDimap reduced = reduce(G, e, mu);
        const auto found = index.find(canonical_form(reduced));
        if (found == index.end()) {
          throw Error(ErrorKind::NotMinorClosed, "reducing edge '" + G.labels()[e] + "' of member " +
                                                     std::to_string(g) + " with " + mu.name() + " leaves the class");
        }
      }
    }

    // (d)
    const TrialResult tr = trial(G);
    const auto h = index.find(canonical_form(tr.map));
    if (h == index.end()) {
      report.triality.fail("trial of member " + std::to_string(g) + " is not in the class");
    } else {
      const RawVector target = transform(c.images[g], kOmega);
      std::vector<std::size_t> element_edge(G.num_edges());
      for (std::size_t j = 0; j < element_edge.size(); ++j) {
        element_edge[j] = tr.map.edge_index(tr.edge_image.at(G.labels()[edge_of_element[j]]));
      }
      ++report.comparisons;
      if (!detail::matches_some_isomorphism(tr.map, c.members[h->second], c.images[h->second],
                                            c.epsilon[h->second], element_edge, target, tol)) {
        report.triality.fail("F(G^w) is not proportional to L^[w] F(G) for member " + std::to_string(g));
      }
    }

    // (e)
    for (std::size_t e = 0; e < G.num_edges(); ++e) {
      for (const auto& mu : ReductionKind::all()) {
        const AlternatingDimap reduced = reduce(G, e, mu);
        const std::size_t target_member = index.at(canonical_form(reduced));
        const std::size_t removed = c.epsilon[g][e];
        const BinaryFunction target = take_minor(c.images[g], {removed, c.nu * mu.value()}, tol);
        std::vector<std::size_t> element_edge;
        for (std::size_t j = 0; j < G.num_edges(); ++j) {
          if (j == removed) continue;
          element_edge.push_back(reduced.edge_index(G.labels()[edge_of_element[j]]));
        }
        ++report.comparisons;
        if (!detail::matches_some_isomorphism(reduced, c.members[target_member], c.images[target_member],
                                              c.epsilon[target_member], element_edge, target, tol)) {
          report.minors.fail("member " + std::to_string(g) + ", edge '" + G.labels()[e] + "', mu = " + mu.name());
        }
      }
    }
  }
  return report;
}

/// The class {iC_1 : 0 <= i <= k} with F(iC_1) = (1, sqrt2 - 1)^{(x) i},
/// identity eps and nu = 1.
inline RepresentationCandidate canonical_Uk(std::size_t k) {
  RepresentationCandidate c;
  for (std::size_t i = 0; i <= k; ++i) {
    c.members.push_back(ultraloops(i));
    c.images.push_back(tensor_power(ultraloop_function(), i));
    std::vector<std::size_t> identity(i);
    std::iota(identity.begin(), identity.end(), 0);
    c.epsilon.push_back(std::move(identity));
  }
  return c;
}

/// Unit phases nu (from `samples` equally spaced ones) for which the
/// candidate passes every condition. Separates "wrong nu" from
/// "not representable".
inline std::vector<Complex> search_nu(RepresentationCandidate c, std::size_t samples = 720,
                                      double tol = kDefaultTol) {
  std::vector<Complex> out;
  for (std::size_t s = 0; s < samples; ++s) {
    c.nu = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(samples));
    try {
      if (check_representation(c, tol).passed()) out.push_back(c.nu);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NormalizationError) throw;
    }
  }
  return out;
}

/// The eigenvalue-1 eigenvector of M(w), scaled to first entry 1.
inline BinaryFunction claim1_solve() {
  const MuMatrix m = m_matrix(kOmega);
  const Complex second = (Complex{1.0, 0.0} - m.entries[0][0]) / m.entries[0][1];
  return BinaryFunction::make(1, {Complex{1.0, 0.0}, second});
}

/// Outcome of solving "every minor of f equals F(C_1)^{(x) k}" for f.
struct Claim2Analysis {
  std::size_t k = 0;
  std::size_t unknowns = 0;
  /// Rank of the full system (all mu values), and with only the two
  /// sampled values, and with only one of them.
  std::size_t rank_all = 0;
  std::size_t rank_two = 0;
  std::size_t rank_one = 0;
  double residual = 0.0;
  /// max |f - F(C_1)^{(x)(k+1)}| for the full-system solution.
  double deviation = 0.0;
  /// Second route: fix e_0 through the product form, solve for the single
  /// free entry t = f({e_0}), check the other elements.
  Complex free_entry{};
  double route_residual = 0.0;
  bool route_determined = false;

  bool unique() const { return rank_all == unknowns; }
  bool two_suffice() const { return rank_two == unknowns; }
};

namespace detail {

/// Rows: f_{G:i<-0} + lambda f_{G:i<-1} - u_G (f_{0:i<-0} + lambda f_{0:i<-1}) = 0
/// for every i, G and mu, plus f_0 = 1.
inline void minor_system(std::size_t k, const BinaryFunction& u, const std::vector<Complex>& mus,
                         Eigen::MatrixXcd& a, Eigen::VectorXcd& b) {
  const std::size_t n = std::size_t{1} << (k + 1);
  const std::size_t rows = 1 + mus.size() * (k + 1) * u.size();
  a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(n));
  b = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(rows));
  a(0, 0) = 1.0;
  b(0) = 1.0;
  Eigen::Index row = 1;
  for (const Complex& mu : mus) {
    const Complex w = lambda(mu);
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t g = 0; g < u.size(); ++g, ++row) {
        a(row, static_cast<Eigen::Index>(insert_bit_index(g, k, i, 0))) += 1.0;
        a(row, static_cast<Eigen::Index>(insert_bit_index(g, k, i, 1))) += w;
        a(row, static_cast<Eigen::Index>(insert_bit_index(0, k, i, 0))) -= u[g];
        a(row, static_cast<Eigen::Index>(insert_bit_index(0, k, i, 1))) -= u[g] * w;
      }
    }
  }
}

inline std::size_t system_rank(std::size_t k, const BinaryFunction& u, const std::vector<Complex>& mus) {
  Eigen::MatrixXcd a;
  Eigen::VectorXcd b;
  minor_system(k, u, mus, a, b);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(a);
  lu.setThreshold(1e-10);
  return static_cast<std::size_t>(lu.rank());
}

}  // namespace detail

inline Claim2Analysis claim2_analysis(std::size_t k, Complex sample1, Complex sample2) {
  if (k < 1 || k > 8) throw Error(ErrorKind::CapExceeded, "claim2_analysis supports 1 <= k <= 8");
  const BinaryFunction u = tensor_power(ultraloop_function(), k);
  const BinaryFunction expected = tensor_power(ultraloop_function(), k + 1);
  const std::vector<Complex> all{sample1, sample2, Complex{1.0, 0.0}, kOmega, kOmega2};

  Claim2Analysis out;
  out.k = k;
  out.unknowns = std::size_t{1} << (k + 1);
  Eigen::MatrixXcd a;
  Eigen::VectorXcd b;
  detail::minor_system(k, u, all, a, b);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(a);
  lu.setThreshold(1e-10);
  out.rank_all = static_cast<std::size_t>(lu.rank());
  const Eigen::VectorXcd x = a.colPivHouseholderQr().solve(b);
  out.residual = (a * x - b).cwiseAbs().maxCoeff();
  for (std::size_t j = 0; j < out.unknowns; ++j) {
    out.deviation = std::max(out.deviation, std::abs(x(static_cast<Eigen::Index>(j)) - expected[j]));
  }
  out.rank_two = detail::system_rank(k, u, {sample1, sample2});
  out.rank_one = detail::system_rank(k, u, {sample1});

  // f_x = (t if e_0 in x else 1) * u_{x without e_0}; every remaining
  // product-form constraint is alpha + beta t = 0.
  const std::size_t half = u.size();
  auto entry = [&](std::size_t x) -> std::pair<Complex, Complex> {
    return (x >= half) ? std::pair{Complex{}, u[x - half]} : std::pair{u[x], Complex{}};
  };
  std::vector<std::pair<Complex, Complex>> constraints;
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t g = 0; g < half; ++g) {
      for (std::size_t bit = 0; bit < 2; ++bit) {
        const auto lhs = entry(insert_bit_index(g, k, i, bit));
        const auto base = entry(insert_bit_index(0, k, i, bit));
        constraints.emplace_back(lhs.first - base.first * u[g], lhs.second - base.second * u[g]);
      }
    }
  }
  Complex num{};
  double den = 0.0;
  for (const auto& [alpha, beta] : constraints) {
    num -= std::conj(beta) * alpha;
    den += std::norm(beta);
  }
  out.route_determined = den > 1e-12;
  if (out.route_determined) {
    out.free_entry = num / den;
    for (const auto& [alpha, beta] : constraints) {
      out.route_residual = std::max(out.route_residual, std::abs(alpha + beta * out.free_entry));
    }
  }
  return out;
}

/// Every minor of f equal to F(C_1)^{(x) k} forces f = F(C_1)^{(x)(k+1)}.
inline bool claim2_check(std::size_t k, double tol = kDefaultTol, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  Complex s1{coord(rng), coord(rng)};
  Complex s2{coord(rng), coord(rng)};
  while (is_minor_pole(s1) || is_minor_pole(s2) || std::abs(lambda(s1) - lambda(s2)) < 1e-3) {
    s2 = Complex{coord(rng), coord(rng)};
  }
  const Claim2Analysis a = claim2_analysis(k, s1, s2);
  return a.unique() && a.residual <= tol && a.deviation <= tol && a.route_determined && a.route_residual <= tol &&
         std::abs(a.free_entry - kUltraloopValue) <= tol;
}

/// Members of the (k+1)-edge catalog all of whose reductions are kC_1.
struct Claim3Result {
  std::size_t k = 0;
  std::size_t catalog_size = 0;
  std::vector<std::size_t> qualifying;
  std::optional<std::size_t> ultraloop_index;

  bool holds() const {
    if (k == 1) return qualifying.size() == catalog_size;
    return ultraloop_index && qualifying == std::vector<std::size_t>{*ultraloop_index};
  }
};

inline bool all_reductions_are(const AlternatingDimap& g, const CanonicalForm& target) {
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    for (const auto& mu : ReductionKind::all()) {
      if (canonical_form(reduce(g, e, mu)) != target) return false;
    }
  }
  return true;
}

inline Claim3Result claim3_check(std::size_t k, std::size_t cap = kDefaultEnumerationCap) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "claim3_check needs k >= 1");
  const Catalog catalog = enumerate_dimaps(k + 1, cap);
  const CanonicalForm target = canonical_form(ultraloops(k));
  Claim3Result out;
  out.k = k;
  out.catalog_size = catalog.size();
  out.ultraloop_index = catalog.find(ultraloops(k + 1));
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (all_reductions_are(catalog.maps[i], target)) out.qualifying.push_back(i);
  }
  return out;
}

/// A two-edge map other than 2C_1 whose forced image is self-trial while the
/// map is not. This rules the map out only if F must separate
/// non-isomorphic maps; the conditions checked by check_representation
/// alone do not demand that.
struct ObstructionWitness {
  AlternatingDimap map;
  bool all_reductions_ultraloop = false;
  /// The function forced by the two-element minor system.
  BinaryFunction forced;
  bool forced_self_trial = false;
  bool map_self_trial = false;

  bool is_obstruction() const { return all_reductions_ultraloop && forced_self_trial && !map_self_trial; }
};

struct MainTheoremReport {
  std::vector<std::pair<std::size_t, CheckReport>> uk_reports;
  std::vector<ObstructionWitness> witnesses;
  bool empty_class_passes = false;

  bool passed() const {
    for (const auto& [k, r] : uk_reports) {
      if (!r.passed()) return false;
    }
    for (const auto& w : witnesses) {
      if (!w.is_obstruction()) return false;
    }
    return empty_class_passes && witnesses.size() == 3;
  }
};

inline MainTheoremReport main_theorem_check(std::size_t kmax, const std::vector<Complex>& nus = {Complex{1.0, 0.0}},
                                            double tol = kDefaultTol) {
  if (kmax > 5) throw Error(ErrorKind::CapExceeded, "main theorem check supports kmax <= 5");
  MainTheoremReport out;
  out.empty_class_passes = check_representation(RepresentationCandidate{}, tol).passed();
  for (std::size_t k = 0; k <= kmax; ++k) {
    for (const Complex& nu : nus) {
      RepresentationCandidate c = canonical_Uk(k);
      c.nu = nu;
      out.uk_reports.emplace_back(k, check_representation(c, tol));
    }
  }

  // The forced image of a two-edge map is the unique solution of its minor
  // system, recovered here by least squares.
  const BinaryFunction u = ultraloop_function();
  Eigen::MatrixXcd a;
  Eigen::VectorXcd b;
  detail::minor_system(1, u, {Complex{1.0, 0.0}, kOmega, kOmega2}, a, b);
  const Eigen::VectorXcd x = a.colPivHouseholderQr().solve(b);
  std::vector<Complex> values(x.data(), x.data() + x.size());
  const BinaryFunction forced = BinaryFunction::make(2, values, 1e-9);

  const Catalog two = enumerate_dimaps(2);
  const CanonicalForm c1 = canonical_form(ultraloops(1));
  for (std::size_t i = 0; i < two.size(); ++i) {
    if (isomorphic(two.maps[i], ultraloops(2))) continue;
    ObstructionWitness w{two.maps[i], all_reductions_are(two.maps[i], c1), forced, self_trial(forced, tol),
                         two.entries[i].self_trial};
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

}  // namespace trialab
