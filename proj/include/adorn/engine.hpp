#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adorn/coset_table.hpp"
#include "adorn/errors.hpp"
#include "adorn/finite_group.hpp"
#include "adorn/presentation.hpp"
#include "adorn/rewriting.hpp"
#include "adorn/smith.hpp"
#include "adorn/tietze.hpp"
#include "adorn/verdict.hpp"
#include "adorn/word.hpp"

namespace adorn {

struct EngineBudgets {
  std::size_t max_depth = 8;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t tietze_passes = 50;
};

/// One descent of the derived series: the abelianization of P, and — when
/// it is finite — a simplified presentation of the commutator subgroup.
struct QuotientStep {
  AbelianGroupData abelianization;
  std::optional<Presentation> commutator_subgroup;
};

inline QuotientStep derived_quotient_step(const Presentation& p,
                                          std::size_t max_cosets = kDefaultMaxCosets,
                                          std::size_t tietze_passes = 50) {
  QuotientStep step;
  step.abelianization = abelian_invariants(relation_matrix(p));
  if (!is_finite(step.abelianization)) return step;
  CosetTable table = coset_table_from_abelianization(p, max_cosets);
  step.commutator_subgroup = reidemeister_schreier(table, tietze_passes);
  return step;
}

struct ExploreResult {
  std::vector<DerivedStep> trace;
  Verdict verdict;
};

/// Iterates abelianization + rewriting down the derived series of the
/// presented group. Stops Adorable at the first trivial abelianization.
/// Budgets and infinite abelianizations produce Unknown, never errors; the
/// only NotAdorable sources are the free-group detector here and the
/// Alexander polynomial elsewhere.
inline ExploreResult explore_derived_series(const Presentation& p,
                                            const EngineBudgets& budgets = {}) {
  ExploreResult result;
  Presentation current = tietze_simplify(p, budgets.tietze_passes);

  for (std::size_t depth = 0;; ++depth) {
    if (current.relators().empty() && current.generator_count() >= 2) {
      result.verdict = NotAdorable{
          NotAdorableReason::NonabelianFree,
          "free of rank " + std::to_string(current.generator_count()) + " at depth " +
              std::to_string(depth)};
      return result;
    }

    AbelianGroupData quotient = abelian_invariants(relation_matrix(current));

    if (is_trivial(quotient)) {
      result.trace.push_back(
          {static_cast<int>(depth), current, quotient, Int(1)});
      result.verdict = Adorable{static_cast<int>(depth), result.trace,
                                "derived series reaches a perfect stage"};
      return result;
    }
    if (!is_finite(quotient)) {
      result.verdict = Unknown{static_cast<int>(depth), StallReason::InfiniteAbelianization};
      return result;
    }
    Int index = order(quotient);
    if (index > budgets.max_cosets) {
      result.verdict = Unknown{static_cast<int>(depth), StallReason::SizeBudget};
      return result;
    }
    if (depth >= budgets.max_depth) {
      result.verdict = Unknown{static_cast<int>(depth), StallReason::DepthBudget};
      return result;
    }

    CosetTable table = coset_table_from_abelianization(current, budgets.max_cosets);
    result.trace.push_back({static_cast<int>(depth), current, quotient, index});
    current = reidemeister_schreier(table, budgets.tietze_passes);
  }
}

/// Verifies an abelian filtration down to a perfect bottom: each member
/// normal in its predecessor with abelian quotient, last member perfect.
/// The chain starts at G itself. A chain member that is not even a
/// subgroup is an error; a broken link is just `false`.
inline bool check_filtration_certificate(const FiniteGroup& g,
                                         const std::vector<FiniteGroup>& chain,
                                         std::size_t max_order = kDefaultMaxOrder) {
  if (chain.empty())
    throw std::invalid_argument("check_filtration_certificate: empty chain");
  for (const FiniteGroup& member : chain)
    if (!is_subgroup(member, g))
      throw std::invalid_argument("check_filtration_certificate: chain member is not a subgroup");
  if (chain.front().order() != g.order()) return false;

  for (std::size_t i = 1; i < chain.size(); ++i) {
    const FiniteGroup& prev = chain[i - 1];
    const FiniteGroup& next = chain[i];
    if (!is_subgroup(next, prev))
      throw std::invalid_argument("check_filtration_certificate: chain member is not a subgroup");
    if (!is_normal_subgroup(next, prev)) return false;
    if (!is_abelian(quotient(prev, next, max_order))) return false;
  }
  return is_perfect(chain.back(), max_order);
}

/// Seeded random presentation: relators are uniform freely reduced words
/// of length 1..max_len (each next letter avoids cancelling the previous
/// one). Same seed, same presentation.
inline Presentation random_presentation(std::size_t n_gens, std::size_t n_rels,
                                        std::size_t max_len, std::uint64_t seed) {
  if (n_gens == 0 || max_len == 0)
    throw std::invalid_argument("random_presentation: parameters must be positive");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t k) { return static_cast<std::size_t>(rng() % k); };

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n_gens; ++i) names.push_back("x" + std::to_string(i));

  std::vector<Word> rels;
  for (std::size_t r = 0; r < n_rels; ++r) {
    std::size_t len = 1 + pick(max_len);
    Word w;
    std::size_t prev_signed = 2 * n_gens;  // sentinel: nothing to avoid yet
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t s;
      if (prev_signed == 2 * n_gens) {
        s = pick(2 * n_gens);
      } else {
        s = pick(2 * n_gens - 1);
        if (s >= (prev_signed ^ 1)) ++s;  // skip the inverse of the previous letter
      }
      w.append(static_cast<int>(s / 2), (s & 1) ? -1 : 1);
      prev_signed = s;
    }
    rels.push_back(std::move(w));
  }
  return Presentation(std::move(names), std::move(rels));
}

struct ProbeParams {
  std::size_t n_gens = 2;
  std::size_t n_rels = 2;
  std::size_t max_len = 8;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  EngineBudgets budgets;
};

struct ProbeReport {
  std::size_t samples = 0;
  std::map<std::string, std::size_t> verdict_counts;
  std::vector<std::size_t> depth_histogram;  // indexed by depth reached
  Int max_quotient_order = 0;
  std::uint64_t seed = 0;
};

/// Batch driver: explores `count` seeded random presentations and
/// aggregates verdicts, depth reached, and the largest finite quotient
/// seen. Sample i uses seed + i, so reports are deterministic and samples
/// independent.
inline ProbeReport derived_series_probe(const ProbeParams& params) {
  ProbeReport report;
  report.seed = params.seed;
  report.samples = params.count;
  report.depth_histogram.assign(params.budgets.max_depth + 1, 0);

  for (std::size_t i = 0; i < params.count; ++i) {
    Presentation p =
        random_presentation(params.n_gens, params.n_rels, params.max_len, params.seed + i);
    ExploreResult res = explore_derived_series(p, params.budgets);

    std::string key = verdict_kind(res.verdict);
    int depth = 0;
    if (const auto* a = std::get_if<Adorable>(&res.verdict)) {
      depth = a->doa;
    } else if (const auto* u = std::get_if<Unknown>(&res.verdict)) {
      key += "_" + stall_name(u->stall);
      depth = u->depth_reached;
    } else {
      depth = static_cast<int>(res.trace.size());
    }
    ++report.verdict_counts[key];
    if (static_cast<std::size_t>(depth) < report.depth_histogram.size())
      ++report.depth_histogram[static_cast<std::size_t>(depth)];

    for (const DerivedStep& step : res.trace)
      if (is_finite(step.quotient) && order(step.quotient) > report.max_quotient_order)
        report.max_quotient_order = order(step.quotient);
  }
  return report;
}

}  // namespace adorn
