#pragma once

#include <string>
#include <variant>
#include <vector>

#include "adorn/ints.hpp"
#include "adorn/presentation.hpp"
#include "adorn/smith.hpp"

namespace adorn {

/// One rung of the derived-series ladder: the presentation of G^i, the
/// abelian quotient G^i/G^(i+1), and the coset index used to descend.
struct DerivedStep {
  int depth = 0;
  Presentation presentation;
  AbelianGroupData quotient;
  Int coset_index = 0;
};

/// The derived series stabilized: doa is the first depth whose abelian
/// quotient is trivial, and the trace ends at that step.
struct Adorable {
  int doa = 0;
  std::vector<DerivedStep> trace;
  std::string certificate;
};

enum class NotAdorableReason {
  NontrivialAlexanderPolynomial,
  NonabelianFree,
};

struct NotAdorable {
  NotAdorableReason reason = NotAdorableReason::NonabelianFree;
  std::string evidence;
};

enum class StallReason {
  InfiniteAbelianization,
  DepthBudget,
  SizeBudget,
};

/// A stall, not a claim: an infinite abelianization or an exhausted budget
/// leaves adorability undecided.
struct Unknown {
  int depth_reached = 0;
  StallReason stall = StallReason::DepthBudget;
};

using Verdict = std::variant<Adorable, NotAdorable, Unknown>;

inline std::string reason_name(NotAdorableReason r) {
  switch (r) {
    case NotAdorableReason::NontrivialAlexanderPolynomial:
      return "nontrivial_alexander_polynomial";
    case NotAdorableReason::NonabelianFree:
      return "nonabelian_free";
  }
  return "?";
}

inline std::string stall_name(StallReason s) {
  switch (s) {
    case StallReason::InfiniteAbelianization:
      return "infinite_abelianization";
    case StallReason::DepthBudget:
      return "depth_budget";
    case StallReason::SizeBudget:
      return "size_budget";
  }
  return "?";
}

inline std::string verdict_kind(const Verdict& v) {
  if (std::holds_alternative<Adorable>(v)) return "adorable";
  if (std::holds_alternative<NotAdorable>(v)) return "not_adorable";
  return "unknown";
}

}  // namespace adorn
