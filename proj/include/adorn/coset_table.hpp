#pragma once

#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "adorn/errors.hpp"
#include "adorn/presentation.hpp"
#include "adorn/smith.hpp"
#include "adorn/word.hpp"

namespace adorn {

inline constexpr std::size_t kDefaultMaxCosets = 100'000;

/// Marks a table whose subgroup is the commutator subgroup (built directly
/// over the abelianization rather than by enumeration).
struct CommutatorSubgroupTag {
  friend bool operator==(const CommutatorSubgroupTag&, const CommutatorSubgroupTag&) {
    return true;
  }
};

/// Complete coset table: the action of each signed generator on the cosets
/// of a subgroup. Coset 0 is the subgroup itself. Completeness, the mutual
/// inverse property of the two columns of each generator, and relator
/// closure are invariants; validate() re-checks them all.
class CosetTable {
public:
  using SubgroupSpec = std::variant<CommutatorSubgroupTag, std::vector<Word>>;

  CosetTable(Presentation base, std::size_t n_cosets, std::vector<std::uint32_t> action,
             SubgroupSpec subgroup)
      : base_(std::move(base)),
        n_(n_cosets),
        action_(std::move(action)),
        subgroup_(std::move(subgroup)) {
    if (n_ == 0) throw std::invalid_argument("CosetTable: no cosets");
    if (action_.size() != n_ * 2 * base_.generator_count())
      throw std::invalid_argument("CosetTable: action shape mismatch");
    validate();
  }

  std::size_t index() const { return n_; }
  const Presentation& base() const { return base_; }
  const SubgroupSpec& subgroup() const { return subgroup_; }

  bool is_commutator_subgroup() const {
    return std::holds_alternative<CommutatorSubgroupTag>(subgroup_);
  }

  /// Image of a coset under one signed generator.
  std::uint32_t act(std::uint32_t coset, int gen, bool inverse) const {
    return action_[coset * 2 * base_.generator_count() + 2 * static_cast<std::size_t>(gen) +
                   (inverse ? 1 : 0)];
  }

  /// Image of a coset under a whole word.
  std::uint32_t trace(std::uint32_t coset, const Word& w) const {
    std::uint32_t c = coset;
    for (const Letter& l : w.letters()) {
      long long reps = l.exp < 0 ? -l.exp : l.exp;
      for (long long i = 0; i < reps; ++i) c = act(c, l.gen, l.exp < 0);
    }
    return c;
  }

  /// Throws std::logic_error if any structural invariant fails.
  void validate() const {
    const std::size_t g = base_.generator_count();
    for (std::uint32_t c = 0; c < n_; ++c)
      for (std::size_t j = 0; j < 2 * g; ++j) {
        std::uint32_t image = action_[c * 2 * g + j];
        if (image >= n_) throw std::logic_error("CosetTable: entry out of range");
      }
    for (std::uint32_t c = 0; c < n_; ++c)
      for (std::size_t j = 0; j < g; ++j) {
        if (act(act(c, static_cast<int>(j), false), static_cast<int>(j), true) != c ||
            act(act(c, static_cast<int>(j), true), static_cast<int>(j), false) != c)
          throw std::logic_error("CosetTable: generator columns are not mutually inverse");
      }
    for (std::uint32_t c = 0; c < n_; ++c)
      for (const Word& r : base_.relators())
        if (trace(c, r) != c)
          throw std::logic_error("CosetTable: relator does not close");
    if (const auto* words = std::get_if<std::vector<Word>>(&subgroup_))
      for (const Word& w : *words)
        if (trace(0, w) != 0)
          throw std::logic_error("CosetTable: subgroup generator leaves coset 0");
  }

private:
  Presentation base_;
  std::size_t n_;
  std::vector<std::uint32_t> action_;  // [coset][2*gen + inverse]
  SubgroupSpec subgroup_;
};

/// Coset table of the commutator subgroup, built directly on the finite
/// abelianization: cosets are the elements of G/G' in Smith coordinates and
/// each generator acts by adding its image vector. No enumeration budget is
/// ever hit on the derived-series hot path this way.
inline CosetTable coset_table_from_abelianization(const Presentation& p,
                                                  std::size_t max_cosets = kDefaultMaxCosets) {
  const std::size_t ngens = p.generator_count();
  IntMatrix m = relation_matrix(p);
  SmithForm s = smith_normal_form(m);
  if (s.diag.size() < ngens)
    throw std::domain_error("coset_table_from_abelianization: abelianization is infinite");

  // Generator j maps to row j of V; coordinates with invariant 1 are trivial
  // and dropped.
  std::vector<Int> moduli;
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < s.diag.size(); ++i)
    if (s.diag[i] > 1) {
      moduli.push_back(s.diag[i]);
      coords.push_back(i);
    }

  Int order = 1;
  for (const Int& d : moduli) order *= d;
  if (order > max_cosets)
    throw BudgetError("coset_table_from_abelianization: abelianization order " + order.str() +
                      " exceeds coset budget");
  const std::size_t n = static_cast<std::size_t>(order);

  std::vector<std::vector<Int>> images(ngens, std::vector<Int>(moduli.size()));
  for (std::size_t j = 0; j < ngens; ++j)
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      Int v = s.right.at(j, coords[i]) % moduli[i];
      if (v < 0) v += moduli[i];
      images[j][i] = v;
    }

  // mixed-radix encoding of tuples
  std::vector<std::size_t> stride(moduli.size());
  std::size_t acc = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    stride[i] = acc;
    acc *= static_cast<std::size_t>(moduli[i]);
  }
  auto shift = [&](std::size_t coset, const std::vector<Int>& delta, bool subtract) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      std::size_t mi = static_cast<std::size_t>(moduli[i]);
      std::size_t digit = (coset / stride[i]) % mi;
      std::size_t d = static_cast<std::size_t>(delta[i]);
      digit = subtract ? (digit + mi - d) % mi : (digit + d) % mi;
      out += digit * stride[i];
    }
    return static_cast<std::uint32_t>(out);
  };

  std::vector<std::uint32_t> action(n * 2 * ngens);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t j = 0; j < ngens; ++j) {
      action[c * 2 * ngens + 2 * j] = shift(c, images[j], false);
      action[c * 2 * ngens + 2 * j + 1] = shift(c, images[j], true);
    }
  return CosetTable(p, n, std::move(action), CommutatorSubgroupTag{});
}

namespace detail {

/// HLT-style Todd-Coxeter working state. Coincidences are processed
/// immediately with a union-find in which the lower-numbered coset always
/// survives, so finished tables are deterministic.
class TcState {
public:
  TcState(const Presentation& p, std::size_t max_cosets)
      : ncols_(2 * p.generator_count()), max_cosets_(max_cosets) {
    for (const Word& r : p.relators())
      if (!r.empty()) relators_.push_back(columns_of(r));
    new_coset();  // coset 0
  }

  static std::vector<int> columns_of(const Word& w) {
    std::vector<int> cols;
    for (const Letter& l : w.expanded())
      cols.push_back(2 * l.gen + (l.exp < 0 ? 1 : 0));
    return cols;
  }

  void run(const std::vector<Word>& subgroup_gens) {
    for (const Word& w : subgroup_gens) {
      if (w.empty()) continue;
      scan_and_fill(0, columns_of(w));
    }
    for (std::uint32_t alpha = 0; alpha < size(); ++alpha) {
      if (dead(alpha)) continue;
      for (const auto& r : relators_) {
        scan_and_fill(alpha, r);
        if (dead(alpha)) break;
      }
      if (dead(alpha)) continue;
      for (std::size_t x = 0; x < ncols_; ++x)
        if (entry(alpha, x) < 0) define(alpha, x);
    }
  }

  /// Live cosets renumbered in increasing order of their old index.
  std::pair<std::size_t, std::vector<std::uint32_t>> compact(std::size_t ngens) const {
    std::vector<std::uint32_t> remap(size(), 0);
    std::size_t live = 0;
    for (std::uint32_t c = 0; c < size(); ++c)
      if (!dead(c)) remap[c] = static_cast<std::uint32_t>(live++);
    std::vector<std::uint32_t> action(live * 2 * ngens);
    for (std::uint32_t c = 0; c < size(); ++c) {
      if (dead(c)) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        int e = entry(c, x);
        if (e < 0) throw std::logic_error("todd_coxeter: incomplete row after closure");
        action[remap[c] * ncols_ + x] = remap[rep(static_cast<std::uint32_t>(e))];
      }
    }
    return {live, std::move(action)};
  }

private:
  std::uint32_t size() const { return static_cast<std::uint32_t>(parent_.size()); }
  bool dead(std::uint32_t c) const { return parent_[c] != c; }

  std::uint32_t rep(std::uint32_t c) const {
    while (parent_[c] != c) c = parent_[c];
    return c;
  }

  int entry(std::uint32_t c, std::size_t x) const { return table_[c * ncols_ + x]; }
  void set(std::uint32_t c, std::size_t x, std::uint32_t v) {
    table_[c * ncols_ + x] = static_cast<int>(v);
  }
  void unset(std::uint32_t c, std::size_t x) { table_[c * ncols_ + x] = -1; }

  static std::size_t inv(std::size_t x) { return x ^ 1; }

  std::uint32_t new_coset() {
    if (parent_.size() >= max_cosets_)
      throw BudgetError("todd_coxeter: coset budget of " + std::to_string(max_cosets_) +
                        " exhausted (index may be infinite)");
    std::uint32_t c = size();
    parent_.push_back(c);
    table_.resize(table_.size() + ncols_, -1);
    return c;
  }

  std::uint32_t define(std::uint32_t a, std::size_t x) {
    std::uint32_t b = new_coset();
    set(a, x, b);
    set(b, inv(x), a);
    return b;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;  // lower-numbered coset survives
    queue_.push_back(b);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      std::uint32_t dead_coset = queue_.front();
      queue_.pop_front();
      for (std::size_t x = 0; x < ncols_; ++x) {
        int e = entry(dead_coset, x);
        if (e < 0) continue;
        std::uint32_t delta = static_cast<std::uint32_t>(e);
        unset(dead_coset, x);
        unset(delta, inv(x));  // the paired back-reference
        std::uint32_t mu = rep(dead_coset);
        std::uint32_t nu = rep(delta);
        if (entry(mu, x) >= 0)
          merge(nu, static_cast<std::uint32_t>(entry(mu, x)));
        else if (entry(nu, inv(x)) >= 0)
          merge(mu, static_cast<std::uint32_t>(entry(nu, inv(x))));
        else {
          set(mu, x, nu);
          set(nu, inv(x), mu);
        }
      }
    }
  }

  // Scans word w from alpha, defining cosets at the first gap until the
  // scan either closes or forces a coincidence.
  void scan_and_fill(std::uint32_t alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    long long i = 0, j = static_cast<long long>(w.size()) - 1;
    std::uint32_t f = alpha, b = alpha;
    while (true) {
      while (i <= j && entry(f, static_cast<std::size_t>(w[i])) >= 0)
        f = static_cast<std::uint32_t>(entry(f, static_cast<std::size_t>(w[i++])));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inv(static_cast<std::size_t>(w[j]))) >= 0)
        b = static_cast<std::uint32_t>(entry(b, inv(static_cast<std::size_t>(w[j--]))));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        set(f, static_cast<std::size_t>(w[i]), b);
        set(b, inv(static_cast<std::size_t>(w[i])), f);
        return;
      }
      define(f, static_cast<std::size_t>(w[i]));
    }
  }

  std::size_t ncols_;
  std::size_t max_cosets_;
  std::vector<std::vector<int>> relators_;
  std::vector<int> table_;  // flat, -1 = undefined
  std::vector<std::uint32_t> parent_;
  std::deque<std::uint32_t> queue_;
};

}  // namespace detail

/// Coset enumeration over the subgroup generated by the given words.
/// Succeeds exactly when the enumeration completes within the budget; a
/// BudgetError cannot distinguish infinite index from a budget that is
/// merely too small, and says so.
inline CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                               std::size_t max_cosets = kDefaultMaxCosets) {
  if (max_cosets < 1) throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
  for (const Word& w : subgroup_gens)
    if (w.max_generator() >= static_cast<int>(p.generator_count()))
      throw std::invalid_argument("todd_coxeter: subgroup word references undeclared generator");
  detail::TcState state(p, max_cosets);
  state.run(subgroup_gens);
  auto [live, action] = state.compact(p.generator_count());
  return CosetTable(p, live, std::move(action), subgroup_gens);
}

}  // namespace adorn
