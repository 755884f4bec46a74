#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "adorn/errors.hpp"
#include "adorn/mod_matrix.hpp"
#include "adorn/permutation.hpp"
#include "adorn/word.hpp"

namespace adorn {

/// Enumeration cap for group closures; everything in the catalog fits.
inline constexpr std::size_t kDefaultMaxOrder = 1'000'000;

/// Simplicity testing walks normal closures of all nonidentity elements,
/// so it is only attempted below this order.
inline constexpr std::size_t kSimplicityBudget = 10'000;

namespace detail {

inline Permutation identity_like(const Permutation& p) { return Permutation::identity(p.degree()); }
inline ModMatrix identity_like(const ModMatrix& m) {
  return ModMatrix::identity(m.dimension(), m.modulus());
}

inline bool compatible(const Permutation& a, const Permutation& b) {
  return a.degree() == b.degree();
}
inline bool compatible(const ModMatrix& a, const ModMatrix& b) {
  return a.dimension() == b.dimension() && a.modulus() == b.modulus();
}

/// Closure of a generating set under multiplication, enumerated
/// breadth-first so element indices are reproducible discovery order.
/// Index 0 is always the identity.
template <class E>
class ElementSet {
public:
  ElementSet(std::vector<E> generators, std::size_t max_order)
      : generators_(std::move(generators)) {
    if (generators_.empty())
      throw std::invalid_argument("enumerate: generator list is empty");
    for (const E& g : generators_)
      if (!compatible(g, generators_.front()))
        throw std::invalid_argument("enumerate: generators act on different domains");

    push(identity_like(generators_.front()));
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      E current = elements_[head];
      for (const E& g : generators_) {
        E next = current * g;
        std::string key = next.key();
        if (index_.count(key)) continue;
        if (elements_.size() >= max_order)
          throw BudgetError("enumerate: group order exceeds budget of " +
                            std::to_string(max_order));
        index_.emplace(std::move(key), static_cast<std::uint32_t>(elements_.size()));
        elements_.push_back(std::move(next));
      }
    }
  }

  /// Adopts an already-closed element list (skips re-enumeration).
  ElementSet(std::vector<E> elements, std::unordered_map<std::string, std::uint32_t> index,
             std::vector<E> generators)
      : elements_(std::move(elements)),
        index_(std::move(index)),
        generators_(std::move(generators)) {}

  std::size_t order() const { return elements_.size(); }
  const std::vector<E>& elements() const { return elements_; }
  const std::vector<E>& generators() const { return generators_; }
  const E& element(std::size_t i) const { return elements_[i]; }

  bool contains(const E& e) const { return index_.count(e.key()) != 0; }

  std::size_t index_of(const E& e) const {
    auto it = index_.find(e.key());
    if (it == index_.end())
      throw std::invalid_argument("index_of: element not in group");
    return it->second;
  }

private:
  void push(E e) {
    index_.emplace(e.key(), static_cast<std::uint32_t>(elements_.size()));
    elements_.push_back(std::move(e));
  }

  std::vector<E> elements_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<E> generators_;
};

/// Growable closure: adding a generator extends the element set without
/// re-enumerating what is already there.
template <class E>
class IncrementalClosure {
public:
  IncrementalClosure(E identity, std::size_t max_order) : max_order_(max_order) {
    push(std::move(identity));
  }

  std::size_t size() const { return elems_.size(); }
  const std::vector<E>& elements() const { return elems_; }
  const std::vector<E>& generators() const { return gens_; }
  bool contains(const E& e) const { return idx_.count(e.key()) != 0; }

  /// Hands the closed state over to an ElementSet without re-enumerating.
  ElementSet<E> into_element_set(std::vector<E> generating_set) && {
    return ElementSet<E>(std::move(elems_), std::move(idx_), std::move(generating_set));
  }

  /// Returns false (and does nothing) if e is already in the closure.
  bool add_generator(const E& e) {
    if (contains(e)) return false;
    gens_.push_back(e);
    const std::size_t old = elems_.size();
    for (std::size_t i = 0; i < old; ++i) maybe_push(elems_[i] * e);
    for (std::size_t head = old; head < elems_.size(); ++head) {
      E current = elems_[head];
      for (const E& g : gens_) maybe_push(current * g);
    }
    return true;
  }

private:
  void push(E e) {
    idx_.emplace(e.key(), static_cast<std::uint32_t>(elems_.size()));
    elems_.push_back(std::move(e));
  }

  void maybe_push(E e) {
    std::string key = e.key();
    if (idx_.count(key)) return;
    if (elems_.size() >= max_order_)
      throw BudgetError("closure: order exceeds budget of " + std::to_string(max_order_));
    idx_.emplace(std::move(key), static_cast<std::uint32_t>(elems_.size()));
    elems_.push_back(std::move(e));
  }

  std::vector<E> elems_;
  std::unordered_map<std::string, std::uint32_t> idx_;
  std::vector<E> gens_;
  std::size_t max_order_;
};

/// Rebuilds a closed element list over a small generating set picked
/// greedily in discovery order; each kept generator at least doubles the
/// subgroup, so at most log2 |H| survive.
template <class E>
ElementSet<E> reduce_and_adopt(const std::vector<E>& closed_elements, const E& identity,
                               std::size_t max_order) {
  IncrementalClosure<E> probe(identity, max_order);
  std::vector<E> small;
  for (const E& e : closed_elements) {
    if (probe.contains(e)) continue;
    probe.add_generator(e);
    small.push_back(e);
    if (probe.size() == closed_elements.size()) break;
  }
  if (small.empty()) small.push_back(identity);
  return std::move(probe).into_element_set(std::move(small));
}

template <class E>
ElementSet<E> closure_of(const ElementSet<E>& context, std::vector<E> seed,
                         std::size_t max_order) {
  std::vector<E> gens;
  for (E& e : seed)
    if (!e.is_identity()) gens.push_back(std::move(e));
  if (gens.empty()) gens.push_back(identity_like(context.element(0)));
  return ElementSet<E>(std::move(gens), max_order);
}

/// Smallest normal subgroup of G containing the seed elements. Conjugating
/// the generating set by G's generators is enough: the closure is finite,
/// so an injective self-map of it is onto.
template <class E>
ElementSet<E> normal_closure_impl(const ElementSet<E>& g, std::vector<E> seed,
                                  std::size_t max_order) {
  E identity = identity_like(g.element(0));
  IncrementalClosure<E> ic(identity, max_order);
  for (const E& e : seed) ic.add_generator(e);

  while (true) {
    bool grew = false;
    const std::size_t snapshot = ic.generators().size();
    for (const E& conj : g.generators()) {
      E conj_inv = conj.inverse();
      for (std::size_t i = 0; i < snapshot; ++i) {
        E c = conj * ic.generators()[i] * conj_inv;
        if (ic.add_generator(c)) grew = true;
      }
    }
    if (!grew) break;
  }

  // closure is all of G: keep G's own generators instead of re-reducing
  if (ic.size() == g.order()) return std::move(ic).into_element_set(g.generators());
  return reduce_and_adopt(ic.elements(), identity, max_order);
}

template <class E>
ElementSet<E> derived_subgroup_impl(const ElementSet<E>& g, std::size_t max_order) {
  std::vector<E> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      comms.push_back(gens[i] * gens[j] * gens[i].inverse() * gens[j].inverse());
    }
  return normal_closure_impl(g, std::move(comms), max_order);
}

template <class E>
void check_subgroup(const ElementSet<E>& g, const ElementSet<E>& n) {
  for (const E& e : n.elements())
    if (!g.contains(e))
      throw std::invalid_argument("quotient: N is not a subgroup of G");
}

template <class E>
void check_normal(const ElementSet<E>& g, const ElementSet<E>& n) {
  for (const E& conj : g.generators()) {
    E conj_inv = conj.inverse();
    for (const E& t : n.generators())
      if (!n.contains(conj * t * conj_inv))
        throw std::invalid_argument("quotient: N is not normal in G");
  }
}

/// G/N as a permutation group on the right cosets Ng; N must be normal.
template <class E>
ElementSet<Permutation> quotient_impl(const ElementSet<E>& g, const ElementSet<E>& n,
                                      std::size_t max_order) {
  check_subgroup(g, n);
  check_normal(g, n);

  constexpr std::uint32_t unassigned = UINT32_MAX;
  std::vector<std::uint32_t> coset_of(g.order(), unassigned);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset_of[i] != unassigned) continue;
    const std::uint32_t c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(i);
    for (const E& nn : n.elements())
      coset_of[g.index_of(nn * g.element(i))] = c;
  }

  std::vector<Permutation> qgens;
  for (const E& gen : g.generators()) {
    std::vector<std::uint32_t> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      images[c] = coset_of[g.index_of(g.element(reps[c]) * gen)];
    qgens.emplace_back(std::move(images));
  }
  return ElementSet<Permutation>(std::move(qgens), max_order);
}

/// Right regular action: faithful permutation model on the element list.
template <class E>
ElementSet<Permutation> regular_representation(const ElementSet<E>& g,
                                               std::size_t max_order) {
  std::vector<Permutation> pgens;
  for (const E& gen : g.generators()) {
    std::vector<std::uint32_t> images(g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
      images[i] = static_cast<std::uint32_t>(g.index_of(g.element(i) * gen));
    pgens.emplace_back(std::move(images));
  }
  return ElementSet<Permutation>(std::move(pgens), max_order);
}

}  // namespace detail

/// Concrete finite group: the enumerated closure of permutation or
/// matrix generators. Immutable once built; all queries are pure.
class FiniteGroup {
public:
  enum class Kind { permutation, mod_matrix };

  explicit FiniteGroup(detail::ElementSet<Permutation> s) : set_(std::move(s)) {}
  explicit FiniteGroup(detail::ElementSet<ModMatrix> s) : set_(std::move(s)) {}

  Kind kind() const {
    return std::holds_alternative<detail::ElementSet<Permutation>>(set_)
               ? Kind::permutation
               : Kind::mod_matrix;
  }

  std::size_t order() const {
    return std::visit([](const auto& s) { return s.order(); }, set_);
  }

  std::size_t generator_count() const {
    return std::visit([](const auto& s) { return s.generators().size(); }, set_);
  }

  /// Canonical byte key of element i (discovery order).
  std::string element_key(std::size_t i) const {
    return std::visit([&](const auto& s) { return s.element(i).key(); }, set_);
  }

  std::string element_text(std::size_t i) const {
    return std::visit(
        [&](const auto& s) -> std::string {
          if constexpr (std::is_same_v<std::decay_t<decltype(s.element(i))>, Permutation>)
            return s.element(i).to_cycles();
          else
            return s.element(i).to_string();
        },
        set_);
  }

  std::size_t product_index(std::size_t i, std::size_t j) const {
    return std::visit([&](const auto& s) { return s.index_of(s.element(i) * s.element(j)); },
                      set_);
  }

  std::size_t inverse_index(std::size_t i) const {
    return std::visit([&](const auto& s) { return s.index_of(s.element(i).inverse()); }, set_);
  }

  std::size_t generator_element_index(std::size_t g) const {
    return std::visit([&](const auto& s) { return s.index_of(s.generators()[g]); }, set_);
  }

  /// Evaluates a word in this group's generators; letters index the
  /// generator list.
  std::size_t evaluate_word(const Word& w) const {
    return std::visit(
        [&](const auto& s) {
          auto acc = detail::identity_like(s.element(0));
          for (const Letter& l : w.letters()) {
            if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= s.generators().size())
              throw std::invalid_argument("evaluate_word: generator index out of range");
            auto g = s.generators()[static_cast<std::size_t>(l.gen)];
            if (l.exp < 0) g = g.inverse();
            long long reps = l.exp < 0 ? -l.exp : l.exp;
            for (long long r = 0; r < reps; ++r) acc = acc * g;
          }
          return s.index_of(acc);
        },
        set_);
  }

  bool contains_key(const std::string& key) const {
    return std::visit(
        [&](const auto& s) {
          for (const auto& e : s.elements())
            if (e.key() == key) return true;
          return false;
        },
        set_);
  }

  const detail::ElementSet<Permutation>& perm_set() const {
    return std::get<detail::ElementSet<Permutation>>(set_);
  }
  const detail::ElementSet<ModMatrix>& matrix_set() const {
    return std::get<detail::ElementSet<ModMatrix>>(set_);
  }

  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), set_);
  }

private:
  std::variant<detail::ElementSet<Permutation>, detail::ElementSet<ModMatrix>> set_;
};

inline FiniteGroup enumerate_group(std::vector<Permutation> generators,
                                   std::size_t max_order = kDefaultMaxOrder) {
  return FiniteGroup(detail::ElementSet<Permutation>(std::move(generators), max_order));
}

inline FiniteGroup enumerate_group(std::vector<ModMatrix> generators,
                                   std::size_t max_order = kDefaultMaxOrder) {
  return FiniteGroup(detail::ElementSet<ModMatrix>(std::move(generators), max_order));
}

/// Subgroup generated by the listed elements of g (a normal closure is not
/// taken; see normal_closure).
inline FiniteGroup subgroup_generated(const FiniteGroup& g,
                                      const std::vector<std::size_t>& element_ids,
                                      std::size_t max_order = kDefaultMaxOrder) {
  return g.visit([&](const auto& s) {
    std::vector<std::decay_t<decltype(s.element(0))>> seed;
    for (std::size_t i : element_ids) seed.push_back(s.element(i));
    return FiniteGroup(detail::closure_of(s, std::move(seed), max_order));
  });
}

inline FiniteGroup normal_closure(const FiniteGroup& g,
                                  const std::vector<std::size_t>& element_ids,
                                  std::size_t max_order = kDefaultMaxOrder) {
  return g.visit([&](const auto& s) {
    std::vector<std::decay_t<decltype(s.element(0))>> seed;
    for (std::size_t i : element_ids) seed.push_back(s.element(i));
    return FiniteGroup(detail::normal_closure_impl(s, std::move(seed), max_order));
  });
}

inline FiniteGroup derived_subgroup(const FiniteGroup& g,
                                    std::size_t max_order = kDefaultMaxOrder) {
  return g.visit(
      [&](const auto& s) { return FiniteGroup(detail::derived_subgroup_impl(s, max_order)); });
}

/// G = G^0 >= G^1 >= ... down to the first perfect term (included once).
inline std::vector<FiniteGroup> derived_series(const FiniteGroup& g,
                                               std::size_t max_order = kDefaultMaxOrder) {
  std::vector<FiniteGroup> series;
  series.push_back(g);
  while (true) {
    FiniteGroup next = derived_subgroup(series.back(), max_order);
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

struct DoaResult {
  enum class Terminal { perfect, trivial };
  std::size_t doa = 0;
  Terminal terminal = Terminal::trivial;
};

/// Degree of adorability: the first depth at which the derived series
/// stabilizes. Terminal reports whether it stabilized at a nontrivial
/// perfect group or at the trivial group (the solvable case).
inline DoaResult doa_finite(const FiniteGroup& g, std::size_t max_order = kDefaultMaxOrder) {
  std::vector<FiniteGroup> series = derived_series(g, max_order);
  DoaResult r;
  r.doa = series.size() - 1;
  r.terminal = series.back().order() == 1 ? DoaResult::Terminal::trivial
                                          : DoaResult::Terminal::perfect;
  return r;
}

/// The trivial group counts as perfect (its derived subgroup is itself),
/// which makes doa of a solvable group equal to its derived length.
inline bool is_perfect(const FiniteGroup& g, std::size_t max_order = kDefaultMaxOrder) {
  return derived_subgroup(g, max_order).order() == g.order();
}

inline bool is_solvable(const FiniteGroup& g, std::size_t max_order = kDefaultMaxOrder) {
  return doa_finite(g, max_order).terminal == DoaResult::Terminal::trivial;
}

inline bool is_simple(const FiniteGroup& g, std::size_t max_order = kDefaultMaxOrder) {
  if (g.order() > kSimplicityBudget)
    throw BudgetError("is_simple: order exceeds simplicity budget");
  if (g.order() == 1) return false;
  return g.visit([&](const auto& s) {
    for (std::size_t i = 1; i < s.order(); ++i) {
      auto closure = detail::normal_closure_impl(s, {s.element(i)}, max_order);
      if (closure.order() != s.order()) return false;
    }
    return true;
  });
}

inline FiniteGroup to_permutation_group(const FiniteGroup& g,
                                        std::size_t max_order = kDefaultMaxOrder) {
  if (g.kind() == FiniteGroup::Kind::permutation) return g;
  return FiniteGroup(detail::regular_representation(g.matrix_set(), max_order));
}

/// G x H acting on the disjoint union of the two domains. Matrix groups
/// are embedded through their regular representation first.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                  std::size_t max_order = kDefaultMaxOrder) {
  FiniteGroup pg = to_permutation_group(g, max_order);
  FiniteGroup ph = to_permutation_group(h, max_order);
  const auto& gs = pg.perm_set();
  const auto& hs = ph.perm_set();
  const std::size_t dg = gs.element(0).degree();
  const std::size_t dh = hs.element(0).degree();

  std::vector<Permutation> gens;
  for (const Permutation& p : gs.generators()) {
    std::vector<std::uint32_t> images(dg + dh);
    for (std::size_t i = 0; i < dg; ++i) images[i] = p(static_cast<std::uint32_t>(i));
    for (std::size_t i = 0; i < dh; ++i) images[dg + i] = static_cast<std::uint32_t>(dg + i);
    gens.emplace_back(std::move(images));
  }
  for (const Permutation& p : hs.generators()) {
    std::vector<std::uint32_t> images(dg + dh);
    for (std::size_t i = 0; i < dg; ++i) images[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < dh; ++i)
      images[dg + i] = static_cast<std::uint32_t>(dg + p(static_cast<std::uint32_t>(i)));
    gens.emplace_back(std::move(images));
  }
  return enumerate_group(std::move(gens), max_order);
}

/// G/N on the right cosets of N; requires N <= G normal (checked).
inline FiniteGroup quotient(const FiniteGroup& g, const FiniteGroup& n,
                            std::size_t max_order = kDefaultMaxOrder) {
  if (g.kind() != n.kind())
    throw std::invalid_argument("quotient: mixed element kinds");
  if (g.kind() == FiniteGroup::Kind::permutation)
    return FiniteGroup(detail::quotient_impl(g.perm_set(), n.perm_set(), max_order));
  return FiniteGroup(detail::quotient_impl(g.matrix_set(), n.matrix_set(), max_order));
}

/// True iff every element of h lies in g.
inline bool is_subgroup(const FiniteGroup& h, const FiniteGroup& g) {
  if (h.kind() != g.kind()) return false;
  if (h.kind() == FiniteGroup::Kind::permutation) {
    for (const Permutation& e : h.perm_set().elements())
      if (!g.perm_set().contains(e)) return false;
    return true;
  }
  for (const ModMatrix& e : h.matrix_set().elements())
    if (!g.matrix_set().contains(e)) return false;
  return true;
}

/// True iff n <= g and conjugation by g's generators preserves n.
inline bool is_normal_subgroup(const FiniteGroup& n, const FiniteGroup& g) {
  if (!is_subgroup(n, g)) return false;
  auto check = [](const auto& gs, const auto& ns) {
    for (const auto& conj : gs.generators()) {
      auto conj_inv = conj.inverse();
      for (const auto& t : ns.generators())
        if (!ns.contains(conj * t * conj_inv)) return false;
    }
    return true;
  };
  if (g.kind() == FiniteGroup::Kind::permutation)
    return check(g.perm_set(), n.perm_set());
  return check(g.matrix_set(), n.matrix_set());
}

inline bool is_abelian(const FiniteGroup& g) {
  for (std::size_t i = 0; i < g.generator_count(); ++i)
    for (std::size_t j = i + 1; j < g.generator_count(); ++j) {
      std::size_t a = g.generator_element_index(i);
      std::size_t b = g.generator_element_index(j);
      if (g.product_index(a, b) != g.product_index(b, a)) return false;
    }
  return true;
}

}  // namespace adorn
