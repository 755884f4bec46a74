#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adorn/coset_table.hpp"
#include "adorn/presentation.hpp"
#include "adorn/tietze.hpp"
#include "adorn/word.hpp"

namespace adorn {
namespace detail {

/// Breadth-first spanning tree of the coset graph, rooted at coset 0,
/// exploring signed generators in column order. Fixes the otherwise
/// arbitrary choice of Schreier generators so outputs are reproducible.
struct SchreierTree {
  // For each positive-generator pair (coset, gen): the Schreier generator
  // ordinal, or -1 when the pair's edge lies in the tree.
  std::vector<int> pair_id;
  std::size_t generator_count = 0;

  SchreierTree(const CosetTable& t) {
    const std::size_t k = t.index();
    const std::size_t n = t.base().generator_count();
    pair_id.assign(k * n, -2);
    std::vector<bool> visited(k, false);
    std::deque<std::uint32_t> queue;
    visited[0] = true;
    queue.push_back(0);
    std::vector<std::pair<std::uint32_t, std::size_t>> tree_pairs;
    while (!queue.empty()) {
      std::uint32_t c = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < n; ++g)
        for (bool inverse : {false, true}) {
          std::uint32_t d = t.act(c, static_cast<int>(g), inverse);
          if (visited[d]) continue;
          visited[d] = true;
          queue.push_back(d);
          // the traversed edge is the positive pair (c, g) or (d, g)
          tree_pairs.push_back({inverse ? d : c, g});
        }
    }
    for (auto [c, g] : tree_pairs) pair_id[c * n + g] = -1;
    for (std::size_t i = 0; i < pair_id.size(); ++i)
      if (pair_id[i] == -2) pair_id[i] = static_cast<int>(generator_count++);
  }
};

}  // namespace detail

/// Presentation of the subgroup of a coset table: Schreier generators are
/// the non-tree edges of the coset graph; relators are every base relator
/// rewritten at every coset, then simplified. For a free base presentation
/// of rank n and index k this yields k(n-1)+1 generators and no relators.
inline Presentation reidemeister_schreier(const CosetTable& t, std::size_t tietze_budget = 50) {
  const std::size_t n = t.base().generator_count();
  detail::SchreierTree tree(t);

  std::vector<std::string> names;
  names.reserve(tree.generator_count);
  for (std::size_t i = 0; i < tree.generator_count; ++i)
    names.push_back("s" + std::to_string(i));

  // Rewrites the trace of w starting at a coset into Schreier generators.
  auto rewrite = [&](std::uint32_t start, const Word& w) {
    Word out;
    std::uint32_t c = start;
    for (const Letter& l : w.expanded()) {
      if (l.exp > 0) {
        int id = tree.pair_id[c * n + static_cast<std::size_t>(l.gen)];
        if (id >= 0) out.append(id, 1);
        c = t.act(c, l.gen, false);
      } else {
        std::uint32_t prev = t.act(c, l.gen, true);
        int id = tree.pair_id[prev * n + static_cast<std::size_t>(l.gen)];
        if (id >= 0) out.append(id, -1);
        c = prev;
      }
    }
    return out;
  };

  std::vector<Word> relators;
  for (std::uint32_t c = 0; c < t.index(); ++c)
    for (const Word& r : t.base().relators()) {
      Word rewritten = rewrite(c, r);
      if (!rewritten.empty()) relators.push_back(std::move(rewritten));
    }

  return tietze_simplify(Presentation(std::move(names), std::move(relators)), tietze_budget);
}

}  // namespace adorn
