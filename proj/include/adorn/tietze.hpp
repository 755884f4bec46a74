#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "adorn/presentation.hpp"
#include "adorn/word.hpp"

namespace adorn {
namespace detail {

// Canonical key of a relator up to cyclic rotation and inversion, used to
// drop duplicates. Built on the expanded letter sequence.
inline std::string cyclic_key(const Word& w) {
  auto encode = [](const std::vector<Letter>& seq) {
    std::string best;
    const std::size_t n = seq.size();
    if (n == 0) return best;
    for (std::size_t start = 0; start < n; ++start) {
      std::string s;
      s.reserve(n * 3);
      for (std::size_t i = 0; i < n; ++i) {
        const Letter& l = seq[(start + i) % n];
        s += l.exp < 0 ? '-' : '+';
        s += std::to_string(l.gen);
        s += '.';
      }
      if (best.empty() || s < best) best = std::move(s);
    }
    return best;
  };
  std::string a = encode(w.expanded());
  std::string b = encode(w.inverse().expanded());
  return a < b ? a : b;
}

// Substitutes gen := replacement in w (replacement must not mention gen).
inline Word substitute(const Word& w, int gen, const Word& replacement) {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.gen != gen) {
      out.append(l.gen, l.exp);
      continue;
    }
    out.append(replacement.pow(l.exp));
  }
  return out;
}

// Drops generator `gen` from the index space, shifting higher indices down.
inline Word drop_generator(const Word& w, int gen) {
  Word out;
  for (const Letter& l : w.letters()) out.append(l.gen > gen ? l.gen - 1 : l.gen, l.exp);
  return out;
}

}  // namespace detail

/// Length-nonincreasing presentation simplification. Moves applied per
/// pass: cyclic reduction, deletion of empty and duplicate relators
/// (up to rotation and inversion), and elimination of a generator through
/// a relator of expanded length 1 (g = 1) or 2 on two distinct generators
/// (g = h^+-1). Each pass never increases total relator length; `budget`
/// bounds the number of passes.
inline Presentation tietze_simplify(const Presentation& p, std::size_t budget = 50) {
  std::vector<std::string> gens = p.generators();
  std::vector<Word> rels = p.relators();

  for (std::size_t pass = 0; pass < budget; ++pass) {
    bool changed = false;

    for (Word& r : rels) {
      Word c = r.cyclically_reduced();
      if (c != r) {
        r = std::move(c);
        changed = true;
      }
    }

    // empty + duplicate relators
    {
      std::vector<Word> kept;
      std::vector<std::string> seen;
      for (Word& r : rels) {
        if (r.empty()) {
          changed = true;
          continue;
        }
        std::string key = detail::cyclic_key(r);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
          changed = true;
          continue;
        }
        seen.push_back(std::move(key));
        kept.push_back(std::move(r));
      }
      rels = std::move(kept);
    }

    // generator elimination; repeat until no pivot is left
    bool eliminated = true;
    while (eliminated) {
      eliminated = false;
      for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        const Word& r = rels[ri];
        int gen = -1;
        Word replacement;
        if (r.length() == 1) {
          gen = r.letters()[0].gen;  // g^±1 = 1, so g := empty word
        } else if (r.length() == 2 && r.letters().size() == 2) {
          // g^a h^b = 1 with |a| = |b| = 1, so h := g^(-a*b)
          const Letter& lg = r.letters()[0];
          const Letter& lh = r.letters()[1];
          gen = lh.gen;
          replacement = Word::generator(lg.gen, -lg.exp * lh.exp);
        } else {
          continue;
        }

        std::vector<Word> next;
        next.reserve(rels.size() - 1);
        for (std::size_t k = 0; k < rels.size(); ++k) {
          if (k == ri) continue;
          Word s = detail::substitute(rels[k], gen, replacement);
          next.push_back(detail::drop_generator(s, gen).cyclically_reduced());
        }
        rels = std::move(next);
        gens.erase(gens.begin() + gen);
        changed = true;
        eliminated = true;
        break;
      }
    }

    if (!changed) break;
  }

  return Presentation(std::move(gens), std::move(rels));
}

}  // namespace adorn
