#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "adorn/ints.hpp"

namespace adorn {

/// One run of a word: generator index and a nonzero (possibly negative)
/// exponent. Words are stored run-length because subgroup rewriting
/// produces long runs of a single generator.
struct Letter {
  int gen = 0;
  long long exp = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word over an indexed generator set. Invariant: adjacent
/// letters have distinct generator indices and every exponent is nonzero.
class Word {
public:
  Word() = default;

  /// Builds the free reduction of an arbitrary letter sequence.
  explicit Word(const std::vector<Letter>& raw) {
    for (const Letter& l : raw) append(l.gen, l.exp);
  }

  static Word generator(int gen, long long exp = 1) {
    Word w;
    w.append(gen, exp);
    return w;
  }

  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Letter count of the expanded word (sum of |exponent|).
  long long length() const {
    long long n = 0;
    for (const Letter& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
    return n;
  }

  int max_generator() const {
    int m = -1;
    for (const Letter& l : letters_)
      if (l.gen > m) m = l.gen;
    return m;
  }

  /// Appends one run, merging and cancelling against the current tail.
  void append(int gen, long long exp) {
    if (exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == gen) {
      letters_.back().exp += exp;
      if (letters_.back().exp == 0) letters_.pop_back();
      return;
    }
    letters_.push_back({gen, exp});
  }

  void append(const Word& w) {
    for (const Letter& l : w.letters_) append(l.gen, l.exp);
  }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back({it->gen, -it->exp});
    return w;
  }

  Word operator*(const Word& rhs) const {
    Word w = *this;
    w.append(rhs);
    return w;
  }

  /// w^n (n may be negative or zero).
  Word pow(long long n) const {
    const Word& base = n < 0 ? inverse() : *this;
    long long reps = n < 0 ? -n : n;
    Word out;
    for (long long i = 0; i < reps; ++i) out.append(base);
    return out;
  }

  /// Cyclic reduction: strips matching conjugating runs off both ends.
  /// The result generates the same normal closure.
  Word cyclically_reduced() const {
    Word w = *this;
    while (w.letters_.size() >= 2) {
      const Letter& first = w.letters_.front();
      const Letter& last = w.letters_.back();
      if (first.gen != last.gen || (first.exp > 0) == (last.exp > 0)) break;
      long long cancel = std::min(first.exp < 0 ? -first.exp : first.exp,
                                  last.exp < 0 ? -last.exp : last.exp);
      Word inner;
      long long lead = first.exp + (first.exp < 0 ? cancel : -cancel);
      if (lead != 0) inner.append(first.gen, lead);
      for (std::size_t i = 1; i + 1 < w.letters_.size(); ++i)
        inner.append(w.letters_[i].gen, w.letters_[i].exp);
      long long tail = last.exp + (last.exp < 0 ? cancel : -cancel);
      if (tail != 0) inner.append(last.gen, tail);
      if (inner.length() >= w.length()) break;
      w = inner;
    }
    return w;
  }

  /// Expanded form as signed single letters, e.g. a^-2 b -> [-a, -a, +b].
  /// Sign carries the exponent sign; gen is the generator index.
  std::vector<Letter> expanded() const {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (const Letter& l : letters_) {
      long long reps = l.exp < 0 ? -l.exp : l.exp;
      long long sign = l.exp < 0 ? -1 : 1;
      for (long long i = 0; i < reps; ++i) out.push_back({l.gen, sign});
    }
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

inline Word free_reduce(const std::vector<Letter>& raw) { return Word(raw); }

/// [u, v] = u v u^-1 v^-1, freely reduced.
inline Word commutator(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}

/// Image of w under abelianization onto Z^ngens: component j is the
/// exponent sum of generator j. Additive under concatenation and blind
/// to free reduction.
inline std::vector<Int> exponent_vector(const Word& w, std::size_t ngens) {
  std::vector<Int> v(ngens);
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= ngens)
      throw std::invalid_argument("exponent_vector: generator index out of range");
    v[static_cast<std::size_t>(l.gen)] += l.exp;
  }
  return v;
}

}  // namespace adorn
