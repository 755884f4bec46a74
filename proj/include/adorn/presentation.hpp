#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "adorn/errors.hpp"
#include "adorn/ints.hpp"
#include "adorn/word.hpp"

namespace adorn {

/// Finitely presented group: named generators plus freely reduced relator
/// words. An empty relator list presents a free group; an empty generator
/// list presents the trivial group.
class Presentation {
public:
  Presentation() = default;

  Presentation(std::vector<std::string> generators, std::vector<Word> relators)
      : generators_(std::move(generators)) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].empty())
        throw std::invalid_argument("Presentation: empty generator name");
      for (std::size_t j = i + 1; j < generators_.size(); ++j)
        if (generators_[i] == generators_[j])
          throw std::invalid_argument("Presentation: duplicate generator name '" +
                                      generators_[i] + "'");
    }
    relators_.reserve(relators.size());
    for (Word& w : relators) {
      if (w.max_generator() >= static_cast<int>(generators_.size()))
        throw std::invalid_argument("Presentation: relator references undeclared generator");
      relators_.push_back(std::move(w));  // Word is freely reduced by construction
    }
  }

  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  const std::string& generator_name(std::size_t i) const { return generators_[i]; }

  friend bool operator==(const Presentation&, const Presentation&) = default;

private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Relation matrix: one row per relator, one column per generator, entries
/// are exponent sums. Presents the abelianization for Smith reduction.
inline IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generator_count());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    std::vector<Int> row = exponent_vector(p.relators()[i], p.generator_count());
    for (std::size_t j = 0; j < p.generator_count(); ++j) m.at(i, j) = std::move(row[j]);
  }
  return m;
}

namespace detail {

// Recursive-descent parser for the presentation grammar:
//   presentation := '<' genlist '|' rellist '>'
//   genlist      := empty | ident (',' ident)*
//   rellist      := empty | relator (',' relator)*
//   relator      := word | word '=' word
//   word         := '1' | factor ('*' factor)*
//   factor       := ident ('^' integer)? | '(' word ')' ('^' integer)?
//                 | '[' word ',' word ']'
// Whitespace-insensitive; '1' is the empty word. An empty genlist is
// accepted so that printed trivial presentations round-trip.
class PresentationParser {
public:
  explicit PresentationParser(const std::string& text) : text_(text) {}

  Presentation parse() {
    expect('<');
    std::vector<std::string> gens;
    skip_ws();
    if (peek() != '|') {
      gens.push_back(parse_ident());
      while (true) {
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
        gens.push_back(parse_ident());
      }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      index_[gens[i]] = static_cast<int>(i);
      if (index_.size() != i + 1)
        throw ParseError("duplicate generator name '" + gens[i] + "'", pos_);
    }
    expect('|');
    std::vector<Word> rels;
    skip_ws();
    if (peek() != '>') {
      rels.push_back(parse_relator());
      while (true) {
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
        rels.push_back(parse_relator());
      }
    }
    expect('>');
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("trailing input after presentation", pos_);
    return Presentation(std::move(gens), std::move(rels));
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError("expected identifier", pos_);
    ++pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  long long parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected integer", pos_);
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    try {
      return std::stoll(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      throw ParseError("exponent out of range", start);
    }
  }

  int generator_index(const std::string& name, std::size_t at) {
    auto it = index_.find(name);
    if (it == index_.end())
      throw ParseError("undeclared generator '" + name + "'", at);
    return it->second;
  }

  // `u = v` is stored as the relator u v^-1.
  Word parse_relator() {
    Word lhs = parse_word();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      Word rhs = parse_word();
      return lhs * rhs.inverse();
    }
    return lhs;
  }

  Word parse_word() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      return Word();
    }
    Word w = parse_factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      w.append(parse_factor());
    }
    return w;
  }

  Word parse_factor() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      Word inner = parse_word();
      expect(')');
      return inner.pow(parse_optional_exponent());
    }
    if (peek() == '[') {
      ++pos_;
      Word u = parse_word();
      expect(',');
      Word v = parse_word();
      expect(']');
      return commutator(u, v);
    }
    std::size_t at = pos_;
    std::string name = parse_ident();
    int gen = generator_index(name, at);
    return Word::generator(gen, parse_optional_exponent());
  }

  long long parse_optional_exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    return parse_integer();
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, int> index_;
};

}  // namespace detail

inline Presentation parse_presentation(const std::string& text) {
  return detail::PresentationParser(text).parse();
}

inline std::string to_text(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w.letters()) {
    if (!s.empty()) s += "*";
    s += names[static_cast<std::size_t>(l.gen)];
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

/// Inverse of parse_presentation; parse(to_text(p)) == p.
inline std::string to_text(const Presentation& p) {
  std::string s = "< ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    if (i) s += ", ";
    s += p.generator_name(i);
  }
  s += " | ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i) s += ", ";
    s += to_text(p.relators()[i], p.generators());
  }
  s += " >";
  return s;
}

}  // namespace adorn
