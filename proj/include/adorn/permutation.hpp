#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace adorn {

/// Permutation of {0..n-1}, stored as the image array.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<std::uint32_t>(i);
    return p;
  }

  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t v : images_) {
      if (v >= images_.size() || seen[v])
        throw std::invalid_argument("Permutation: image array is not a bijection");
      seen[v] = true;
    }
  }

  /// Parses disjoint cycle notation on 0-based points, e.g. "(0 1 2)(3 4)".
  /// Points not mentioned are fixed; "()" is the identity.
  static Permutation from_cycles(const std::string& text, std::size_t degree) {
    std::vector<std::uint32_t> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
      if (text[pos] != '(')
        throw std::invalid_argument("Permutation: expected '(' in cycle notation");
      ++pos;
      std::vector<std::uint32_t> cycle;
      skip_ws();
      while (pos < text.size() && text[pos] != ')') {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
          throw std::invalid_argument("Permutation: expected point in cycle notation");
        unsigned long v = std::stoul(text.substr(start, pos - start));
        if (v >= degree)
          throw std::invalid_argument("Permutation: point exceeds degree");
        cycle.push_back(static_cast<std::uint32_t>(v));
        skip_ws();
      }
      if (pos >= text.size())
        throw std::invalid_argument("Permutation: unterminated cycle");
      ++pos;  // ')'
      for (std::size_t i = 0; i < cycle.size(); ++i)
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      skip_ws();
    }
    return Permutation(std::move(images));
  }

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }

  /// Product applies the left factor first: (p * q)(x) = q(p(x)).
  Permutation operator*(const Permutation& rhs) const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
    return out;
  }

  Permutation inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out.images_[images_[i]] = static_cast<std::uint32_t>(i);
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Canonical byte key; equal keys iff equal permutations of equal degree.
  std::string key() const {
    return std::string(reinterpret_cast<const char*>(images_.data()),
                       images_.size() * sizeof(std::uint32_t));
  }

  std::string to_cycles() const {
    std::string s;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      s += "(";
      std::uint32_t j = static_cast<std::uint32_t>(i);
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) s += " ";
        s += std::to_string(j);
        first = false;
        j = images_[j];
      }
      s += ")";
    }
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::uint32_t> images_;
};

}  // namespace adorn
