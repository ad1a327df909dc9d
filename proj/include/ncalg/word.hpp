#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncalg {

using Bidegree = std::pair<int, int>;

struct Generator {
  std::string name;
  Bidegree bidegree{1, 0};
  int degree() const { return bidegree.first + bidegree.second; }
  bool operator==(const Generator&) const = default;
};

/// Monomial in noncommuting generators. Letters are generator indices; a
/// larger index is a larger letter, so declaring (x1, x2, x3) gives
/// x3 > x2 > x1. The total degree is cached so that words can be ordered
/// without their alphabet.
struct Word {
  std::string letters;
  int degree = 0;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  std::uint8_t at(std::size_t i) const { return static_cast<std::uint8_t>(letters[i]); }

  /// Degree-lex: total degree first, then left-to-right by letter.
  std::strong_ordering operator<=>(const Word& o) const {
    if (degree != o.degree) return degree <=> o.degree;
    int c = letters.compare(o.letters);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  bool operator==(const Word& o) const { return letters == o.letters; }

  Word operator*(const Word& o) const { return {letters + o.letters, degree + o.degree}; }

  /// Position of the first occurrence of `sub` at or after `from`.
  std::size_t find(const Word& sub, std::size_t from = 0) const { return letters.find(sub.letters, from); }
  bool contains(const Word& sub) const { return find(sub) != std::string::npos; }

  /// Replaces letters [pos, pos+len) of degree `removed_degree` by `w`.
  Word replaced(std::size_t pos, std::size_t len, int removed_degree, const Word& w) const {
    std::string s = letters.substr(0, pos) + w.letters + letters.substr(pos + len);
    return {std::move(s), degree - removed_degree + w.degree};
  }

  Word reversed() const { return {std::string(letters.rbegin(), letters.rend()), degree}; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::string>()(w.letters); }
};

enum class Cmp { LT, EQ, GT };

inline Cmp word_compare(const Word& a, const Word& b) {
  auto c = a <=> b;
  return c < 0 ? Cmp::LT : c > 0 ? Cmp::GT : Cmp::EQ;
}

/// Ordered generator list of a presentation.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> gens);

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  /// Index of a generator name, or -1.
  int index_of(std::string_view name) const;

  Word letter(std::size_t i) const;
  Word word(const std::vector<std::size_t>& indices) const;
  /// Word from generator names; throws InputError on an unknown name.
  Word word_from_names(const std::vector<std::string>& names) const;
  int degree_of(std::string_view letters) const;
  Word sub(const Word& w, std::size_t pos, std::size_t len) const;
  Bidegree bidegree(const Word& w) const;
  std::vector<std::string> names(const Word& w) const;
  /// Compact printing with powers, e.g. x3^2*x1; the empty word prints as 1.
  std::string to_string(const Word& w) const;

  /// All words of the given total degree in increasing order.
  std::vector<Word> words_of_degree(int degree) const;

  bool operator==(const Alphabet& o) const { return gens_ == o.gens_; }

 private:
  std::vector<Generator> gens_;
};

}  // namespace ncalg
