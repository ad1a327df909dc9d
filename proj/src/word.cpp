#include "ncalg/word.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ncalg/errors.hpp"

namespace ncalg {

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  if (gens_.size() > 200) throw InputError("too many generators");
  std::set<std::string> seen;
  for (auto& g : gens_) {
    if (!seen.insert(g.name).second) throw InputError("duplicate generator name " + g.name);
    if (g.bidegree.first < 0 || g.bidegree.second < 0 || g.degree() == 0)
      throw InputError("generator " + g.name + " needs a nonnegative, nonzero bidegree");
  }
}

int Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  return -1;
}

Word Alphabet::letter(std::size_t i) const { return {std::string(1, static_cast<char>(i)), gens_.at(i).degree()}; }

Word Alphabet::word(const std::vector<std::size_t>& indices) const {
  Word w;
  for (auto i : indices) w = w * letter(i);
  return w;
}

Word Alphabet::word_from_names(const std::vector<std::string>& names) const {
  Word w;
  for (auto& n : names) {
    int i = index_of(n);
    if (i < 0) throw InputError("unknown generator " + n);
    w = w * letter(static_cast<std::size_t>(i));
  }
  return w;
}

int Alphabet::degree_of(std::string_view letters) const {
  int d = 0;
  for (char c : letters) d += gens_[static_cast<std::uint8_t>(c)].degree();
  return d;
}

Word Alphabet::sub(const Word& w, std::size_t pos, std::size_t len) const {
  std::string s = w.letters.substr(pos, len);
  int d = degree_of(s);
  return {std::move(s), d};
}

Bidegree Alphabet::bidegree(const Word& w) const {
  Bidegree b{0, 0};
  for (char c : w.letters) {
    auto& g = gens_[static_cast<std::uint8_t>(c)];
    b.first += g.bidegree.first;
    b.second += g.bidegree.second;
  }
  return b;
}

std::vector<std::string> Alphabet::names(const Word& w) const {
  std::vector<std::string> out;
  for (char c : w.letters) out.push_back(gens_[static_cast<std::uint8_t>(c)].name);
  return out;
}

std::string Alphabet::to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w.letters[j] == w.letters[i]) ++j;
    if (!out.empty()) out += "*";
    out += gens_[w.at(i)].name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<Word> Alphabet::words_of_degree(int degree) const {
  std::vector<Word> out;
  std::string cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back({cur, degree});
      return;
    }
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      int d = gens_[i].degree();
      if (d > left) continue;
      cur.push_back(static_cast<char>(i));
      rec(left - d);
      cur.pop_back();
    }
  };
  if (degree >= 0) rec(degree);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncalg
