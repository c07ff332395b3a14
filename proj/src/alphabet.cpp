#include "oct/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "oct/errors.hpp"

namespace oct {

namespace {

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(),
                      [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!valid_token(letters_[i])) {
      throw InputError("alphabet letter must be a non-empty token without whitespace");
    }
    auto [it, inserted] = index_.emplace(letters_[i], static_cast<Symbol>(i));
    if (!inserted) throw InputError("duplicate alphabet letter: " + letters_[i]);
  }
}

const std::string& Alphabet::letter(Symbol s) const {
  if (s >= letters_.size()) throw InputError("letter index out of range");
  return letters_[s];
}

std::optional<Symbol> Alphabet::index_of(std::string_view letter) const {
  auto it = index_.find(letter);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Alphabet::contains_all(const Alphabet& sub) const {
  return std::all_of(sub.letters_.begin(), sub.letters_.end(),
                     [&](const std::string& l) { return contains(l); });
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  const bool single = std::all_of(alphabet.letters().begin(), alphabet.letters().end(),
                                  [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) out += ' ';
    out += alphabet.letter(w[i]);
  }
  return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word w;
  const bool single = std::all_of(alphabet.letters().begin(), alphabet.letters().end(),
                                  [](const std::string& l) { return l.size() == 1; });
  if (single) {
    for (char c : text) {
      auto sym = alphabet.index_of(std::string_view(&c, 1));
      if (!sym) throw InputError(std::string("letter not in alphabet: ") + c);
      w.push_back(*sym);
    }
    return w;
  }
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    auto sym = alphabet.index_of(tok);
    if (!sym) throw InputError("letter not in alphabet: " + tok);
    w.push_back(*sym);
  }
  return w;
}

}  // namespace oct
