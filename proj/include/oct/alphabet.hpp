#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oct {

/// A letter is referred to by its index in the owning alphabet.
using Symbol = std::uint32_t;

/// A word is a sequence of letter indices, always relative to one alphabet.
using Word = std::vector<Symbol>;

/// An ordered set of distinct letter tokens. The declaration order is stable
/// and defines the lexicographic order on words. May be empty: agents that
/// observe nothing carry an empty subalphabet.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<std::string>& letters() const { return letters_; }
  const std::string& letter(Symbol s) const;

  std::optional<Symbol> index_of(std::string_view letter) const;
  bool contains(std::string_view letter) const { return index_of(letter).has_value(); }

  /// True when every letter of `sub` is a letter of *this.
  bool contains_all(const Alphabet& sub) const;

  bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }

 private:
  std::vector<std::string> letters_;
  std::map<std::string, Symbol, std::less<>> index_;
};

/// Shortlex: shorter first, then lexicographic by symbol index.
bool shortlex_less(const Word& a, const Word& b);

/// Renders a word as text: letters concatenated when every letter of the
/// alphabet is a single character, whitespace-separated otherwise. The empty
/// word renders as "".
std::string format_word(const Alphabet& alphabet, const Word& w);

/// Inverse of format_word; "" parses to the empty word.
Word parse_word(const Alphabet& alphabet, std::string_view text);

}  // namespace oct
