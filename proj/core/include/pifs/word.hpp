#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pifs/error.hpp"

namespace pifs {

/// A finite prefix of an infinite word over the alphabet {1,..,N}. Empty
/// words are allowed only as the root cylinder address. Beyond its explicit
/// letters a word is read as repeating its last letter, which is the padding
/// convention used when evaluating the shift-space metric past the prefix.
class Word {
 public:
  Word() = default;

  Word(std::vector<int> letters, int alphabet) : letters_(std::move(letters)), alphabet_(alphabet) {
    if (alphabet_ < 1) throw error("Word: alphabet size must be >= 1");
    for (int l : letters_)
      if (l < 1 || l > alphabet_)
        throw error("Word: letter " + std::to_string(l) + " outside 1.." +
                    std::to_string(alphabet_));
  }

  /// Digit-string form used in configs and on the CLI, e.g. "121121".
  static Word parse(const std::string& digits, int alphabet) {
    if (alphabet < 1 || alphabet > 9)
      throw error("Word: digit-string words support alphabets of size 1..9");
    std::vector<int> ls;
    ls.reserve(digits.size());
    for (char c : digits) {
      if (c < '1' || c > '9') throw error("Word: invalid digit '" + std::string(1, c) + "'");
      ls.push_back(c - '0');
    }
    return Word(std::move(ls), alphabet);
  }

  /// The pattern repeated `times`, e.g. cycle({1,2}, 10, 2) is (12)^10.
  static Word cycle(const std::vector<int>& pattern, std::size_t times, int alphabet) {
    std::vector<int> ls;
    ls.reserve(pattern.size() * times);
    for (std::size_t i = 0; i < times; ++i)
      ls.insert(ls.end(), pattern.begin(), pattern.end());
    return Word(std::move(ls), alphabet);
  }

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int alphabet() const { return alphabet_; }

  /// 0-based access to the explicit prefix.
  int letter(std::size_t i) const { return letters_.at(i); }

  /// 0-based access with repeat-last-letter padding past the prefix.
  int padded(std::size_t i) const {
    if (letters_.empty()) throw error("Word: empty word has no padding");
    return i < letters_.size() ? letters_[i] : letters_.back();
  }

  Word append(int letter) const {
    std::vector<int> ls = letters_;
    ls.push_back(letter);
    return Word(std::move(ls), alphabet_);
  }

  const std::vector<int>& letters() const { return letters_; }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (int l : letters_) s.push_back(static_cast<char>('0' + l));
    return s;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }

  /// Equality of the padded streams up to position k; the identity notion
  /// matching metric evaluation at truncation depth k.
  static bool padded_equal(const Word& a, const Word& b, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      if (a.padded(i) != b.padded(i)) return false;
    return true;
  }

 private:
  std::vector<int> letters_;
  int alphabet_ = 1;
};

}  // namespace pifs
