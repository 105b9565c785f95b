#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace otype {

/// Interned generator identifier.
struct Letter {
  std::uint16_t id = 0;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// A letter together with a sign; encoded as +(id+1) or -(id+1).
class SignedLetter {
 public:
  constexpr SignedLetter() = default;
  constexpr SignedLetter(Letter l, bool negative = false)
      : code_(static_cast<std::int16_t>(negative ? -(l.id + 1) : (l.id + 1))) {}

  static constexpr SignedLetter from_code(std::int16_t code) {
    SignedLetter s;
    s.code_ = code;
    return s;
  }

  [[nodiscard]] constexpr Letter letter() const {
    return Letter{static_cast<std::uint16_t>((code_ < 0 ? -code_ : code_) - 1)};
  }
  [[nodiscard]] constexpr bool negative() const { return code_ < 0; }
  [[nodiscard]] constexpr bool positive() const { return code_ > 0; }
  [[nodiscard]] constexpr SignedLetter inverse() const { return from_code(static_cast<std::int16_t>(-code_)); }
  [[nodiscard]] constexpr std::int16_t code() const { return code_; }

  friend constexpr auto operator<=>(SignedLetter, SignedLetter) = default;

 private:
  std::int16_t code_ = 1;
};

/// Word over an alphabet without inverse letters.  Value type.
class PositiveWord {
 public:
  PositiveWord() = default;
  explicit PositiveWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  PositiveWord(std::initializer_list<Letter> letters) : letters_(letters) {}

  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] Letter front() const { return letters_.front(); }
  [[nodiscard]] Letter back() const { return letters_.back(); }
  [[nodiscard]] auto begin() const { return letters_.begin(); }
  [[nodiscard]] auto end() const { return letters_.end(); }
  [[nodiscard]] std::span<const Letter> letters() const { return letters_; }

  [[nodiscard]] PositiveWord sub(std::size_t pos, std::size_t len = std::string::npos) const {
    pos = std::min(pos, letters_.size());
    len = std::min(len, letters_.size() - pos);
    return PositiveWord(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                            letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
  }

  [[nodiscard]] bool starts_with(const PositiveWord& p) const {
    return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
  }
  [[nodiscard]] bool ends_with(const PositiveWord& p) const {
    return p.size() <= size() && std::equal(p.begin(), p.end(), end() - static_cast<std::ptrdiff_t>(p.size()));
  }

  [[nodiscard]] PositiveWord power(std::size_t k) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() * k);
    for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
    return PositiveWord(std::move(out));
  }

  [[nodiscard]] PositiveWord mirror() const {
    return PositiveWord(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
  }

  friend PositiveWord operator*(const PositiveWord& x, const PositiveWord& y) {
    std::vector<Letter> out;
    out.reserve(x.size() + y.size());
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return PositiveWord(std::move(out));
  }

  friend bool operator==(const PositiveWord&, const PositiveWord&) = default;
  friend auto operator<=>(const PositiveWord&, const PositiveWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Word over S ∪ S⁻¹.  Value type; no free reduction is ever performed.
class SignedWord {
 public:
  SignedWord() = default;
  explicit SignedWord(std::vector<SignedLetter> entries) : entries_(std::move(entries)) {}
  SignedWord(std::initializer_list<SignedLetter> entries) : entries_(entries) {}
  explicit SignedWord(const PositiveWord& w) {
    entries_.reserve(w.size());
    for (Letter l : w) entries_.emplace_back(l);
  }

  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] SignedLetter operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }
  [[nodiscard]] std::span<const SignedLetter> entries() const { return entries_; }

  [[nodiscard]] bool is_positive() const {
    return std::all_of(begin(), end(), [](SignedLetter s) { return s.positive(); });
  }
  [[nodiscard]] bool is_negative() const {
    return std::all_of(begin(), end(), [](SignedLetter s) { return s.negative(); });
  }

  friend SignedWord operator*(const SignedWord& x, const SignedWord& y) {
    std::vector<SignedLetter> out;
    out.reserve(x.size() + y.size());
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return SignedWord(std::move(out));
  }

  friend bool operator==(const SignedWord&, const SignedWord&) = default;
  friend auto operator<=>(const SignedWord&, const SignedWord&) = default;

 private:
  std::vector<SignedLetter> entries_;
};

/// Reverses the order and flips every sign.
[[nodiscard]] inline SignedWord invert(const SignedWord& w) {
  std::vector<SignedLetter> out;
  out.reserve(w.size());
  for (auto it = w.entries().rbegin(); it != w.entries().rend(); ++it) out.push_back(it->inverse());
  return SignedWord(std::move(out));
}

[[nodiscard]] inline SignedWord invert(const PositiveWord& w) { return invert(SignedWord(w)); }

/// Reverses the order, keeping signs.
[[nodiscard]] inline SignedWord mirror(const SignedWord& w) {
  return SignedWord(std::vector<SignedLetter>(w.entries().rbegin(), w.entries().rend()));
}

[[nodiscard]] inline PositiveWord mirror(const PositiveWord& w) { return w.mirror(); }

/// u⁻¹·v as a signed word.
[[nodiscard]] inline SignedWord negative_positive(const PositiveWord& u, const PositiveWord& v) {
  return invert(u) * SignedWord(v);
}

/// v·u⁻¹ as a signed word.
[[nodiscard]] inline SignedWord positive_negative(const PositiveWord& v, const PositiveWord& u) {
  return SignedWord(v) * invert(u);
}

/// Returns (u, v) when w = u⁻¹v with u, v positive.
[[nodiscard]] inline std::optional<std::pair<PositiveWord, PositiveWord>> is_negative_positive(const SignedWord& w) {
  std::size_t k = 0;
  while (k < w.size() && w[k].negative()) ++k;
  for (std::size_t i = k; i < w.size(); ++i)
    if (w[i].negative()) return std::nullopt;
  std::vector<Letter> u, v;
  for (std::size_t i = k; i-- > 0;) u.push_back(w[i].letter());
  for (std::size_t i = k; i < w.size(); ++i) v.push_back(w[i].letter());
  return std::pair{PositiveWord(std::move(u)), PositiveWord(std::move(v))};
}

/// Returns (v, u) when w = v·u⁻¹ with u, v positive.
[[nodiscard]] inline std::optional<std::pair<PositiveWord, PositiveWord>> is_positive_negative(const SignedWord& w) {
  std::size_t k = 0;
  while (k < w.size() && w[k].positive()) ++k;
  for (std::size_t i = k; i < w.size(); ++i)
    if (w[i].positive()) return std::nullopt;
  std::vector<Letter> v, u;
  for (std::size_t i = 0; i < k; ++i) v.push_back(w[i].letter());
  for (std::size_t i = w.size(); i-- > k;) u.push_back(w[i].letter());
  return std::pair{PositiveWord(std::move(v)), PositiveWord(std::move(u))};
}

/// Drops signs; only meaningful on words that are known to be positive.
[[nodiscard]] inline PositiveWord to_positive(const SignedWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (SignedLetter s : w) {
    if (!s.positive()) throw std::invalid_argument("to_positive: word has an inverse letter");
    out.push_back(s.letter());
  }
  return PositiveWord(std::move(out));
}

class WordSyntaxError : public std::runtime_error {
 public:
  WordSyntaxError(const std::string& msg, std::size_t column)
      : std::runtime_error(msg), column_(column) {}
  /// 1-based column inside the parsed text.
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Ordered set of generator names.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names) {
    if (names.empty()) throw std::invalid_argument("alphabet must not be empty");
    if (names.size() > 0x7ffe) throw std::invalid_argument("alphabet too large");
    for (auto& n : names) {
      if (n.empty() || n == "eps") throw std::invalid_argument("invalid letter name '" + n + "'");
      for (char c : n)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
          throw std::invalid_argument("invalid letter name '" + n + "'");
      if (!index_.emplace(n, static_cast<std::uint16_t>(names_.size())).second)
        throw std::invalid_argument("duplicate letter '" + n + "'");
      names_.push_back(std::move(n));
    }
  }
  Alphabet(std::initializer_list<const char*> names)
      : Alphabet(std::vector<std::string>(names.begin(), names.end())) {}

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::string& name(Letter l) const { return names_.at(l.id); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] Letter letter(std::size_t i) const { return Letter{static_cast<std::uint16_t>(i)}; }

  [[nodiscard]] std::optional<Letter> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return Letter{it->second};
  }
  [[nodiscard]] Letter operator[](std::string_view name) const {
    auto l = find(name);
    if (!l) throw std::invalid_argument("unknown letter '" + std::string(name) + "'");
    return *l;
  }

  /// True when every name is a single character; such words print without separators.
  [[nodiscard]] bool single_char() const {
    return std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
  }

  friend bool operator==(const Alphabet& x, const Alphabet& y) { return x.names_ == y.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint16_t> index_;
};

enum class WordStyle { Compact, Spaced };

/// Compact style juxtaposes single-character letters ("ba^-1b"); spaced style
/// separates tokens by one space ("b a^-1 b").  The empty word prints as "".
[[nodiscard]] inline std::string format(const Alphabet& A, const SignedWord& w, WordStyle style = WordStyle::Compact) {
  const bool compact = style == WordStyle::Compact && A.single_char();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !compact) out += ' ';
    out += A.name(w[i].letter());
    if (w[i].negative()) out += "^-1";
  }
  return out;
}

[[nodiscard]] inline std::string format(const Alphabet& A, const PositiveWord& w, WordStyle style = WordStyle::Compact) {
  return format(A, SignedWord(w), style);
}

/// Parses a signed word.  Tokens are letter names separated by whitespace,
/// each optionally followed by "^k" or "^-k".  When every name is a single
/// character, tokens may also be juxtaposed ("ba^2b").  "eps" is the empty word.
[[nodiscard]] inline SignedWord parse_signed_word(const Alphabet& A, std::string_view text) {
  std::vector<SignedLetter> out;
  const bool single = A.single_char();
  std::size_t i = 0;
  auto fail = [&](const std::string& msg, std::size_t col) { throw WordSyntaxError(msg, col + 1); };
  auto is_name_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (!is_name_char(text[i])) fail(std::string("unexpected character '") + text[i] + "'", i);
    std::size_t j = i;
    while (j < text.size() && is_name_char(text[j])) ++j;
    std::string_view token = text.substr(i, j - i);
    std::vector<Letter> letters;
    if (token == "eps") {
      // empty word token
    } else if (auto l = A.find(token)) {
      letters.push_back(*l);
    } else if (single) {
      for (std::size_t k = 0; k < token.size(); ++k) {
        auto c = A.find(token.substr(k, 1));
        if (!c) fail("unknown letter '" + std::string(token.substr(k, 1)) + "'", i + k);
        letters.push_back(*c);
      }
    } else {
      fail("unknown letter '" + std::string(token) + "'", i);
    }
    i = j;
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      if (letters.empty()) fail("exponent applied to eps", i);
      ++i;
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      std::size_t k = i;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (k == i) fail("expected exponent", i);
      if (k - i > 6) fail("exponent too large", i);
      exponent = std::stol(std::string(text.substr(i, k - i)));
      if (neg) exponent = -exponent;
      i = k;
    }
    // The exponent binds to the last letter of a juxtaposed token.
    for (std::size_t k = 0; k + 1 < letters.size(); ++k) out.emplace_back(letters[k]);
    if (!letters.empty()) {
      Letter last = letters.back();
      for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) out.emplace_back(last, exponent < 0);
    }
  }
  return SignedWord(std::move(out));
}

[[nodiscard]] inline PositiveWord parse_positive_word(const Alphabet& A, std::string_view text) {
  SignedWord w = parse_signed_word(A, text);
  if (!w.is_positive()) throw WordSyntaxError("inverse letter in a positive word", 1);
  return to_positive(w);
}

}  // namespace otype
