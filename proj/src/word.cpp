#include "traintrack/word.hpp"

#include <sstream>

namespace tt {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverted()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::vector<Letter> raw) {
  letters_.reserve(raw.size());
  for (Letter l : raw) push_reduced(letters_, l);
}

Word Word::inverse() const {
  std::vector<Letter> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    rev.push_back(it->inverted());
  }
  Word w;
  w.letters_ = std::move(rev);  // reversal of a reduced word is reduced
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.reserve(letters_.size() + rhs.letters_.size());
  for (Letter l : rhs.letters_) push_reduced(out, l);
  Word w;
  w.letters_ = std::move(out);
  return w;
}

std::int64_t Word::max_index() const noexcept {
  std::int64_t mx = -1;
  for (const Letter& l : letters_) {
    mx = std::max<std::int64_t>(mx, l.index);
  }
  return mx;
}

Word reduce_word(const std::vector<Letter>& raw, std::size_t alphabet_size) {
  for (const Letter& l : raw) {
    if (l.index >= alphabet_size) {
      throw MalformedInputError("letter index " + std::to_string(l.index) +
                                " out of range for alphabet of size " +
                                std::to_string(alphabet_size));
    }
  }
  return Word(raw);
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) os << ' ';
    os << names.at(w[i].index);
    if (w[i].inverse) os << '\'';
  }
  return os.str();
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::istringstream is(text);
  std::vector<Letter> letters;
  std::string tok;
  while (is >> tok) {
    if (tok == "1" && letters.empty()) continue;  // identity spelled "1"
    bool inv = false;
    if (tok.size() > 1 && tok.back() == '\'') {
      inv = true;
      tok.pop_back();
    }
    std::size_t idx = names.size();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == tok) {
        idx = i;
        break;
      }
    }
    if (idx == names.size()) {
      throw MalformedInputError("unknown letter '" + tok + "'");
    }
    letters.push_back(Letter{static_cast<std::uint32_t>(idx), inv});
  }
  return Word(std::move(letters));
}

}  // namespace tt
