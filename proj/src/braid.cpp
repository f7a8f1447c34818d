#include "knotadj/braid.hpp"

#include <cctype>
#include <sstream>

namespace knotadj {

SyllableSeq normalize_syllables(SyllableSeq s) {
  SyllableSeq out;
  for (const Syllable& syl : s) {
    if (syl.gen != 1 && syl.gen != 2) throw Error("generator must be 1 or 2");
    if (syl.exp == 0) continue;
    out.push_back(syl);
    // Merge at the top of the stack; a vanishing merge re-exposes the pair
    // below it, so keep folding.
    while (out.size() >= 2) {
      Syllable& a = out[out.size() - 2];
      Syllable& b = out.back();
      if (a.gen != b.gen) break;
      a.exp += b.exp;
      out.pop_back();
      if (a.exp == 0) out.pop_back();
    }
  }
  return out;
}

bool is_normal(const SyllableSeq& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].exp == 0 || (s[i].gen != 1 && s[i].gen != 2)) return false;
    if (i > 0 && s[i].gen == s[i - 1].gen) return false;
  }
  return true;
}

long crossing_count(const SyllableSeq& s) {
  long n = 0;
  for (const Syllable& syl : s) n += syl.exp < 0 ? -syl.exp : syl.exp;
  return n;
}

namespace {

long parse_exponent(const std::string& tok, std::size_t from) {
  if (from >= tok.size()) throw Error("missing exponent in '" + tok + "'");
  std::size_t pos = 0;
  long e = 0;
  try {
    e = std::stol(tok.substr(from), &pos);
  } catch (const std::exception&) {
    throw Error("malformed integer in '" + tok + "'");
  }
  if (from + pos != tok.size()) throw Error("malformed integer in '" + tok + "'");
  if (e == 0) throw Error("zero exponent in '" + tok + "'");
  return e;
}

BraidWord parse_exponent_vector(const std::string& text) {
  SyllableSeq seq;
  std::string body = text.substr(1, text.size() - 2);
  std::istringstream in(body);
  std::string item;
  int gen = 1;
  while (std::getline(in, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t");
    if (a == std::string::npos) throw Error("empty entry in exponent vector");
    std::size_t b = item.find_last_not_of(" \t");
    seq.push_back({gen, parse_exponent(item.substr(a, b - a + 1), 0)});
    gen = 3 - gen;
  }
  if (seq.empty()) throw Error("empty exponent vector");
  return BraidWord(std::move(seq));
}

}  // namespace

BraidWord parse_braid_word(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    std::size_t last = text.find_last_not_of(" \t\r\n");
    if (text[last] != ']') throw Error("unterminated exponent vector");
    return parse_exponent_vector(text.substr(first, last - first + 1));
  }
  SyllableSeq seq;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 's' || (tok[1] != '1' && tok[1] != '2'))
      throw Error("unknown token '" + tok + "'");
    int gen = tok[1] - '0';
    long exp = 1;
    if (tok.size() > 2) {
      if (tok[2] != '^') throw Error("unknown token '" + tok + "'");
      exp = parse_exponent(tok, 3);
    }
    seq.push_back({gen, exp});
  }
  return BraidWord(std::move(seq));
}

std::string format_braid_word(const BraidWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : w.syllables()) {
    if (!first) os << ' ';
    first = false;
    os << 's' << s.gen;
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

std::string format_exponent_vector(const BraidWord& w) {
  if (w.empty() || !w.starts_with_sigma1()) return "";
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i].exp;
  }
  os << ']';
  return os.str();
}

BraidWord invert(const BraidWord& w) {
  SyllableSeq seq;
  seq.reserve(w.size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
    seq.push_back({it->gen, -it->exp});
  return BraidWord(std::move(seq));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  SyllableSeq seq = a.syllables();
  seq.insert(seq.end(), b.syllables().begin(), b.syllables().end());
  return BraidWord(std::move(seq));
}

BraidWord mirror(const BraidWord& w) {
  SyllableSeq seq = w.syllables();
  for (Syllable& s : seq) s.exp = -s.exp;
  return BraidWord(std::move(seq));
}

SyllableSeq reduce_closure_syllables(SyllableSeq s) {
  s = normalize_syllables(std::move(s));
  while (!s.empty() && s.front().gen == 2) {
    s.erase(s.begin());
    s = normalize_syllables(std::move(s));
  }
  return s;
}

BraidWord reduce_closure_word(const BraidWord& w) {
  return BraidWord(reduce_closure_syllables(w.syllables()));
}

}  // namespace knotadj
