#include "bhopf/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace bhopf {

std::optional<Gen> Presentation::find(std::string_view symbol) const {
  for (std::size_t g = 0; g < generators.size(); ++g)
    if (generators[g] == symbol) return static_cast<Gen>(g);
  return std::nullopt;
}

bool Presentation::is_normal(const Word& w) const {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    for (const auto& r : rules)
      if (r.lhs[0] == w[k] && r.lhs[1] == w[k + 1]) return false;
  return true;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

struct Token {
  enum Kind { number, ident, plus, minus, lparen, rparen, bar, equals, end } kind;
  std::string text;
  std::size_t offset;  // 0-based within the scanned text
};

std::vector<Token> tokenize(std::string_view s, std::size_t line, std::size_t col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '/') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw ParseError(line, col0 + start + 1, "malformed scalar");
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Token::number, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                              s[i] == '\''))
        ++i;
      out.push_back({Token::ident, std::string(s.substr(start, i - start)), start});
    } else {
      Token::Kind k;
      switch (c) {
        case '+': k = Token::plus; break;
        case '-': k = Token::minus; break;
        case '(': k = Token::lparen; break;
        case ')': k = Token::rparen; break;
        case '|': k = Token::bar; break;
        case '=': k = Token::equals; break;
        default: throw ParseError(line, col0 + start + 1, std::string("unexpected character '") + c + "'");
      }
      ++i;
      out.push_back({k, std::string(1, c), start});
    }
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

class ExprParser {
 public:
  ExprParser(const Presentation& p, std::string_view text, std::size_t line, std::size_t col0)
      : p_(p), text_(text), line_(line), col0_(col0), toks_(tokenize(text, line, col0)) {}

  Element element() {
    Element out;
    bool first = true;
    while (peek().kind != Token::end) {
      int sign = 1;
      if (peek().kind == Token::plus || peek().kind == Token::minus) {
        sign = peek().kind == Token::minus ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail(peek(), "expected '+' or '-'");
      }
      auto [coef, word] = term();
      out.add(word, TPoly(Scalar(sign) * coef));
      first = false;
    }
    if (first) fail(peek(), "empty expression");
    return out;
  }

  /// Sequence of generator symbols; `1` denotes the empty word.
  Word word_only() {
    if (peek().kind == Token::number && peek().text == "1") {
      ++pos_;
      return {};
    }
    Word w = letters();
    if (w.empty()) fail(peek(), "expected a monomial");
    return w;
  }

  bool at_end() const { return toks_[pos_].kind == Token::end; }
  const Token& peek() const { return toks_[pos_]; }
  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what);
    ++pos_;
  }
  [[noreturn]] void fail(const Token& t, const std::string& why) const {
    throw ParseError(line_, col0_ + t.offset + 1, why);
  }

 private:
  std::pair<Scalar, Word> term() {
    Scalar coef(1);
    bool have_coef = false;
    const Token& t = peek();
    if (t.kind == Token::number) {
      coef = Scalar(parse_rational(t.text));
      ++pos_;
      have_coef = true;
      if (peek().kind == Token::ident && peek().text == "i") {
        coef = coef * Scalar::i();
        ++pos_;
      }
    } else if (t.kind == Token::ident && t.text == "i") {
      coef = Scalar::i();
      ++pos_;
      have_coef = true;
    } else if (t.kind == Token::lparen) {
      const std::size_t open = t.offset;
      ++pos_;
      while (peek().kind != Token::rparen) {
        if (peek().kind == Token::end) fail(peek(), "missing ')'");
        ++pos_;
      }
      const std::size_t close = peek().offset;
      ++pos_;
      try {
        coef = parse_scalar(text_.substr(open + 1, close - open - 1));
      } catch (const std::exception& e) {
        throw ParseError(line_, col0_ + open + 1, e.what());
      }
      have_coef = true;
    }
    Word w = letters();
    if (!have_coef && w.empty()) fail(peek(), "expected a term");
    return {coef, w};
  }

  Word letters() {
    Word w;
    while (peek().kind == Token::ident) {
      const Token& t = peek();
      if (t.text == "i") fail(t, "'i' is the imaginary unit, not a generator");
      auto g = p_.find(t.text);
      if (!g) fail(t, "unknown symbol '" + t.text + "'");
      w.push_back(*g);
      ++pos_;
    }
    return w;
  }

  const Presentation& p_;
  std::string_view text_;
  std::size_t line_;
  std::size_t col0_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

struct Line {
  std::size_t number;
  std::size_t col0;  // 0-based column of `text` within the source line
  std::string text;
};

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (lead) *lead = b;
  return s.substr(b, e - b);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Splits "lhs = rhs" at the first '='.
std::pair<Line, Line> split_assignment(const Line& l) {
  const auto eq = l.text.find('=');
  if (eq == std::string::npos) throw ParseError(l.number, l.col0 + 1, "expected '='");
  std::size_t lead_l = 0;
  std::size_t lead_r = 0;
  auto lhs = trim(std::string_view(l.text).substr(0, eq), &lead_l);
  auto rhs = trim(std::string_view(l.text).substr(eq + 1), &lead_r);
  if (lhs.empty()) throw ParseError(l.number, l.col0 + 1, "missing left side");
  if (rhs.empty()) throw ParseError(l.number, l.col0 + eq + 2, "missing right side");
  return {Line{l.number, l.col0 + lead_l, std::string(lhs)},
          Line{l.number, l.col0 + eq + 1 + lead_r, std::string(rhs)}};
}

Scalar scalar_at(const Line& l) {
  try {
    return parse_scalar(l.text);
  } catch (const std::exception& e) {
    throw ParseError(l.number, l.col0 + 1, e.what());
  }
}

std::size_t column_of(const Line& l, std::string_view token) {
  const auto pos = l.text.find(token);
  return l.col0 + (pos == std::string::npos ? 0 : pos) + 1;
}

Word parse_monomial_key(const Presentation& p, const Line& l) {
  ExprParser ep(p, l.text, l.number, l.col0);
  Word w = ep.word_only();
  if (!ep.at_end()) ep.fail(ep.peek(), "expected a single monomial");
  return w;
}

void parse_algebra_section(Presentation& p, const std::vector<Line>& lines) {
  std::optional<Line> gens_line;
  std::optional<Line> inv_line;
  std::optional<Line> grade_line;
  for (const auto& l : lines) {
    auto [key, value] = split_assignment(l);
    if (key.text == "name") {
      std::string name;
      for (char c : value.text)
        if (!std::isspace(static_cast<unsigned char>(c))) name.push_back(c);
      p.name = name;
    } else if (key.text == "generators") {
      gens_line = value;
    } else if (key.text == "involution") {
      inv_line = value;
    } else if (key.text == "grade") {
      grade_line = value;
    } else {
      throw ParseError(key.number, key.col0 + 1, "unknown key '" + key.text + "'");
    }
  }
  if (!gens_line) throw ParseError(lines.empty() ? 1 : lines.front().number, 1, "missing generators");
  for (const auto& g : split_ws(gens_line->text)) {
    const auto col = column_of(*gens_line, g);
    if (!is_identifier(g) || g == "i" || g == "t")
      throw ParseError(gens_line->number, col, "invalid generator name '" + g + "'");
    if (p.find(g)) throw ParseError(gens_line->number, col, "duplicate generator '" + g + "'");
    p.generators.push_back(g);
  }
  if (p.generators.empty()) throw ParseError(gens_line->number, gens_line->col0 + 1, "no generators");
  if (p.generators.size() > 255) throw ParseError(gens_line->number, 1, "too many generators");

  const std::size_t n = p.generators.size();
  constexpr Gen unset = 255;
  p.star.assign(n, unset);
  if (!inv_line) throw ParseError(gens_line->number, 1, "missing involution");
  auto assign_star = [&](Gen a, Gen b, std::size_t col) {
    if ((p.star[a] != unset && p.star[a] != b) || (p.star[b] != unset && p.star[b] != a))
      throw ParseError(inv_line->number, col, "non-involutive pairing");
    p.star[a] = b;
    p.star[b] = a;
  };
  for (const auto& pair : split_ws(inv_line->text)) {
    const auto col = column_of(*inv_line, pair);
    const auto colon = pair.find(':');
    if (colon == std::string::npos) throw ParseError(inv_line->number, col, "expected 'g:h'");
    auto a = p.find(pair.substr(0, colon));
    auto b = p.find(pair.substr(colon + 1));
    if (!a || !b) throw ParseError(inv_line->number, col, "unknown symbol in '" + pair + "'");
    assign_star(*a, *b, col);
  }
  for (std::size_t g = 0; g < n; ++g)
    if (p.star[g] == unset)
      throw ParseError(inv_line->number, inv_line->col0 + 1,
                       "involution does not cover '" + p.generators[g] + "'");

  p.grade.assign(n, 1);
  if (grade_line) {
    for (const auto& entry : split_ws(grade_line->text)) {
      const auto col = column_of(*grade_line, entry);
      const auto colon = entry.find(':');
      if (colon == std::string::npos) throw ParseError(grade_line->number, col, "expected 'g:n'");
      auto g = p.find(entry.substr(0, colon));
      if (!g) throw ParseError(grade_line->number, col, "unknown symbol in '" + entry + "'");
      const std::string num = entry.substr(colon + 1);
      if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit))
        throw ParseError(grade_line->number, col, "grade must be a nonnegative integer");
      p.grade[*g] = static_cast<unsigned>(std::stoul(num));
    }
  }
  for (std::size_t g = 0; g < n; ++g)
    if (p.grade[g] != p.grade[p.star[g]])
      throw ParseError(grade_line ? grade_line->number : inv_line->number, 1,
                       "grade of '" + p.generators[g] + "' differs from its adjoint");
}

void parse_braiding_section(Presentation& p, const std::vector<Line>& lines) {
  const std::size_t n = p.size();
  bool kind_seen = false;
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  p.braid_table.assign(n, std::vector<Scalar>(n, Scalar(1)));
  std::size_t last_line = 1;
  for (const auto& l : lines) {
    last_line = l.number;
    auto [key, value] = split_assignment(l);
    if (key.text == "kind") {
      if (value.text == "graded-sign") {
        p.braiding = BraidingKind::graded_sign;
      } else if (value.text == "diagonal") {
        p.braiding = BraidingKind::diagonal;
      } else {
        throw ParseError(value.number, value.col0 + 1, "unknown braiding kind '" + value.text + "'");
      }
      kind_seen = true;
      continue;
    }
    ExprParser ep(p, key.text, key.number, key.col0);
    const Word pair = ep.word_only();
    if (pair.size() != 2 || !ep.at_end())
      throw ParseError(key.number, key.col0 + 1, "expected 'g h = scalar'");
    const Scalar c = scalar_at(value);
    if (c.is_zero()) throw ParseError(value.number, value.col0 + 1, "braiding coefficient must be nonzero");
    p.braid_table[pair[0]][pair[1]] = c;
    seen[pair[0]][pair[1]] = true;
  }
  if (!kind_seen) p.braiding = BraidingKind::graded_sign;
  if (p.braiding == BraidingKind::graded_sign) {
    p.braid_table.clear();
    return;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!seen[a][b])
        throw ParseError(last_line, 1,
                         "missing braiding coefficient for '" + p.generators[a] + " " +
                             p.generators[b] + "'");
}

void parse_relations_section(Presentation& p, const std::vector<Line>& lines) {
  for (const auto& l : lines) {
    auto [key, value] = split_assignment(l);
    ExprParser lp(p, key.text, key.number, key.col0);
    const Word lhs = lp.word_only();
    if (lhs.size() != 2 || !lp.at_end())
      throw ParseError(key.number, key.col0 + 1, "relation left side must be two letters");
    if (lhs[0] <= lhs[1])
      throw ParseError(key.number, key.col0 + 1, "relation left side is already in normal order");
    ExprParser rp(p, value.text, value.number, value.col0);
    const Element rhs = rp.element();
    Word sorted_lhs = lhs;
    std::sort(sorted_lhs.begin(), sorted_lhs.end());
    for (const auto& [w, c] : rhs.terms()) {
      if (w.empty()) continue;
      Word sorted = w;
      std::sort(sorted.begin(), sorted.end());
      if (w.size() != 2 || w[0] > w[1] || sorted != sorted_lhs)
        throw ParseError(value.number, value.col0 + 1,
                         "relation right side must be the reordered letters plus a constant");
    }
    p.rules.push_back({lhs, rhs});
  }
}

void parse_cocycle_section(Presentation& p, const std::vector<Line>& lines) {
  for (const auto& l : lines) {
    auto [key, value] = split_assignment(l);
    const auto bar = key.text.find('|');
    if (bar == std::string::npos) throw ParseError(key.number, key.col0 + 1, "expected 'm | n = scalar'");
    Line left{key.number, key.col0, key.text.substr(0, bar)};
    Line right{key.number, key.col0 + bar + 1, key.text.substr(bar + 1)};
    const Word m = parse_monomial_key(p, left);
    const Word n = parse_monomial_key(p, right);
    if (m.empty() || n.empty()) throw ParseError(key.number, key.col0 + 1, "cocycle keys must not be the unit");
    if (!p.is_normal(m) || !p.is_normal(n))
      throw ParseError(key.number, key.col0 + 1, "cocycle keys must be normal forms");
    const Scalar c = scalar_at(value);
    if (!c.is_zero()) p.cocycle[{m, n}] = c;
  }
}

void parse_antipode_section(Presentation& p, const std::vector<Line>& lines) {
  p.antipode.clear();
  for (std::size_t g = 0; g < p.size(); ++g) p.antipode.emplace_back(Word{static_cast<Gen>(g)}, TPoly(-1));
  for (const auto& l : lines) {
    auto [key, value] = split_assignment(l);
    auto g = p.find(key.text);
    if (!g) throw ParseError(key.number, key.col0 + 1, "unknown symbol '" + key.text + "'");
    ExprParser ep(p, value.text, value.number, value.col0);
    p.antipode[*g] = ep.element();
  }
}

}  // namespace

std::string instantiate_template(std::string_view text, const Scalar& q) {
  auto wrap = [](const Scalar& s) {
    const std::string body = to_string(s);
    return s.is_real() ? body : "(" + body + ")";
  };
  const std::string q_text = wrap(q);
  const std::string qinv_text = wrap(q.inverse());
  std::string out(text);
  auto replace_all = [&](const std::string& from, const std::string& to) {
    for (std::size_t pos = out.find(from); pos != std::string::npos; pos = out.find(from, pos + to.size()))
      out.replace(pos, from.size(), to);
  };
  replace_all("{1/q}", qinv_text);
  replace_all("{q}", q_text);
  return out;
}

Presentation parse_presentation(std::string_view text, const Scalar& q) {
  return parse_presentation(instantiate_template(text, q));
}

Presentation parse_presentation(std::string_view text) {
  static const std::set<std::string> known = {"algebra", "braiding", "relations", "cocycle", "antipode"};
  std::map<std::string, std::vector<Line>> sections;
  std::map<std::string, std::size_t> header_line;
  std::string current;
  std::size_t number = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    auto end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(begin, end - begin);
    begin = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t lead = 0;
    std::string_view body = trim(raw, &lead);
    if (body.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (body.front() == '[') {
      if (body.find('{') != std::string_view::npos)
        throw ParseError(number, lead + 1, "unresolved template placeholder");
      const auto close = body.find(']');
      if (close == std::string_view::npos) throw ParseError(number, lead + 1, "unterminated section header");
      current = std::string(trim(body.substr(1, close - 1)));
      if (!known.count(current)) throw ParseError(number, lead + 2, "unknown section '" + current + "'");
      if (header_line.count(current)) throw ParseError(number, lead + 1, "duplicate section '" + current + "'");
      header_line[current] = number;
      sections[current];
      std::size_t lead2 = 0;
      auto rest = trim(body.substr(close + 1), &lead2);
      if (!rest.empty()) sections[current].push_back({number, lead + close + 1 + lead2, std::string(rest)});
    } else {
      if (current.empty()) throw ParseError(number, lead + 1, "content outside a section");
      if (body.find('{') != std::string_view::npos)
        throw ParseError(number, lead + body.find('{') + 1, "unresolved template placeholder");
      sections[current].push_back({number, lead, std::string(body)});
    }
    if (end == text.size()) break;
  }
  if (!sections.count("algebra")) throw ParseError(1, 1, "missing [algebra] section");

  Presentation p;
  parse_algebra_section(p, sections["algebra"]);
  parse_braiding_section(p, sections["braiding"]);
  parse_relations_section(p, sections["relations"]);
  parse_cocycle_section(p, sections["cocycle"]);
  parse_antipode_section(p, sections["antipode"]);
  return p;
}

Presentation load_presentation(const std::string& path, const std::optional<Scalar>& q) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return q ? parse_presentation(ss.str(), *q) : parse_presentation(ss.str());
}

Element parse_element(const Presentation& p, std::string_view text) {
  ExprParser ep(p, text, 1, 0);
  return ep.element();
}

std::map<Word, Scalar> parse_monomial_table(const Presentation& p, std::string_view text) {
  std::map<Word, Scalar> out;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::size_t lead = 0;
    auto body = trim(raw, &lead);
    if (body.empty() || body.front() == '[') continue;
    auto [key, value] = split_assignment(Line{number, lead, std::string(body)});
    const Word w = parse_monomial_key(p, key);
    if (!p.is_normal(w)) throw ParseError(number, key.col0 + 1, "table keys must be normal forms");
    const Scalar c = scalar_at(value);
    if (!c.is_zero()) out[w] = c;
  }
  return out;
}

std::string format_word(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += p.generators.at(w[k]);
  }
  return out;
}

std::string format_tuple(const Presentation& p, const Tuple& t) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += " ⊗ ";
    out += format_word(p, t[k]);
  }
  return out;
}

namespace {

// Splits a coefficient into (negative?, printable body); body is empty for 1.
std::pair<bool, std::string> coefficient_parts(const TPoly& c) {
  std::size_t nonzero = 0;
  std::size_t power = 0;
  for (std::size_t k = 0; k < c.coeffs().size(); ++k)
    if (!c.coeffs()[k].is_zero()) {
      ++nonzero;
      power = k;
    }
  if (nonzero != 1) return {false, "(" + to_string(c) + ")"};
  Scalar a = c.coeffs()[power];
  bool negative = false;
  if ((a.is_real() && sgn(a.re()) < 0) || (sgn(a.re()) == 0 && sgn(a.im()) < 0)) {
    negative = true;
    a = -a;
  }
  std::string body;
  if (!a.is_one() || power == 0) {
    body = to_string(a);
    if (!a.is_real() && sgn(a.re()) != 0) body = "(" + body + ")";
    if (a.is_one()) body.clear();
  }
  if (power > 0) {
    if (!body.empty()) body += ' ';
    body += 't';
    if (power > 1) body += '^' + std::to_string(power);
  }
  return {negative, body};
}

template <class Key, class Printer, class Degree>
std::string format_terms(const std::map<Key, TPoly>& terms, Printer print_key, Degree degree_key) {
  if (terms.empty()) return "0";
  std::vector<const std::pair<const Key, TPoly>*> order;
  for (const auto& kv : terms) order.push_back(&kv);
  std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    const auto da = degree_key(a->first);
    const auto db = degree_key(b->first);
    if (da != db) return da > db;
    return a->first < b->first;
  });
  std::string out;
  bool first = true;
  for (const auto* kv : order) {
    auto [negative, body] = coefficient_parts(kv->second);
    std::string key = print_key(kv->first);
    if (body.empty() && key.front() == '(') key = key.substr(1, key.size() - 2);
    std::string term;
    if (key == "1") {
      term = body.empty() ? "1" : body;
    } else {
      term = body.empty() ? key : body + " " + key;
    }
    if (first) {
      out += negative ? "- " + term : term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string format(const Presentation& p, const Element& e) {
  return format_terms(
      e.terms(), [&](const Word& w) { return format_word(p, w); },
      [](const Word& w) { return w.size(); });
}

std::string format(const Presentation& p, const Tensor& u) {
  if (u.rank() == 0) return to_string(u.value());
  return format_terms(
      u.terms(),
      [&](const Tuple& t) { return t.size() < 2 ? format_tuple(p, t) : "(" + format_tuple(p, t) + ")"; },
      [](const Tuple& t) {
        std::vector<long> key;
        for (const auto& w : t) key.push_back(static_cast<long>(w.size()));
        return key;
      });
}

std::string to_text(const Presentation& p) {
  std::ostringstream os;
  os << "[algebra]\n";
  os << "name = " << p.name << "\n";
  os << "generators =";
  for (const auto& g : p.generators) os << ' ' << g;
  os << "\ninvolution =";
  for (std::size_t g = 0; g < p.size(); ++g)
    if (g <= p.star[g]) os << ' ' << p.generators[g] << ':' << p.generators[p.star[g]];
  os << "\ngrade =";
  for (std::size_t g = 0; g < p.size(); ++g) os << ' ' << p.generators[g] << ':' << p.grade[g];
  os << "\n\n[braiding]\n";
  if (p.braiding == BraidingKind::graded_sign) {
    os << "kind = graded-sign\n";
  } else {
    os << "kind = diagonal\n";
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        os << p.generators[a] << ' ' << p.generators[b] << " = " << to_string(p.braid_table[a][b]) << "\n";
  }
  os << "\n[relations]\n";
  for (const auto& r : p.rules) os << format_word(p, r.lhs) << " = " << format(p, r.rhs) << "\n";
  os << "\n[cocycle]\n";
  for (const auto& [key, c] : p.cocycle)
    os << format_word(p, key.first) << " | " << format_word(p, key.second) << " = " << to_string(c) << "\n";
  os << "\n[antipode]\n";
  for (std::size_t g = 0; g < p.size(); ++g)
    os << p.generators[g] << " = " << format(p, p.antipode[g]) << "\n";
  return os.str();
}

}  // namespace bhopf
