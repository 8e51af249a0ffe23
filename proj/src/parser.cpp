#include "nilg2/parser.hpp"

#include <cctype>
#include <sstream>

namespace nilg2 {

namespace {

void replaceAll(std::string& s, const std::string& from, const std::string& to) {
  size_t p = 0;
  while ((p = s.find(from, p)) != std::string::npos) {
    s.replace(p, from.size(), to);
    p += to.size();
  }
}

// rewrite \frac{A}{B} as ((A)/(B))
void rewriteFrac(std::string& s) {
  size_t p;
  while ((p = s.find("\\frac")) != std::string::npos) {
    size_t a = s.find('{', p);
    if (a == std::string::npos) throw ParseError("malformed fraction", p);
    int depth = 1;
    size_t b = a + 1;
    while (b < s.size() && depth) {
      if (s[b] == '{') ++depth;
      if (s[b] == '}') --depth;
      ++b;
    }
    size_t c = s.find('{', b);
    if (depth || c == std::string::npos) throw ParseError("malformed fraction", p);
    depth = 1;
    size_t d = c + 1;
    while (d < s.size() && depth) {
      if (s[d] == '{') ++depth;
      if (s[d] == '}') --depth;
      ++d;
    }
    if (depth) throw ParseError("malformed fraction", p);
    std::string num = s.substr(a + 1, b - a - 2);
    std::string den = s.substr(c + 1, d - c - 2);
    s.replace(p, d - p, "((" + num + ")/(" + den + "))");
  }
}

std::string normalize(const std::string& raw, std::vector<std::string>& notes) {
  std::string s = raw;
  replaceAll(s, "\\muup", "mu");
  replaceAll(s, "\\mu", "mu");
  replaceAll(s, "μ", "mu");
  rewriteFrac(s);
  replaceAll(s, "$", "");
  replaceAll(s, "\\;", "");
  replaceAll(s, "\\,", "");
  replaceAll(s, "\\ ", " ");
  // balance stray outer parentheses
  int opens = 0, closes = 0;
  for (char c : s) {
    if (c == '(') ++opens;
    if (c == ')') ++closes;
  }
  size_t first = s.find_first_not_of(" \t");
  if (closes == opens + 1 && (first == std::string::npos || s[first] != '('))
    s.insert(first == std::string::npos ? 0 : first, "(");
  else if (opens == closes + 1)
    s += ")";
  // drop anything after the outermost close (table cells carry bindings there)
  first = s.find('(');
  if (first != std::string::npos) {
    int depth = 0;
    for (size_t i = first; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0) {
        if (s.find_first_not_of(" \t", i + 1) != std::string::npos)
          notes.push_back("trailing annotation after close ignored");
        s = s.substr(0, i + 1);
        break;
      }
    }
  }
  return s;
}

struct SlotParser {
  const std::string& s;
  size_t i, end;
  int n;

  void ws() {
    while (i < end && std::isspace((unsigned char)s[i])) ++i;
  }
  bool done() {
    ws();
    return i >= end;
  }
  char peek() {
    ws();
    return i < end ? s[i] : '\0';
  }
  bool eat(char c) {
    ws();
    if (i < end && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eatWord(const char* w) {
    ws();
    size_t len = std::char_traits<char>::length(w);
    if (s.compare(i, len, w) == 0) {
      i += len;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& m) { throw ParseError(m, i); }

  long readInt() {
    ws();
    size_t start = i;
    while (i < end && std::isdigit((unsigned char)s[i])) ++i;
    if (i == start) fail("number expected");
    return std::stol(s.substr(start, i - start));
  }

  // arithmetic over rationals and mu inside parentheses
  Poly parseExpr() {
    Poly acc = parseProduct();
    for (;;) {
      if (eat('+'))
        acc += parseProduct();
      else if (eat('-'))
        acc -= parseProduct();
      else
        return acc;
    }
  }
  Poly parseProduct() {
    Poly acc = parseUnary();
    for (;;) {
      if (eat('*'))
        acc *= parseUnary();
      else if (eat('/')) {
        Poly d = parseUnary();
        if (!d.isConstant() || d.isZero()) fail("division must be by a nonzero constant");
        acc /= d;
      } else
        return acc;
    }
  }
  Poly parseUnary() {
    if (eat('-')) return -parseUnary();
    eat('+');
    if (eat('(')) {
      Poly inner = parseExpr();
      if (!eat(')')) fail("')' expected");
      return inner;
    }
    if (eatWord("mu")) return Poly::variable(0, 1);
    return Poly(Rat(readInt()), 1);
  }

  void addPair(FormT<Poly>& out, const Poly& c, int d1, int d2, size_t at) {
    if (d1 < 1 || d2 < 1 || d1 > n || d2 > n) throw ParseError("frame index out of range", at);
    if (d1 >= d2) throw ParseError("duplicate or descending index pair", at);
    out.coeff({d1, d2}) += c;
  }

  // one summand: optional coefficient factors, then an index pair or a
  // bracketed group the coefficient distributes over
  void parseTerm(FormT<Poly>& out, int sign) {
    Poly c(Rat(sign), 1);
    for (;;) {
      ws();
      if (i >= end) fail("index pair expected");
      char ch = s[i];
      if (eatWord("mu")) {
        c *= Poly::variable(0, 1);
        eat('*');
        continue;
      }
      if (ch == '(') {
        ++i;
        Poly f = parseExpr();
        if (!eat(')')) fail("')' expected");
        c *= f;
        eat('*');
        continue;
      }
      if (ch == '[') {
        ++i;
        FormT<Poly> grp(n, 2);
        parseSum(grp);
        if (!eat(']')) fail("']' expected");
        out = out + grp.scaled(c);
        return;
      }
      if (std::isdigit((unsigned char)ch)) {
        size_t at = i;
        size_t start = i;
        while (i < end && std::isdigit((unsigned char)s[i])) ++i;
        size_t len = i - start;
        if (i < end && s[i] == '/') {
          ++i;
          long num = std::stol(s.substr(start, len));
          long den = readInt();
          if (den == 0) fail("zero denominator");
          Rat q(num, den);
          q.canonicalize();
          c *= Poly(q, 1);
          eat('*');
          continue;
        }
        if (len == 2 && !(i < end && s[i] == '*')) {
          addPair(out, c, s[start] - '0', s[start + 1] - '0', at);
          return;
        }
        if (len == 1 || (len == 2 && i < end && s[i] == '*')) {
          c *= Poly(Rat(std::stol(s.substr(start, len))), 1);
          eat('*');
          continue;
        }
        throw ParseError("malformed index pair", at);
      }
      fail("index pair expected");
    }
  }

  void parseSum(FormT<Poly>& out) {
    int sign = 1;
    if (eat('-'))
      sign = -1;
    else
      eat('+');
    for (;;) {
      parseTerm(out, sign);
      if (eat('+'))
        sign = 1;
      else if (eat('-'))
        sign = -1;
      else
        return;
    }
  }

  FormT<Poly> parseSlot() {
    FormT<Poly> out(n, 2);
    ws();
    if (i < end && s[i] == '0') {
      size_t save = i++;
      if (done()) return out;
      i = save;
    }
    parseSum(out);
    if (!done()) fail("unexpected trailing input in slot");
    return out;
  }
};

}  // namespace

ParsedAlgebra parseAlgebra(const std::string& text, ParseMode mode) {
  ParsedAlgebra pa;
  std::string s = text;
  if (mode == ParseMode::Tolerant) s = normalize(text, pa.corrections);

  size_t open = s.find_first_not_of(" \t");
  if (open == std::string::npos || s[open] != '(') throw ParseError("'(' expected", 0);
  // split at depth-zero commas
  std::vector<std::pair<size_t, size_t>> spans;
  int depth = 0;
  size_t start = open + 1, close = std::string::npos;
  for (size_t i = open; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') {
      --depth;
      if (depth == 0) {
        spans.emplace_back(start, i);
        close = i;
        break;
      }
    }
    if (c == ',' && depth == 1) {
      spans.emplace_back(start, i);
      start = i + 1;
    }
  }
  if (close == std::string::npos) throw ParseError("unbalanced parentheses", open);
  if (s.find_first_not_of(" \t", close + 1) != std::string::npos)
    throw ParseError("unexpected trailing input", close + 1);

  // doubled commas produce empty slots; only tolerant mode repairs them
  std::vector<std::pair<size_t, size_t>> kept;
  for (size_t k = 0; k < spans.size(); ++k) {
    auto [a, b] = spans[k];
    if (s.find_first_not_of(" \t", a) >= b) {
      if (mode == ParseMode::Strict) throw ParseError("empty slot", a);
      pa.corrections.push_back("empty slot " + std::to_string(k + 1) +
                               " dropped (doubled comma)");
      continue;
    }
    kept.push_back({a, b});
  }
  if (kept.size() != 6 && kept.size() != 7)
    throw ParseError("malformed slot count: " + std::to_string(kept.size()), open);

  pa.n = (int)kept.size();
  for (auto [a, b] : kept) {
    SlotParser sp{s, a, b, pa.n};
    pa.df.push_back(sp.parseSlot());
  }
  for (auto& f : pa.df)
    for (auto& c : f.c)
      if (!c.isConstant()) pa.symbolic = true;
  return pa;
}

LieAlg instantiate(const ParsedAlgebra& pa, const Rat& mu) {
  LieAlg g = LieAlg::abelian(pa.n);
  std::vector<Rat> at{mu};
  for (int k = 0; k < pa.n; ++k)
    for (size_t i = 0; i < pa.df[k].c.size(); ++i) g.df[k].c[i] = pa.df[k].c[i].eval(at);
  return g;
}

LieAlg parseStructure(const std::string& text, std::optional<Rat> mu, ParseMode mode) {
  ParsedAlgebra pa = parseAlgebra(text, mode);
  if (pa.symbolic && !mu) throw ParseError("unbound parameter mu", 0);
  return instantiate(pa, mu.value_or(Rat(0)));
}

namespace {

std::string coeffString(const Poly& c, bool lead) {
  std::ostringstream os;
  if (c.isConstant()) {
    Rat q = c.constValue();
    if (!lead) os << (sgn(q) < 0 ? "-" : "+");
    else if (sgn(q) < 0)
      os << "-";
    Rat a = abs(q);
    if (a != 1) {
      if (a.get_den() == 1)
        os << a.get_str() << "*";
      else
        os << "(" << a.get_str() << ")*";
    }
    return os.str();
  }
  // single monomial +-k*mu^e prints bare; general polynomials in parens
  if (c.t.size() == 1) {
    auto& [m, v] = *c.t.begin();
    if (!lead) os << (sgn(v) < 0 ? "-" : "+");
    else if (sgn(v) < 0)
      os << "-";
    Rat a = abs(v);
    if (a != 1) {
      if (a.get_den() == 1)
        os << a.get_str() << "*";
      else
        os << "(" << a.get_str() << ")*";
    }
    os << "mu";
    if (m[0] > 1) os << "^" << (int)m[0];  // never occurs in the tables
    os << " ";
    return os.str();
  }
  std::string body = c.toString({"mu"});
  replaceAll(body, " ", "");
  if (!lead) os << "+";
  os << "(" << body << ")*";
  return os.str();
}

template <class Get>
std::string render(int n, Get slotCoeff) {
  std::ostringstream os;
  os << "(";
  auto subs = allSubsets(n, 2);
  for (int k = 0; k < n; ++k) {
    if (k) os << ",";
    bool lead = true;
    std::string slot;
    for (size_t i = 0; i < subs.size(); ++i) {
      Poly c = slotCoeff(k, i);
      if (c.isZero()) continue;
      slot += coeffString(c, lead);
      slot += std::to_string(subs[i][0]) + std::to_string(subs[i][1]);
      lead = false;
    }
    os << (slot.empty() ? "0" : slot);
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string prettyPrint(const ParsedAlgebra& pa) {
  return render(pa.n, [&](int k, size_t i) { return pa.df[k].c[i]; });
}

std::string prettyPrint(const LieAlg& g) {
  return render(g.n, [&](int k, size_t i) { return Poly(g.df[k].c[i], 1); });
}

}  // namespace nilg2
