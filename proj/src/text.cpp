#include "tsgcd/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace tsgcd {

VarContext VarContext::standard(int n) {
  VarContext c;
  for (int i = 1; i <= n; ++i) c.zvars.push_back("z" + std::to_string(i));
  return c;
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const VarContext& ctx) : s_(s), ctx_(ctx), top_(ctx.top()) {}

  QPoly parse() {
    QPoly r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  QPoly expr() {
    QPoly acc(top_);
    bool first = true;
    for (;;) {
      bool negate = false;
      if (eat('-')) {
        negate = true;
      } else if (eat('+')) {
      } else if (!first) {
        return acc;
      }
      add_into(f_, acc, term(), negate);
      first = false;
    }
  }

  QPoly term() {
    QPoly acc = factor();
    while (eat('*')) acc = mul(f_, acc, factor());
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      throw ParseError("division is only allowed between integer literals", pos_);
    }
    return acc;
  }

  QPoly factor() {
    if (eat('-')) return neg(f_, factor());
    if (eat('+')) return factor();
    QPoly base = atom();
    if (eat('^')) {
      const std::size_t at = pos_;
      mpz_class e = integer();
      if (!e.fits_uint_p() || e > 10000) throw ParseError("exponent too large", at);
      base = pow(f_, base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  QPoly atom() {
    skip();
    const std::size_t start = pos_;
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    if (at_digit()) {
      mpq_class c(integer());
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (!at_digit()) throw ParseError("division is only allowed between integer literals", pos_);
        const std::size_t dpos = pos_;
        mpz_class d = integer();
        if (d == 0) throw ParseError("zero denominator", dpos);
        c /= mpq_class(d);
        c.canonicalize();
      }
      return QPoly::constant(top_, c);
    }
    if (eat('(')) {
      QPoly r = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (name == ctx_.main) return variable(f_, top_, top_);
      auto it = std::find(ctx_.zvars.begin(), ctx_.zvars.end(), name);
      if (it == ctx_.zvars.end()) throw ParseError("unknown variable '" + name + "'", start);
      return variable(f_, top_, static_cast<int>(it - ctx_.zvars.begin()) + 1);
    }
    throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
  }

  std::string_view s_;
  const VarContext& ctx_;
  int top_;
  RationalField f_;
  std::size_t pos_ = 0;
};

// Exponents indexed by level, highest level first.
using Monomial = std::vector<int>;

void collect(const QPoly& a, Monomial& cur, int top, std::vector<std::pair<Monomial, mpq_class>>& out) {
  if (a.level() == 0) {
    if (!a.is_zero()) out.emplace_back(cur, a.value());
    return;
  }
  for (int i = a.degree(); i >= 0; --i) {
    cur[static_cast<std::size_t>(top - a.level())] = i;
    collect(a.term(static_cast<std::size_t>(i)), cur, top, out);
  }
  cur[static_cast<std::size_t>(top - a.level())] = 0;
}

}  // namespace

QPoly parse_poly(std::string_view s, const VarContext& ctx) { return Parser(s, ctx).parse(); }

std::string format_poly(const QPoly& a, const VarContext& ctx) {
  if (a.is_zero()) return "0";
  const int top = a.level();
  auto name = [&](int level) -> const std::string& {
    if (level == ctx.top()) return ctx.main;
    return ctx.zvars.at(static_cast<std::size_t>(level - 1));
  };
  Monomial cur(static_cast<std::size_t>(top), 0);
  std::vector<std::pair<Monomial, mpq_class>> terms;
  collect(a, cur, top, terms);

  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [mono, c] = terms[i];
    const bool negative = sgn(c) < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const mpq_class mag = abs(c);
    std::string vars;
    for (std::size_t j = 0; j < mono.size(); ++j) {
      if (mono[j] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += name(top - static_cast<int>(j));
      if (mono[j] > 1) vars += "^" + std::to_string(mono[j]);
    }
    if (vars.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += vars;
    } else {
      out += mag.get_str() + "*" + vars;
    }
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

TsetFile parse_tset(std::string_view text) {
  TsetFile out;
  std::optional<std::vector<std::string>> vars;
  std::map<int, std::pair<std::string, int>> lines;  // index -> (expr, line number)
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw TsetError("line " + std::to_string(lineno) + ": expected 'key: value'");
    const std::string key = trim(std::string_view(line).substr(0, colon));
    const std::string value = trim(std::string_view(line).substr(colon + 1));
    if (key == "vars") {
      std::istringstream vs(value);
      std::vector<std::string> names;
      for (std::string w; vs >> w;) names.push_back(w);
      vars = std::move(names);
    } else if (key == "main") {
      out.vars.main = value;
    } else if (key.size() > 1 && key[0] == 't' &&
               std::all_of(key.begin() + 1, key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const int idx = std::stoi(key.substr(1));
      if (!lines.emplace(idx, std::make_pair(value, lineno)).second) {
        throw TsetError("line " + std::to_string(lineno) + ": duplicate " + key);
      }
    } else {
      throw TsetError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!vars) throw TsetError("missing 'vars:' header");
  out.vars.zvars = *vars;
  const int n = static_cast<int>(vars->size());
  for (const auto& name : *vars) {
    if (name == out.vars.main) throw TsetError("variable '" + name + "' is both algebraic and main");
  }
  if (static_cast<int>(lines.size()) != n || (n > 0 && (lines.begin()->first != 1 || lines.rbegin()->first != n))) {
    throw TsetError("condition (i): expected exactly t1..t" + std::to_string(n) + " for " + std::to_string(n) +
                    " variables");
  }
  std::vector<QPoly> gens;
  for (const auto& [idx, entry] : lines) {
    QPoly p;
    try {
      p = parse_poly(entry.first, out.vars);
    } catch (const ParseError& e) {
      throw TsetError("line " + std::to_string(entry.second) + ": " + e.what());
    }
    const std::string& zi = out.vars.zvars[static_cast<std::size_t>(idx - 1)];
    for (int lvl = n + 1; lvl > idx; --lvl) {
      if (degree_in(p, lvl) > 0) {
        throw TsetError("condition (ii): t" + std::to_string(idx) + " involves a variable above " + zi);
      }
    }
    p = lower_level(std::move(p), idx);
    if (p.degree() < 1) throw TsetError("condition (ii): main variable of t" + std::to_string(idx) + " must be " + zi);
    if (!p.is_monic()) throw TsetError("condition (iii): t" + std::to_string(idx) + " is not monic in " + zi);
    for (int j = 1; j < idx; ++j) {
      if (degree_in(p, j) >= gens[static_cast<std::size_t>(j - 1)].degree()) {
        throw TsetError("condition (iv): t" + std::to_string(idx) + " is not reduced with respect to t" +
                        std::to_string(j));
      }
    }
    gens.push_back(std::move(p));
  }
  out.tset = QTset(RationalField{}, std::move(gens));
  return out;
}

TsetFile read_tset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TsetError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tset(ss.str());
}

std::vector<std::string> format_tset(const QTset& T, const VarContext& ctx) {
  std::vector<std::string> out;
  for (const auto& t : T.gens()) out.push_back(format_poly(raise_level(t, ctx.top()), ctx));
  return out;
}

}  // namespace tsgcd
