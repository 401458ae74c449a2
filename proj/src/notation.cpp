#include "hurwitz/notation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <vector>

namespace hurwitz {

namespace {

// Quaternion with a power-of-two denominator; halves appear inside tuples
// and divisions before the final value is known to be a Hurwitz integer.
struct Value {
  HurwitzInt::Coords num{0, 0, 0, 0};
  std::int64_t den = 1;

  static Value scalar(std::int64_t v) { return {{v, 0, 0, 0}, 1}; }
  static Value of(const HurwitzInt& q) { return Value{q.doubled(), 2}.reduced(); }

  Value reduced() const {
    Value v = *this;
    while (v.den > 1 && (v.num[0] | v.num[1] | v.num[2] | v.num[3]) % 2 == 0) {
      for (auto& x : v.num) x /= 2;
      v.den /= 2;
    }
    return v;
  }
  bool is_real() const { return num[1] == 0 && num[2] == 0 && num[3] == 0; }
};

Value rescale(const Value& v, std::int64_t den) {
  Value out = v;
  const auto f = den / v.den;
  for (auto& x : out.num) x = detail::checked_mul(x, f);
  out.den = den;
  return out;
}

Value add(const Value& a, const Value& b, int sign) {
  const auto den = std::max(a.den, b.den);
  auto x = rescale(a, den), y = rescale(b, den);
  for (std::size_t i = 0; i < 4; ++i) {
    x.num[i] = sign > 0 ? detail::checked_add(x.num[i], y.num[i])
                        : detail::checked_sub(x.num[i], y.num[i]);
  }
  return x.reduced();
}

Value mul(const Value& a, const Value& b) {
  return Value{hamilton_product(a.num, b.num), detail::checked_mul(a.den, b.den)}.reduced();
}

HurwitzInt to_hurwitz(const Value& v, std::string_view text) {
  const auto r = v.reduced();
  if (r.den > 2) throw NotationError("'" + std::string(text) + "' is not a Hurwitz integer");
  HurwitzInt::Coords d = r.num;
  if (r.den == 1) {
    for (auto& x : d) x = detail::checked_mul(x, 2);
  }
  try {
    return HurwitzInt::from_doubled(d);
  } catch (const std::invalid_argument&) {
    throw NotationError("'" + std::string(text) + "' is not a Hurwitz integer");
  }
}

std::string normalize(std::string_view in) {
  static const std::pair<std::string_view, std::string_view> kReplacements[] = {
      {"\xce\xb2", "b"},     // beta
      {"\xe2\x88\x92", "-"},  // minus sign
      {"\xc3\xaa", "e"},      // e with circumflex
      {"\xcf\x80", "pi"},
  };
  std::string out;
  for (std::size_t i = 0; i < in.size();) {
    bool replaced = false;
    for (const auto& [from, to] : kReplacements) {
      if (in.substr(i, from.size()) == from) {
        out += to;
        i += from.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out += in[i++];
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const ResidueField* field) : text_(normalize(text)), field_(field) {}

  Value parse() {
    auto v = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw NotationError("cannot parse '" + text_ + "' at position " + std::to_string(pos_) + ": " +
                        what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  std::int64_t integer() {
    skip_space();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) neg = text_[pos_++] == '-';
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      error("expected an integer");
    }
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = detail::checked_add(detail::checked_mul(v, 10), text_[pos_++] - '0');
    }
    return neg ? -v : v;
  }

  Value expr() {
    skip_space();
    Value v;
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else if (!first) {
        break;
      }
      auto t = term();
      v = add(v, t, first && sign > 0 ? 1 : sign);
      first = false;
    }
    return v;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'e' || c == 'w' ||
           c == 'b';
  }

  Value term() {
    auto v = factor();
    while (true) {
      if (accept('*')) {
        v = mul(v, factor());
      } else if (accept('/')) {
        const auto d = integer();
        if (d != 2) error("only division by 2 is supported");
        v = Value{v.num, detail::checked_mul(v.den, 2)}.reduced();
      } else if (starts_factor()) {
        v = mul(v, factor());
      } else {
        return v;
      }
    }
  }

  Value power(const Value& base, std::int64_t k) {
    if (k < 0) error("negative exponent");
    Value r = Value::scalar(1);
    for (std::int64_t i = 0; i < k; ++i) r = mul(r, base);
    return r;
  }

  Value factor() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Value::scalar(integer());
    if (c == '(') return group();
    if (c == 'e') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '3') error("expected e1, e2 or e3");
      const auto i = static_cast<std::size_t>(text_[pos_++] - '0');
      Value v;
      v.num[i] = 1;
      return maybe_power(v);
    }
    if (c == 'w') {
      ++pos_;
      const auto w = Value::of(HurwitzInt::w());
      if (!accept('^')) return w;
      const auto k = ((integer() % 6) + 6) % 6;
      return power(w, k);
    }
    if (c == 'b') {
      ++pos_;
      if (!field_) error("b (the primitive element) needs a field");
      std::int64_t k = 1;
      if (accept('^')) k = integer();
      return Value::of(field_->beta_power(k).to_hurwitz());
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  Value maybe_power(const Value& v) {
    if (!accept('^')) return v;
    return power(v, integer());
  }

  Value group() {
    accept('(');
    std::vector<Value> items{expr()};
    while (accept(',')) items.push_back(expr());
    if (!accept(')')) error("expected ')'");
    Value v;
    if (items.size() == 1) {
      v = items[0];
    } else if (items.size() == 2) {
      v = add(items[0], mul(items[1], Value::of(HurwitzInt::w())), 1);
    } else if (items.size() == 4) {
      for (const auto& it : items) {
        if (!it.is_real()) error("tuple coordinates must be real numbers");
      }
      std::int64_t den = 1;
      for (const auto& it : items) den = std::max(den, it.den);
      for (std::size_t i = 0; i < 4; ++i) v.num[i] = rescale(items[i], den).num[0];
      v.den = den;
      v = v.reduced();
    } else {
      error("tuples have two or four entries");
    }
    return maybe_power(v);
  }

  std::string text_;
  const ResidueField* field_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == sep && depth == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

HurwitzInt parse_element(std::string_view text, const ResidueField* field) {
  if (trim(text).empty()) throw NotationError("empty element");
  return to_hurwitz(Parser(text, field).parse(), text);
}

EisensteinInt parse_eisenstein(std::string_view text, const ResidueField* field) {
  const auto q = parse_element(text, field);
  const auto e = EisensteinInt::from_hurwitz(q);
  if (!e) throw NotationError("'" + std::string(text) + "' is not in Z[w]");
  return *e;
}

CodeVector parse_vector(std::string_view text, const ResidueField* field) {
  auto t = trim(text);
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw NotationError("unbalanced '[' in vector");
    t = trim(t.substr(1, t.size() - 2));
  }
  CodeVector out;
  if (t.empty()) return out;
  for (auto item : split_top_level(t, ',')) out.push_back(parse_element(item, field));
  return out;
}

std::string format_element(const HurwitzInt& x, const ResidueField& field) {
  if (x.is_zero()) return "0";
  if (const auto e = EisensteinInt::from_hurwitz(x); e && field.reduce(*e) == *e) {
    return "b^" + std::to_string(field.dlog(*e));
  }
  return x.to_string();
}

std::string format_vector(std::span<const HurwitzInt> v, const ResidueField& field) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_element(v[i], field);
  return out + ")";
}

std::string format_errors(const ErrorPattern& e, const ResidueField& field) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    out += (i ? "; " : "") + std::string("(") + std::to_string(e[i].location) + ", " +
           format_element(e[i].value, field) + ")";
  }
  return out;
}

ErrorPattern parse_errors(std::string_view text, const ResidueField* field) {
  ErrorPattern out;
  const auto t = trim(text);
  if (t.empty()) return out;
  for (auto item : split_top_level(t, ';')) {
    item = trim(item);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw NotationError("error entry '" + std::string(item) + "' must be location:value");
    }
    const auto loc_text = std::string(trim(item.substr(0, colon)));
    std::size_t used = 0;
    std::int64_t loc = 0;
    try {
      loc = std::stoll(loc_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != loc_text.size()) {
      throw NotationError("bad error location '" + loc_text + "'");
    }
    out.push_back({loc, parse_element(item.substr(colon + 1), field)});
  }
  return out;
}

}  // namespace hurwitz
