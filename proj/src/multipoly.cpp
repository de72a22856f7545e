#include "narayana/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "narayana/errors.hpp"

namespace narayana {

namespace {

constexpr std::string_view kPlainNames[] = {"s", "t", "x", "y", "u", "v", "z"};

VarId indexed(VarKind kind, std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("variable index must be >= 1");
  return VarId{kind, k};
}

}  // namespace

std::string VarId::name() const {
  switch (kind) {
    case VarKind::Xi:
      return "x_" + std::to_string(index);
    case VarKind::Yi:
      return "y_" + std::to_string(index);
    case VarKind::XiHat:
      return "xh_" + std::to_string(index);
    case VarKind::YiHat:
      return "yh_" + std::to_string(index);
    default:
      return std::string(kPlainNames[static_cast<int>(kind)]);
  }
}

VarId VarId::parse(std::string_view text) {
  for (int i = 0; i < 7; ++i)
    if (text == kPlainNames[i]) return VarId{static_cast<VarKind>(i), 0};

  const auto us = text.find('_');
  if (us == std::string_view::npos || us + 1 >= text.size())
    throw ParseError("unknown variable '" + std::string(text) + "'");
  const auto stem = text.substr(0, us);
  const auto digits = text.substr(us + 1);
  std::uint32_t k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || k < 1)
    throw ParseError("bad variable index in '" + std::string(text) + "'");
  if (stem == "x") return VarId{VarKind::Xi, k};
  if (stem == "y") return VarId{VarKind::Yi, k};
  if (stem == "xh") return VarId{VarKind::XiHat, k};
  if (stem == "yh") return VarId{VarKind::YiHat, k};
  throw ParseError("unknown variable '" + std::string(text) + "'");
}

namespace var {
VarId xi(std::uint32_t k) { return indexed(VarKind::Xi, k); }
VarId yi(std::uint32_t k) { return indexed(VarKind::Yi, k); }
VarId xh(std::uint32_t k) { return indexed(VarKind::XiHat, k); }
VarId yh(std::uint32_t k) { return indexed(VarKind::YiHat, k); }
}  // namespace var

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VarId v, int exponent) {
  if (v.indexed() && v.index < 1) throw std::invalid_argument("variable index must be >= 1");
  if (exponent != 0) factors_.emplace_back(v, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
  }
  std::erase_if(m.factors_, [](const Factor& f) { return f.second == 0; });
  return m;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarId w) { return f.first < w; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::with_exponent(VarId v, int e) const {
  Monomial m = *this;
  auto it = std::lower_bound(m.factors_.begin(), m.factors_.end(), v,
                             [](const Factor& f, VarId w) { return f.first < w; });
  if (it != m.factors_.end() && it->first == v) {
    if (e == 0)
      m.factors_.erase(it);
    else
      it->second = e;
  } else if (e != 0) {
    m.factors_.insert(it, {v, e});
  }
  return m;
}

Monomial Monomial::pow(int e) const {
  if (e == 0) return {};
  Monomial m = *this;
  for (auto& f : m.factors_) f.second *= e;
  return m;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (other.factors_.empty()) return *this;
  std::vector<Factor> merged;
  merged.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      if (int e = a->second + b->second; e != 0) merged.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  factors_ = std::move(merged);
  return *this;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    int ea = 0, eb = 0;
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      ea = fa[i++].second;
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      eb = fb[j++].second;
    } else {
      ea = fa[i++].second;
      eb = fb[j++].second;
    }
    if (ea != eb) return ea > eb;
  }
  return false;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly::MultiPoly(VarId v, int exponent) { terms_.emplace(Monomial(v, exponent), Rational(1)); }

MultiPoly::MultiPoly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<VarId> MultiPoly::variables() const {
  std::set<VarId> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vars.insert(f.first);
  return vars;
}

bool MultiPoly::contains(VarId v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const auto& term) { return term.first.exponent(v) != 0; });
}

int MultiPoly::max_exponent(VarId v) const {
  if (terms_.empty()) return 0;
  int best = terms_.begin()->first.exponent(v);
  for (const auto& [m, c] : terms_) best = std::max(best, m.exponent(v));
  return best;
}

int MultiPoly::min_exponent(VarId v) const {
  if (terms_.empty()) return 0;
  int best = terms_.begin()->first.exponent(v);
  for (const auto& [m, c] : terms_) best = std::min(best, m.exponent(v));
  return best;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Monomial& m) {
  // Multiplying every key by the same monomial preserves the term order.
  Terms shifted;
  for (auto& [key, c] : terms_) shifted.emplace_hint(shifted.end(), key * m, std::move(c));
  terms_ = std::move(shifted);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial())
      throw SubstitutionUndefined("negative power of a polynomial with " + std::to_string(size()) +
                                  " terms");
    const auto& [m, c] = *terms_.begin();
    Rational inv = 1 / c;
    Rational coeff = 1;
    for (int i = 0; i < -e; ++i) coeff *= inv;
    return MultiPoly(m.pow(e), coeff);
  }
  MultiPoly result(Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    Rational mag = abs(c);
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += m.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------- free functions

MultiPoly partial_deriv(const MultiPoly& p, VarId v) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m.with_exponent(v, e - 1), c * e);
  }
  return out;
}

MultiPoly substitute(const MultiPoly& p, const Substitution& map) {
  // Powers of each image are cached by exponent.
  std::map<std::pair<VarId, int>, MultiPoly> powers;
  auto power_of = [&](VarId v, const MultiPoly& image, int e) -> const MultiPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) {
      if (e < 0 && !image.is_monomial())
        throw SubstitutionUndefined("negative power of " + v.name() +
                                    " requires a single-term image, got " + image.to_string());
      it = powers.emplace(key, image.pow(e)).first;
    }
    return it->second;
  };

  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    MultiPoly term(Rational(1));
    for (const auto& [v, e] : m.factors()) {
      auto it = map.find(v);
      if (it == map.end())
        kept.emplace_back(v, e);
      else
        term *= power_of(v, it->second, e);
    }
    term *= Monomial::from_factors(std::move(kept));
    term *= c;
    out += term;
  }
  return out;
}

// ------------------------------------------------------------------ parser

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse_all() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    skip_ws();
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    MultiPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (accept('^')) base = base.pow(signed_int());
    return base;
  }

  int signed_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) fail("exponent out of range");
    return neg ? -value : value;
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer num(std::string(text_.substr(start, pos_ - start)));
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
        den = Integer(std::string(text_.substr(dstart, pos_ - dstart)));
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return MultiPoly(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '_') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      return MultiPoly(VarId::parse(text_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse_all(); }

Substitution parse_substitution(std::string_view text) {
  Substitution out;
  while (!trim(text).empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("substitution item '" + std::string(item) + "' lacks '='");
    out[VarId::parse(trim(item.substr(0, eq)))] = MultiPoly::parse(item.substr(eq + 1));
  }
  return out;
}

}  // namespace narayana
