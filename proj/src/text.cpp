#include "fqpoints/text.hpp"

#include <cctype>
#include <limits>

#include "fqpoints/error.hpp"

namespace fqp {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t num_vars) : text_(text), num_vars_(num_vars) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  bool at_end() { return peek() == '\0'; }

  std::uint64_t natural() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a number");
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) fail("number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  // factor := 'x' index ('^' nat)?
  void factor(std::vector<std::uint64_t>& exponents) {
    const std::size_t start = pos_;
    expect('x');
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a variable index after 'x'");
    const std::uint64_t index = natural();
    if (index >= num_vars_) {
      throw ParseError(start, "variable x" + std::to_string(index) + " out of range (x0..x" +
                                  std::to_string(num_vars_ - 1) + ")");
    }
    std::uint64_t power = 1;
    if (accept('^')) power = natural();
    exponents[index] += power;
  }

  Monomial monomial() {
    std::vector<std::uint64_t> exponents(num_vars_, 0);
    const std::size_t start = pos_;
    factor(exponents);
    while (accept('*')) factor(exponents);
    try {
      return Monomial::from_exponents(exponents);
    } catch (const CapacityError& e) {
      throw ParseError(start, e.what());
    }
  }

 private:
  std::string_view text_;
  std::size_t num_vars_;
  std::size_t pos_ = 0;
};

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const Field& field, std::size_t m)
      : p_(text, m + 1), field_(field), num_vars_(m + 1) {}

  Polynomial parse() {
    Polynomial out(field_, num_vars_);
    if (p_.at_end()) p_.fail("empty polynomial text");
    bool negative = false;
    if (p_.accept('-')) negative = true;
    else p_.accept('+');
    term(out, negative);
    while (true) {
      if (p_.accept('+')) {
        term(out, false);
      } else if (p_.accept('-')) {
        term(out, true);
      } else {
        break;
      }
    }
    if (!p_.at_end()) p_.fail("unexpected character");
    return out;
  }

 private:
  void term(Polynomial& out, bool negative) {
    Field::Code c = 1;
    Monomial mono(num_vars_);
    const char next = p_.peek();
    if (next == 'x') {
      mono = p_.monomial();
    } else if (next == '(' || std::isdigit(static_cast<unsigned char>(next))) {
      c = coefficient();
      if (p_.accept('*')) mono = p_.monomial();
    } else {
      p_.fail("expected a term");
    }
    out.add_term(mono, negative ? field_.neg(c) : c);
  }

  Field::Code coefficient() {
    if (!p_.accept('(')) return field_.from_integer(static_cast<std::int64_t>(p_.natural()));
    Field::Code value = 0;
    bool negative = false;
    if (p_.accept('-')) negative = true;
    else p_.accept('+');
    value = field_.add(value, ext_term(negative));
    while (true) {
      if (p_.accept('+')) {
        value = field_.add(value, ext_term(false));
      } else if (p_.accept('-')) {
        value = field_.add(value, ext_term(true));
      } else {
        break;
      }
    }
    p_.expect(')');
    return value;
  }

  // eterm := int | int '*' apow | apow
  Field::Code ext_term(bool negative) {
    Field::Code value = 1;
    const char next = p_.peek();
    if (std::isdigit(static_cast<unsigned char>(next))) {
      value = field_.from_integer(static_cast<std::int64_t>(p_.natural()));
      if (p_.accept('*')) value = field_.mul(value, generator_power());
    } else if (next == 'a') {
      value = generator_power();
    } else {
      p_.fail("expected an integer or 'a'");
    }
    return negative ? field_.neg(value) : value;
  }

  Field::Code generator_power() {
    const std::size_t start = p_.pos();
    p_.expect('a');
    if (field_.degree() == 1)
      throw ParseError(start, "generator 'a' is only defined in extension fields (s > 1)");
    std::uint64_t power = 1;
    if (p_.accept('^')) power = p_.natural();
    return field_.pow(field_.generator().code(), power);
  }

  Parser p_;
  Field field_;
  std::size_t num_vars_;
};

std::string coefficient_prefix(const Field& field, Field::Code c, bool is_constant, bool& negative) {
  const std::uint32_t p = field.characteristic();
  negative = false;
  if (field.in_prime_subfield(c)) {
    std::uint32_t magnitude = c;
    if (c > p / 2) {
      negative = true;
      magnitude = p - c;
    }
    if (magnitude == 1 && !is_constant) return "";
    return std::to_string(magnitude) + (is_constant ? "" : "*");
  }
  return "(" + field.format(c) + ")" + (is_constant ? "" : "*");
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Field& field, std::size_t m) {
  return PolynomialParser(text, field, m).parse();
}

Monomial parse_monomial(std::string_view text, std::size_t m) {
  Parser p(text, m + 1);
  if (p.peek() == '1') {
    p.natural();
    if (!p.at_end()) p.fail("unexpected character after '1'");
    return Monomial(m + 1);
  }
  Monomial out = p.monomial();
  if (!p.at_end()) p.fail("unexpected character");
  return out;
}

std::vector<Monomial> parse_monomial_list(std::string_view text, std::size_t m) {
  std::vector<Monomial> out;
  std::size_t start = 0;
  bool blank = true;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
  if (blank) return out;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_monomial(piece, m));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), e.detail());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string render_monomial(const Monomial& monomial) {
  if (monomial.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < monomial.num_vars(); ++i) {
    if (monomial[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (monomial[i] > 1) out += '^' + std::to_string(monomial[i]);
  }
  return out;
}

std::string render_polynomial(const Polynomial& poly, const MonomialOrder& order) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : poly.sorted_terms(order)) {
    bool negative = false;
    const std::string prefix = coefficient_prefix(poly.field(), c, m.is_one(), negative);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += prefix;
    if (!m.is_one()) out += render_monomial(m);
  }
  return out;
}

std::string render_polynomial(const Polynomial& poly) {
  return render_polynomial(poly, MonomialOrder::grevlex(poly.num_vars()));
}

}  // namespace fqp
