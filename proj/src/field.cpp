#include "fqpoints/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "fqpoints/error.hpp"

namespace fqp {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t s = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  // Caches for small extension fields; the representation stays polynomial-basis.
  std::vector<Field::Code> mul_table;  // q*q entries when q <= kTableOrder
  std::vector<Field::Code> inv_table;  // q entries when q <= kInvTableOrder

  static constexpr std::uint32_t kTableOrder = 256;
  static constexpr std::uint32_t kInvTableOrder = 1u << 16;
};

}  // namespace detail

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t code, std::uint32_t p, std::uint32_t s) {
  Digits d(s, 0);
  for (std::uint32_t i = 0; i < s; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder of a by monic b over GF(p); both low degree first, trimmed.
Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = lead * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

bool is_irreducible(const Digits& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Digits g(d + 1, 0);
      std::uint64_t rest = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Code raw_mul(const detail::FieldData& f, Field::Code a, Field::Code b) {
  if (f.s == 1) return static_cast<Field::Code>(std::uint64_t{a} * b % f.p);
  const Digits da = to_digits(a, f.p, f.s);
  const Digits db = to_digits(b, f.p, f.s);
  Digits prod(2 * f.s - 1, 0);
  for (std::uint32_t i = 0; i < f.s; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < f.s; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % f.p);
    }
  }
  Digits r = poly_mod(std::move(prod), f.modulus, f.p);
  r.resize(f.s, 0);
  return from_digits(r, f.p);
}

Field::Code raw_pow(const detail::FieldData& f, Field::Code a, std::uint64_t e) {
  Field::Code result = 1;
  while (e > 0) {
    if (e & 1) result = raw_mul(f, result, a);
    a = raw_mul(f, a, a);
    e >>= 1;
  }
  return result;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, Digits>, std::unique_ptr<detail::FieldData>>& registry() {
  static std::map<std::pair<std::uint32_t, Digits>, std::unique_ptr<detail::FieldData>> r;
  return r;
}

const detail::FieldData* intern(std::uint32_t p, Digits modulus) {
  std::lock_guard lock(registry_mutex());
  auto& reg = registry();
  auto key = std::make_pair(p, modulus);
  if (auto it = reg.find(key); it != reg.end()) return it->second.get();

  auto data = std::make_unique<detail::FieldData>();
  data->p = p;
  data->s = static_cast<std::uint32_t>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < data->s; ++i) q *= p;
  data->q = static_cast<std::uint32_t>(q);
  data->modulus = std::move(modulus);
  if (data->s > 1 && data->q <= detail::FieldData::kTableOrder) {
    data->mul_table.resize(std::size_t{data->q} * data->q);
    for (Field::Code a = 0; a < data->q; ++a)
      for (Field::Code b = 0; b < data->q; ++b)
        data->mul_table[std::size_t{a} * data->q + b] = raw_mul(*data, a, b);
  }
  if (data->s > 1 && data->q <= detail::FieldData::kInvTableOrder) {
    data->inv_table.assign(data->q, 0);
    for (Field::Code a = 1; a < data->q; ++a) {
      if (data->inv_table[a] != 0) continue;
      const Field::Code b = raw_pow(*data, a, data->q - 2);
      data->inv_table[a] = b;
      data->inv_table[b] = a;
    }
  }
  const detail::FieldData* out = data.get();
  reg.emplace(std::move(key), std::move(data));
  return out;
}

void check_capacity(std::uint32_t p, std::uint32_t s) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (s == 0) throw InvalidArgument("extension degree must be positive");
  if (p > Field::kMaxCharacteristic)
    throw CapacityError("characteristic " + std::to_string(p) + " exceeds 2^16");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    q *= p;
    if (q > Field::kMaxOrder) throw CapacityError("field order exceeds 2^20");
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::make(std::uint32_t p, std::uint32_t s) {
  check_capacity(p, s);
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < s; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Digits f = to_digits(static_cast<std::uint32_t>(c), p, s);
    f.push_back(1);
    if (is_irreducible(f, p)) return Field(intern(p, std::move(f)));
  }
  throw InvariantViolation("no irreducible polynomial found");
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (modulus.size() < 2) throw InvalidArgument("modulus must have degree at least 1");
  check_capacity(p, static_cast<std::uint32_t>(modulus.size() - 1));
  for (auto c : modulus)
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  if (modulus.back() != 1) throw InvalidArgument("modulus must be monic");
  if (!is_irreducible(modulus, p)) throw InvalidArgument("modulus is reducible");
  return Field(intern(p, std::move(modulus)));
}

std::uint32_t Field::characteristic() const { return data_->p; }
std::uint32_t Field::degree() const { return data_->s; }
std::uint32_t Field::order() const { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }

FieldElement Field::zero() const { return {*this, 0}; }
FieldElement Field::one() const { return {*this, 1}; }
FieldElement Field::generator() const {
  if (data_->s == 1) return {*this, from_integer(-static_cast<std::int64_t>(data_->modulus[0]))};
  return {*this, data_->p};
}
FieldElement Field::element(std::int64_t integer) const { return {*this, from_integer(integer)}; }

FieldElement Field::from_code(Code code) const {
  if (code >= data_->q) throw InvalidArgument("element code out of range");
  return {*this, code};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > data_->s) throw InvalidArgument("too many coefficients for field degree");
  Digits d(data_->s, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = coeffs[i] % data_->p;
  return {*this, from_digits(d, data_->p)};
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(data_->q);
  for (Code c = 0; c < data_->q; ++c) out.emplace_back(*this, c);
  return out;
}

bool Field::contains_subfield(std::uint64_t sub_order) const {
  std::uint64_t power = 1;
  for (std::uint32_t t = 1; t <= data_->s; ++t) {
    power *= data_->p;
    if (power == sub_order) return data_->s % t == 0;
    if (power > sub_order) break;
  }
  return false;
}

std::vector<Field::Code> Field::subfield_codes(std::uint64_t sub_order) const {
  if (!contains_subfield(sub_order))
    throw InvalidArgument("GF(" + std::to_string(sub_order) + ") is not a subfield of GF(" +
                          std::to_string(data_->q) + ")");
  std::vector<Code> out;
  out.reserve(sub_order);
  for (Code c = 0; c < data_->q; ++c)
    if (sub_order == data_->q || pow(c, sub_order) == c) out.push_back(c);
  return out;
}

Field::Code Field::add(Code a, Code b) const {
  const std::uint32_t p = data_->p;
  if (data_->s == 1) {
    const Code r = a + b;
    return r >= p ? r - p : r;
  }
  Code out = 0, scale = 1;
  for (std::uint32_t i = 0; i < data_->s; ++i) {
    Code d = a % p + b % p;
    if (d >= p) d -= p;
    out += d * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return out;
}

Field::Code Field::neg(Code a) const {
  const std::uint32_t p = data_->p;
  if (data_->s == 1) return a == 0 ? 0 : p - a;
  Code out = 0, scale = 1;
  for (std::uint32_t i = 0; i < data_->s; ++i) {
    const Code d = a % p;
    out += (d == 0 ? 0 : p - d) * scale;
    scale *= p;
    a /= p;
  }
  return out;
}

Field::Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Field::Code Field::mul(Code a, Code b) const {
  if (!data_->mul_table.empty()) return data_->mul_table[std::size_t{a} * data_->q + b];
  return raw_mul(*data_, a, b);
}

Field::Code Field::inv(Code a) const {
  if (a == 0) throw DivisionByZero();
  if (data_->s == 1) return inv_mod(a, data_->p);
  if (!data_->inv_table.empty()) return data_->inv_table[a];
  return raw_pow(*data_, a, data_->q - 2);
}

Field::Code Field::pow(Code a, std::uint64_t exponent) const {
  Code result = 1;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, a);
    a = mul(a, a);
    exponent >>= 1;
  }
  return result;
}

Field::Code Field::from_integer(std::int64_t integer) const {
  const std::int64_t p = data_->p;
  return static_cast<Code>(((integer % p) + p) % p);
}

std::vector<std::uint32_t> Field::coeffs(Code a) const { return to_digits(a, data_->p, data_->s); }

std::string Field::format(Code a) const {
  if (a < data_->p) return std::to_string(a);
  const Digits d = to_digits(a, data_->p, data_->s);
  std::string out;
  for (std::size_t k = d.size(); k-- > 0;) {
    if (d[k] == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(d[k]);
      continue;
    }
    if (d[k] != 1) out += std::to_string(d[k]) + '*';
    out += 'a';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

void FieldElement::check_same(const FieldElement& rhs) const {
  if (!(field_ == rhs.field_)) throw ContextMismatch();
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_.add(code_, rhs.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_.sub(code_, rhs.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_.mul(code_, rhs.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_.div(code_, rhs.code_)};
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  return field_ == rhs.field_ && code_ == rhs.code_;
}

}  // namespace fqp
