#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fqp {

namespace detail {
struct FieldData;
}

class FieldElement;

/// Handle to an immutable finite field GF(p^s).
///
/// Elements are stored in polynomial basis over GF(p), packed into a single
/// integer "code" c_0 + c_1 p + ... + c_{s-1} p^{s-1}, where x^s is reduced by
/// the field's monic irreducible modulus and `a` denotes the class of x.
/// Contexts are interned: two handles compare equal iff they were built from
/// the same (p, modulus), and a context lives for the rest of the process.
class Field {
 public:
  using Code = std::uint32_t;

  static constexpr std::uint32_t kMaxCharacteristic = 1u << 16;
  static constexpr std::uint64_t kMaxOrder = 1u << 20;

  /// GF(p^s) with the least monic irreducible modulus of degree s.
  static Field make(std::uint32_t p, std::uint32_t s = 1);
  /// GF(p^s) with an explicit monic modulus, given low degree first.
  static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  /// Monic modulus, low degree first, length degree() + 1.
  const std::vector<std::uint32_t>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// The distinguished generator `a` (equal to 0 in a prime field).
  FieldElement generator() const;
  FieldElement element(std::int64_t integer) const;
  FieldElement from_code(Code code) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;

  /// All q elements, 0 and 1 first, in increasing code order.
  std::vector<FieldElement> elements() const;
  /// The subfield GF(sub_order) as {x : x^sub_order = x}, in code order.
  std::vector<Code> subfield_codes(std::uint64_t sub_order) const;
  /// True iff GF(sub_order) embeds in this field.
  bool contains_subfield(std::uint64_t sub_order) const;

  // Code-level arithmetic. Callers guarantee codes are < order().
  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t exponent) const;
  Code from_integer(std::int64_t integer) const;
  std::vector<std::uint32_t> coeffs(Code a) const;
  bool in_prime_subfield(Code a) const { return a < characteristic(); }
  /// Text form using the generator symbol `a`; integers for prime-subfield values.
  std::string format(Code a) const;

  bool operator==(const Field& other) const { return data_ == other.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}

  const detail::FieldData* data_;
};

inline Field make_field(std::uint32_t p, std::uint32_t s = 1) { return Field::make(p, s); }

bool is_prime(std::uint64_t n);

/// Element of a Field. Mixed-field arithmetic throws ContextMismatch.
class FieldElement {
 public:
  FieldElement(Field field, Field::Code code) : field_(field), code_(code) {}

  const Field& field() const { return field_; }
  Field::Code code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(code_); }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const { return {field_, field_.neg(code_)}; }
  FieldElement inv() const { return {field_, field_.inv(code_)}; }
  FieldElement pow(std::uint64_t exponent) const { return {field_, field_.pow(code_, exponent)}; }

  bool operator==(const FieldElement& rhs) const;
  std::string to_string() const { return field_.format(code_); }

 private:
  void check_same(const FieldElement& rhs) const;

  Field field_;
  Field::Code code_;
};

}  // namespace fqp
