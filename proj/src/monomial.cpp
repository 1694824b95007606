#include "fqpoints/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fqpoints/error.hpp"

namespace fqp {

namespace {

__extension__ using Wide = unsigned __int128;

constexpr std::uint64_t kMaxExponent = std::numeric_limits<Exponent>::max();

Exponent checked_exponent(std::uint64_t value) {
  if (value > kMaxExponent)
    throw CapacityError("exponent " + std::to_string(value) + " exceeds 16-bit range");
  return static_cast<Exponent>(value);
}

void check_arity(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw ContextMismatch("monomials have different variable counts");
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {
  for (Exponent e : exponents_) degree_ += e;
}

Monomial Monomial::from_exponents(std::span<const std::uint64_t> exponents) {
  std::vector<Exponent> out;
  out.reserve(exponents.size());
  for (auto e : exponents) out.push_back(checked_exponent(e));
  return Monomial(std::move(out));
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, std::uint64_t power) {
  if (index >= num_vars) throw InvalidArgument("variable index out of range");
  Monomial m(num_vars);
  m.set(index, power);
  return m;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > 0) out.push_back(i);
  return out;
}

std::optional<std::size_t> Monomial::top_variable() const {
  for (std::size_t i = exponents_.size(); i-- > 0;)
    if (exponents_[i] > 0) return i;
  return std::nullopt;
}

bool Monomial::divides(const Monomial& other) const {
  check_arity(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_arity(*this, other);
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    out.exponents_[i] = checked_exponent(std::uint64_t{exponents_[i]} + other.exponents_[i]);
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw InvalidArgument("monomial quotient is not exact");
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] -= other.exponents_[i];
  out.degree_ = degree_ - other.degree_;
  return out;
}

void Monomial::set(std::size_t i, std::uint64_t value) {
  const Exponent e = checked_exponent(value);
  degree_ = degree_ - exponents_.at(i) + e;
  exponents_[i] = e;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_arity(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_arity(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) { return gcd(a, b).is_one(); }

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  checked_exponent(degree);
  std::vector<Exponent> e(num_vars, 0);
  // Recursive fill: x_0 exponent from degree down to 0, then the rest.
  auto fill = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == num_vars) {
      e[i] = static_cast<Exponent>(left);
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t a = left + 1; a-- > 0;) {
      e[i] = static_cast<Exponent>(a);
      self(self, i + 1, left - a);
    }
  };
  fill(fill, 0, degree);
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw CapacityError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace fqp
