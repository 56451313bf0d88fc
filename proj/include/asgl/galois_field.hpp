#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace asgl {

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/**
 * The finite field F_q, q = p^n, with table-driven arithmetic.
 *
 * Elements are encoded as integers 0 <= v < q: the base-p digits of v are the
 * coordinates over F_p with respect to the power basis 1, a, a^2, ... where a
 * is a root of the field's modulus. The prime subfield is {0, ..., p-1}.
 *
 * The modulus is fixed per (p, n): the monic primitive polynomial of degree n
 * whose low coefficients c_0 + c_1 p + ... + c_{n-1} p^{n-1} form the smallest
 * code. Outputs are therefore reproducible bit for bit.
 */
class GaloisField {
 public:
  using Value = std::uint32_t;

  static constexpr std::uint64_t kMaxOrder = 1u << 20;

  static FieldPtr make(int p, int n = 1);

  int characteristic() const { return p_; }
  int degree() const { return n_; }
  Value order() const { return q_; }

  // Coefficients c_0..c_n of the modulus, low to high, c_n = 1.
  const std::vector<Value>& modulus() const { return modulus_; }

  bool same_as(const GaloisField& other) const { return p_ == other.p_ && n_ == other.n_; }

  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value generator() const { return exp_[1 % (q_ - 1)]; }
  Value from_int(long long k) const;

  Value add(Value a, Value b) const;
  Value sub(Value a, Value b) const;
  Value neg(Value a) const;
  Value mul(Value a, Value b) const;
  Value inv(Value a) const;
  Value div(Value a, Value b) const { return mul(a, inv(b)); }
  Value pow(Value a, long long k) const;
  // a^(p^k); negative k applies the inverse Frobenius.
  Value frobenius(Value a, long long k = 1) const;
  Value pth_root(Value a) const { return frobenius(a, -1); }
  // a + a^p + ... + a^(p^(n-1)), an element of the prime subfield.
  Value trace(Value a) const;

  bool in_prime_subfield(Value a) const { return a < static_cast<Value>(p_); }
  std::vector<int> digits(Value a) const;
  Value from_digits(const std::vector<int>& d) const;

  std::string format(Value a) const;

 private:
  GaloisField(int p, int n);

  int p_;
  int n_;
  Value q_;
  std::vector<Value> modulus_;
  std::vector<Value> exp_;
  std::vector<std::int32_t> log_;
  std::vector<Value> add_table_;  // only for small q
};

bool is_prime(long long n);

/// An element of a finite field; a value type carrying its field.
class FieldElement {
 public:
  using Value = GaloisField::Value;

  FieldElement() = default;
  FieldElement(FieldPtr field, Value v) : field_(std::move(field)), v_(v) {}
  static FieldElement from_int(const FieldPtr& field, long long k) {
    return FieldElement(field, field->from_int(k));
  }

  const FieldPtr& field() const { return field_; }
  Value value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(v_)}; }
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement pow(long long k) const { return {field_, field_->pow(v_, k)}; }
  FieldElement frobenius(long long k = 1) const { return {field_, field_->frobenius(v_, k)}; }
  FieldElement inverse() const { return {field_, field_->inv(v_)}; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const { return field_->format(v_); }

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Value v_ = 0;
};

/// Trace from F_q down to F_p.
FieldElement fq_trace(const FieldElement& c);

/**
 * Embedding F_{p^n} -> F_{p^m} for n | m, sending the small field's generator a
 * to the least-encoded root of its modulus in the big field.
 */
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr small, FieldPtr big);

  const FieldPtr& source() const { return small_; }
  const FieldPtr& target() const { return big_; }
  GaloisField::Value operator()(GaloisField::Value v) const { return image_[v]; }
  FieldElement operator()(const FieldElement& e) const;

 private:
  FieldPtr small_;
  FieldPtr big_;
  std::vector<GaloisField::Value> image_;
};

}  // namespace asgl
