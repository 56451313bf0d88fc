#include "asgl/galois_field.hpp"

#include <sstream>
#include <stdexcept>

#include "asgl/errors.hpp"

namespace asgl {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldPtr GaloisField::make(int p, int n) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxOrder) throw DomainError("field order exceeds supported size");
  }
  return FieldPtr(new GaloisField(p, n));
}

GaloisField::GaloisField(int p, int n) : p_(p), n_(n), q_(1) {
  for (int i = 0; i < n; ++i) q_ *= static_cast<Value>(p);

  // Search moduli by code; the first primitive one wins.
  for (Value code = 0; code < q_; ++code) {
    std::vector<int> c(n);
    Value rest = code;
    for (int i = 0; i < n; ++i) {
      c[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    if (c[0] == 0) continue;

    std::vector<Value> exp(q_ - 1);
    std::vector<int> e(n, 0);
    e[0] = 1;
    bool primitive = true;
    for (Value k = 0; k < q_ - 1; ++k) {
      exp[k] = from_digits(e);
      if (k > 0 && exp[k] == 1) {
        primitive = false;
        break;
      }
      // e <- e * a mod modulus
      const int top = e[n - 1];
      for (int i = n - 1; i > 0; --i) e[i] = e[i - 1];
      e[0] = 0;
      for (int i = 0; i < n; ++i) e[i] = ((e[i] - top * c[i]) % p + p) % p;
    }
    if (!primitive || from_digits(e) != 1) continue;

    modulus_.assign(c.begin(), c.end());
    modulus_.push_back(1);
    exp_ = std::move(exp);
    break;
  }
  if (modulus_.empty()) throw std::logic_error("no primitive modulus found");

  log_.assign(q_, -1);
  for (Value k = 0; k < q_ - 1; ++k) log_[exp_[k]] = static_cast<std::int32_t>(k);

  if (q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Value a = 0; a < q_; ++a) {
      const auto da = digits(a);
      for (Value b = 0; b < q_; ++b) {
        auto db = digits(b);
        for (int i = 0; i < n_; ++i) db[i] = (da[i] + db[i]) % p_;
        add_table_[static_cast<std::size_t>(a) * q_ + b] = from_digits(db);
      }
    }
  }
}

std::vector<int> GaloisField::digits(Value a) const {
  std::vector<int> d(n_);
  for (int i = 0; i < n_; ++i) {
    d[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return d;
}

GaloisField::Value GaloisField::from_digits(const std::vector<int>& d) const {
  Value v = 0;
  for (int i = n_ - 1; i >= 0; --i) v = v * p_ + static_cast<Value>(d[i]);
  return v;
}

GaloisField::Value GaloisField::from_int(long long k) const {
  long long r = k % p_;
  if (r < 0) r += p_;
  return static_cast<Value>(r);
}

GaloisField::Value GaloisField::add(Value a, Value b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  Value r = 0, scale = 1;
  for (int i = 0; i < n_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

GaloisField::Value GaloisField::neg(Value a) const {
  Value r = 0, scale = 1;
  for (int i = 0; i < n_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

GaloisField::Value GaloisField::sub(Value a, Value b) const { return add(a, neg(b)); }

GaloisField::Value GaloisField::mul(Value a, Value b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t k = static_cast<std::uint64_t>(log_[a]) + log_[b];
  return exp_[k % (q_ - 1)];
}

GaloisField::Value GaloisField::inv(Value a) const {
  if (a == 0) throw DomainError("division by zero in finite field");
  const Value order = q_ - 1;
  return exp_[(order - static_cast<Value>(log_[a])) % order];
}

GaloisField::Value GaloisField::pow(Value a, long long k) const {
  if (k == 0) return 1;
  if (a == 0) {
    if (k < 0) throw DomainError("negative power of zero");
    return 0;
  }
  const long long order = q_ - 1;
  long long e = (static_cast<long long>(log_[a]) * (k % order)) % order;
  if (e < 0) e += order;
  return exp_[e];
}

GaloisField::Value GaloisField::frobenius(Value a, long long k) const {
  if (a == 0) return 0;
  long long r = k % n_;
  if (r < 0) r += n_;
  const long long order = q_ - 1;
  long long scale = 1;
  for (long long i = 0; i < r; ++i) scale = (scale * p_) % order;
  return exp_[(static_cast<long long>(log_[a]) * scale) % order];
}

GaloisField::Value GaloisField::trace(Value a) const {
  Value acc = 0;
  Value term = a;
  for (int i = 0; i < n_; ++i) {
    acc = add(acc, term);
    term = frobenius(term, 1);
  }
  return acc;
}

std::string GaloisField::format(Value a) const {
  if (in_prime_subfield(a)) return std::to_string(a);
  const auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (int i = n_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << d[i];
      continue;
    }
    if (d[i] != 1) os << d[i] << "*";
    os << "a";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) {
    throw DomainError("field elements belong to different fields");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(v_, o.v_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(v_, o.v_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(v_, o.v_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(v_, o.v_)};
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!field_ || !o.field_) return field_ == o.field_ && v_ == o.v_;
  return field_->same_as(*o.field_) && v_ == o.v_;
}

FieldElement fq_trace(const FieldElement& c) { return {c.field(), c.field()->trace(c.value())}; }

FieldEmbedding::FieldEmbedding(FieldPtr small, FieldPtr big) : small_(std::move(small)), big_(std::move(big)) {
  if (small_->characteristic() != big_->characteristic() || big_->degree() % small_->degree() != 0) {
    throw DomainError("no embedding between the given fields");
  }
  const auto& mod = small_->modulus();
  GaloisField::Value root = 0;
  bool found = false;
  for (GaloisField::Value b = 0; b < big_->order() && !found; ++b) {
    GaloisField::Value acc = 0;
    for (auto it = mod.rbegin(); it != mod.rend(); ++it) acc = big_->add(big_->mul(acc, b), *it);
    if (acc == 0) {
      root = b;
      found = true;
    }
  }
  if (!found) throw std::logic_error("modulus has no root in extension field");

  image_.resize(small_->order());
  for (GaloisField::Value v = 0; v < small_->order(); ++v) {
    const auto d = small_->digits(v);
    GaloisField::Value acc = 0;
    for (int i = small_->degree() - 1; i >= 0; --i) {
      acc = big_->add(big_->mul(acc, root), big_->from_int(d[i]));
    }
    image_[v] = acc;
  }
}

FieldElement FieldEmbedding::operator()(const FieldElement& e) const {
  if (!e.field()->same_as(*small_)) throw DomainError("element is not in the embedding's source field");
  return {big_, image_[e.value()]};
}

}  // namespace asgl
