#include "ellone/groupcoh/bar.hpp"

#include "ellone/error.hpp"

namespace ellone::groupcoh {

namespace {

std::size_t power(int base, int exponent) {
  std::size_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= static_cast<std::size_t>(base);
  return out;
}

}  // namespace

BarCochain::BarCochain(int order, int degree) : order_(order), degree_(degree) {
  if (order < 1 || degree < -1) throw PreconditionError("bar cochain needs order >= 1 and degree >= -1");
  values_.assign(power(order, degree + 1), Rational(0));
}

std::size_t BarCochain::index(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != degree_ + 1) throw PreconditionError("tuple length does not match degree");
  std::size_t out = 0;
  for (int g : tuple) out = out * static_cast<std::size_t>(order_) + static_cast<std::size_t>(g);
  return out;
}

std::vector<int> BarCochain::tuple(std::size_t index) const {
  std::vector<int> out(static_cast<std::size_t>(degree_ + 1));
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<int>(index % static_cast<std::size_t>(order_));
    index /= static_cast<std::size_t>(order_);
  }
  return out;
}

BarCochain& BarCochain::operator+=(const BarCochain& other) {
  if (other.order_ != order_ || other.degree_ != degree_) throw PreconditionError("bar cochain shapes differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

BarCochain& BarCochain::operator-=(const BarCochain& other) {
  if (other.order_ != order_ || other.degree_ != degree_) throw PreconditionError("bar cochain shapes differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

BarCochain& BarCochain::operator*=(const Rational& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

BarCochain bar_differential(const BarCochain& f) {
  const int n = f.degree();
  BarCochain out(f.order(), n + 1);
  std::vector<int> face(static_cast<std::size_t>(n + 1));
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    const auto t = out.tuple(idx);
    Rational total = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::size_t w = 0;
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (j != i) face[w++] = t[j];
      }
      if (i % 2 == 0) {
        total += f.at(face);
      } else {
        total -= f.at(face);
      }
    }
    out[idx] = total;
  }
  return out;
}

BarCochain act(const FiniteGroup& group, int g, const BarCochain& f) {
  BarCochain out(f.order(), f.degree());
  const int inv = group.inverse(g);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    auto t = out.tuple(idx);
    for (int& x : t) x = group.multiply(inv, x);
    out[idx] = f.at(t);
  }
  return out;
}

bool is_invariant(const FiniteGroup& group, const BarCochain& f) {
  for (int g = 0; g < group.order(); ++g) {
    if (!(act(group, g, f) == f)) return false;
  }
  return true;
}

Rational sup_norm(const BarCochain& f) {
  Rational out = 0;
  for (const auto& v : f.values()) out = std::max(out, Rational(abs(v)));
  return out;
}

ContractingHomotopy::ContractingHomotopy(const FiniteGroup& group) : weights_(static_cast<std::size_t>(group.order())) {
  weights_[static_cast<std::size_t>(group.identity())] = 1;
}

ContractingHomotopy::ContractingHomotopy(const FiniteGroup& group, std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != group.order()) throw PreconditionError("one weight per group element");
  Rational total = 0;
  for (const auto& w : weights_) {
    if (w < 0) throw PreconditionError("homotopy weights must be nonnegative");
    total += w;
  }
  if (total != 1) throw PreconditionError("homotopy weights must sum to one");
}

BarCochain ContractingHomotopy::operator()(const BarCochain& f) const {
  if (f.degree() < 0) throw PreconditionError("contracting homotopy starts in degree 0");
  BarCochain out(f.order(), f.degree() - 1);
  const std::size_t block = out.size();
  for (std::size_t x = 0; x < weights_.size(); ++x) {
    if (weights_[x] == 0) continue;
    for (std::size_t idx = 0; idx < block; ++idx) out[idx] += weights_[x] * f[x * block + idx];
  }
  return out;
}

}  // namespace ellone::groupcoh
