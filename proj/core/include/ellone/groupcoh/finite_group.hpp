#pragma once

#include <vector>

#include <json.hpp>

namespace ellone::groupcoh {

inline constexpr int kDefaultOrderCap = 12;

/// Finite group on elements 0..order-1 given by its multiplication table.
class FiniteGroup {
 public:
  /// Verifies closure, associativity, identity and inverses (PreconditionError).
  static FiniteGroup from_table(std::vector<std::vector<int>> table);
  /// Closure of permutation generators on {0..degree-1}, composed as
  /// (a b)(x) = a(b(x)). ResourceError when the order exceeds `cap`.
  static FiniteGroup from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                       int cap = kDefaultOrderCap);
  /// `{"order": k, "table": [...]}` or `{"degree": m, "generators": [...]}`.
  static FiniteGroup from_json(const nlohmann::ordered_json& j, int cap = kDefaultOrderCap);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int m);
  static FiniteGroup symmetric(int m);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int multiply(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  /// Permutation realizing each element when built from permutations.
  const std::vector<std::vector<int>>& permutations() const { return permutations_; }

  nlohmann::ordered_json to_json() const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::vector<std::vector<int>> permutations_;
};

}  // namespace ellone::groupcoh
