#include "ellone/groupcoh/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "ellone/error.hpp"

namespace ellone::groupcoh {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw PreconditionError("group table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw PreconditionError("group table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw PreconditionError("group table entry out of range");
    }
  }
  FiniteGroup g;
  g.table_ = std::move(table);
  g.identity_ = -1;
  for (int e = 0; e < n && g.identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.table_[e][a] == a && g.table_[a][e] == a;
    if (ok) g.identity_ = e;
  }
  if (g.identity_ < 0) throw PreconditionError("group table has no identity");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]]) {
          throw PreconditionError("group table is not associative");
        }
      }
    }
  }
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.table_[a][b] == g.identity_ && g.table_[b][a] == g.identity_) g.inverse_[a] = b;
    }
    if (g.inverse_[a] < 0) throw PreconditionError("group element without inverse");
  }
  return g;
}

FiniteGroup FiniteGroup::from_permutations(int degree, const std::vector<std::vector<int>>& generators, int cap) {
  if (degree < 1) throw PreconditionError("permutation degree must be positive");
  for (const auto& p : generators) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(static_cast<std::size_t>(degree));
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) throw PreconditionError("generator is not a permutation of the given degree");
  }
  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[static_cast<std::size_t>(b[x])];
    return out;
  };
  std::vector<int> id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> index{{id, 0}};
  std::vector<std::vector<int>> elements{id};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    const auto p = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      auto q = compose(s, p);
      if (index.count(q)) continue;
      if (static_cast<int>(elements.size()) >= cap) {
        throw ResourceError("group order exceeds cap " + std::to_string(cap));
      }
      index.emplace(q, static_cast<int>(elements.size()));
      elements.push_back(q);
      queue.push_back(std::move(q));
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elements[a], elements[b]));
  }
  FiniteGroup g = from_table(std::move(table));
  g.permutations_ = std::move(elements);
  return g;
}

FiniteGroup FiniteGroup::from_json(const nlohmann::ordered_json& j, int cap) {
  try {
    if (j.contains("table")) {
      auto table = j.at("table").get<std::vector<std::vector<int>>>();
      if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) {
        throw ParseError("group order does not match the table", 0, 0);
      }
      if (static_cast<int>(table.size()) > cap) throw ResourceError("group order exceeds cap " + std::to_string(cap));
      return from_table(std::move(table));
    }
    if (j.contains("generators")) {
      return from_permutations(j.at("degree").get<int>(), j.at("generators").get<std::vector<std::vector<int>>>(), cap);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed group: ") + e.what(), 0, 0);
  }
  throw ParseError("group needs \"table\" or \"generators\"", 0, 0);
}

FiniteGroup FiniteGroup::trivial() { return from_table({{0}}); }

FiniteGroup FiniteGroup::cyclic(int m) {
  if (m < 1) throw PreconditionError("cyclic group order must be positive");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) table[a][b] = (a + b) % m;
  }
  return from_table(std::move(table));
}

FiniteGroup FiniteGroup::symmetric(int m) {
  if (m < 1) throw PreconditionError("symmetric group degree must be positive");
  if (m == 1) return trivial();
  std::vector<int> swap(static_cast<std::size_t>(m)), cycle(static_cast<std::size_t>(m));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < m; ++i) cycle[i] = (i + 1) % m;
  int order = 1;
  for (int i = 2; i <= m; ++i) order *= i;
  return from_permutations(m, {swap, cycle}, std::max(order, kDefaultOrderCap));
}

nlohmann::ordered_json FiniteGroup::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order();
  j["table"] = table_;
  return j;
}

}  // namespace ellone::groupcoh
