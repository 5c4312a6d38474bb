// SPDX-License-Identifier: Apache-2.0
#include "effective/partitions.hpp"

#include <algorithm>
#include <functional>

#include "common/error.hpp"

namespace twomat::effective {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Calls `visit` with every subset of `pool` (as a vector, elements in pool order).
void for_subsets(const std::vector<int>& pool, const std::function<void(const std::vector<int>&)>& visit) {
  const size_t n = pool.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<int> s;
    for (size_t b = 0; b < n; ++b)
      if (mask & (size_t{1} << b)) s.push_back(pool[b]);
    visit(s);
  }
}

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  return out;
}

struct Enumerator {
  int d2;
  std::size_t budget;
  bool ordered;
  std::vector<PartitionTerm> out;

  void push(const PartitionTerm& t) {
    if (out.size() >= budget) fail(ErrorCode::PartitionBudgetExceeded, "too many partition terms");
    out.push_back(t);
  }

  // Sheet tuples for one block drawn from `free`; ordered tuples or ascending sets.
  void sheet_tuples(const std::vector<int>& free, int size, int min_head, std::vector<int>& cur,
                    std::vector<std::vector<int>>& acc) const {
    if (static_cast<int>(cur.size()) == size) {
      acc.push_back(cur);
      return;
    }
    for (int s : free) {
      if (std::find(cur.begin(), cur.end(), s) != cur.end()) continue;
      if (!ordered) {
        if (cur.empty() && s <= min_head) continue;
        if (!cur.empty() && s <= cur.back()) continue;
      }
      cur.push_back(s);
      sheet_tuples(free, size, min_head, cur, acc);
      cur.pop_back();
    }
  }

  void extend(PartitionTerm& t, const std::vector<int>& free_sheets, const std::vector<int>& labels, int genus,
              int last_min) {
    if (labels.empty() && genus == 0 && !t.blocks.empty()) push(t);
    for (int size = 1; size <= static_cast<int>(free_sheets.size()) && size - 1 <= genus; ++size) {
      std::vector<std::vector<int>> tuples;
      std::vector<int> cur;
      sheet_tuples(free_sheets, size, last_min, cur, tuples);
      for (const auto& S : tuples) {
        const std::vector<int> rest_sheets = minus(free_sheets, S);
        for_subsets(labels, [&](const std::vector<int>& L) {
          const std::vector<int> rest_labels = minus(labels, L);
          for (int g = 0; g + size - 1 <= genus; ++g) {
            if (size == 1 && L.empty() && g == 0) continue;  // W_1^(0) = 0
            t.blocks.push_back(Block{S, L, g});
            extend(t, rest_sheets, rest_labels, genus - g - (size - 1), ordered ? 0 : S.front());
            t.blocks.pop_back();
          }
        });
      }
    }
  }
};

std::vector<PartitionTerm> enumerate(int d2, int n_labels, int genus, std::size_t budget, bool ordered) {
  if (d2 < 1 || n_labels < 0 || genus < 0) fail(ErrorCode::InvalidArgument, "invalid partition parameters");
  Enumerator e{d2, budget, ordered, {}};
  std::vector<int> sheets, labels;
  for (int s = 1; s <= d2; ++s) sheets.push_back(s);
  for (int a = 0; a < n_labels; ++a) labels.push_back(a);
  PartitionTerm t;
  e.extend(t, sheets, labels, genus, 0);
  return std::move(e.out);
}

}  // namespace

std::vector<PartitionTerm> canonical_terms(int d2, int n_labels, int genus, std::size_t budget) {
  return enumerate(d2, n_labels, genus, budget, false);
}

std::vector<PartitionTerm> ordered_terms(int d2, int n_labels, int genus, std::size_t budget) {
  return enumerate(d2, n_labels, genus, budget, true);
}

bool is_canonical(const PartitionTerm& t) {
  for (size_t a = 0; a < t.blocks.size(); ++a) {
    const auto& S = t.blocks[a].sheets;
    if (S.empty() || !std::is_sorted(S.begin(), S.end())) return false;
    if (a > 0 && t.blocks[a - 1].sheets.front() >= S.front()) return false;
  }
  return true;
}

double omega_factor(const PartitionTerm& t, TermShape shape) {
  double f = 1.0;
  for (const auto& b : t.blocks) {
    const int extra = static_cast<int>(b.sheets.size()) - 1;  // k_a - |K_a|
    f *= shape == TermShape::Interpolation ? factorial(extra) : factorial(extra + 1);
  }
  if (shape == TermShape::Effective) f *= factorial(t.r());
  return f;
}

}  // namespace twomat::effective
