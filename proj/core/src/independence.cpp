// SPDX-License-Identifier: Apache-2.0
#include "subadd/independence.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "subadd/errors.hpp"

namespace subadd {

namespace {

std::string show(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

class StarSearch {
 public:
  StarSearch(Triple grid, std::size_t target) : grid_(grid), target_(target) {
    used_.assign(grid[0] * grid[1] * grid[2], false);
  }

  std::optional<IndependenceSystem> run() {
    if (4 * target_ > used_.size()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    IndependenceSystem sys;
    sys.grid = grid_;
    for (const auto& star : stars_) {
      sys.J.push_back(star[0]);
      for (std::size_t i = 0; i < 3; ++i) sys.s[i].emplace(star[0], star[i + 1]);
    }
    return sys;
  }

 private:
  std::size_t cell(const Triple& t) const { return ((t[0] - 1) * grid_[1] + (t[1] - 1)) * grid_[2] + (t[2] - 1); }
  Triple triple(std::size_t c) const {
    return {c / (grid_[1] * grid_[2]) + 1, (c / grid_[2]) % grid_[1] + 1, c % grid_[2] + 1};
  }

  // Places stars whose centre j has cell index >= first.
  bool extend(std::size_t first) {
    if (stars_.size() == target_) return true;
    const std::size_t free = static_cast<std::size_t>(std::count(used_.begin(), used_.end(), false));
    if (free < 4 * (target_ - stars_.size())) return false;
    for (std::size_t c = first; c < used_.size(); ++c) {
      if (used_[c]) continue;
      used_[c] = true;
      if (place_leaves(triple(c), 0, {}, c)) return true;
      used_[c] = false;
    }
    return false;
  }

  bool place_leaves(const Triple& j, std::size_t axis, std::array<Triple, 3> leaves, std::size_t centre) {
    if (axis == 3) {
      stars_.push_back({j, leaves[0], leaves[1], leaves[2]});
      if (extend(centre + 1)) return true;
      stars_.pop_back();
      return false;
    }
    // Leaf for axis i keeps coordinate i of j and differs from j.
    const std::size_t a = (axis + 1) % 3, b = (axis + 2) % 3;
    for (std::size_t x = 1; x <= grid_[a]; ++x) {
      for (std::size_t y = 1; y <= grid_[b]; ++y) {
        Triple k = j;
        k[a] = x;
        k[b] = y;
        const std::size_t kc = cell(k);
        if (used_[kc]) continue;
        used_[kc] = true;
        leaves[axis] = k;
        if (place_leaves(j, axis + 1, leaves, centre)) return true;
        used_[kc] = false;
      }
    }
    return false;
  }

  Triple grid_;
  std::size_t target_;
  std::vector<bool> used_;
  std::vector<std::array<Triple, 4>> stars_;
};

}  // namespace

std::vector<Triple> IndependenceSystem::K(std::size_t i) const {
  std::vector<Triple> out;
  for (const auto& [j, k] : s.at(i)) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

std::string IndependenceSystem::violation() const {
  std::set<Triple> seen;
  auto in_grid = [&](const Triple& t) {
    for (std::size_t i = 0; i < 3; ++i)
      if (t[i] < 1 || t[i] > grid[i]) return false;
    return true;
  };
  if (!std::is_sorted(J.begin(), J.end())) return "J is not sorted";
  for (const auto& j : J) {
    if (!in_grid(j)) return "J element " + show(j) + " outside the grid";
    if (!seen.insert(j).second) return "J element " + show(j) + " repeated";
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (s[i].size() != J.size()) return "s" + std::to_string(i + 1) + " is not defined on all of J";
    for (const auto& [j, k] : s[i]) {
      if (!std::binary_search(J.begin(), J.end(), j)) return "s" + std::to_string(i + 1) + " has domain outside J";
      if (!in_grid(k)) return "K" + std::to_string(i + 1) + " element " + show(k) + " outside the grid";
      if (k[i] != j[i]) {
        return "s" + std::to_string(i + 1) + " moves coordinate " + std::to_string(i + 1) + " of " + show(j);
      }
      if (!seen.insert(k).second) return "K" + std::to_string(i + 1) + " element " + show(k) + " is not disjoint";
    }
  }
  return {};
}

IndependenceSystem independence_system_even(std::size_t n1, std::size_t n2, std::size_t n3) {
  if (n1 == 0 || n2 == 0 || n3 == 0 || n1 % 2 || n2 % 2 || n3 % 2) {
    throw std::invalid_argument("independence_system_even: grid sizes must be even and positive");
  }
  const std::size_t m1 = n1 / 2, m2 = n2 / 2, m3 = n3 / 2;
  IndependenceSystem sys;
  sys.grid = {n1, n2, n3};
  for (std::size_t a = 1; a <= m1; ++a) {
    for (std::size_t b = 1; b <= m2; ++b) {
      for (std::size_t c = 1; c <= m3; ++c) {
        const Triple lo{a, b, c};
        sys.J.push_back(lo);
        sys.s[0].emplace(lo, Triple{a, m2 + b, m3 + c});
        sys.s[1].emplace(lo, Triple{m1 + a, b, m3 + c});
        sys.s[2].emplace(lo, Triple{m1 + a, m2 + b, c});
        const Triple hi{m1 + a, m2 + b, m3 + c};
        sys.J.push_back(hi);
        sys.s[0].emplace(hi, Triple{m1 + a, b, c});
        sys.s[1].emplace(hi, Triple{a, m2 + b, c});
        sys.s[2].emplace(hi, Triple{a, b, m3 + c});
      }
    }
  }
  std::sort(sys.J.begin(), sys.J.end());
  return sys;
}

std::optional<IndependenceSystem> find_independence_system(std::size_t n1, std::size_t n2, std::size_t n3,
                                                           std::size_t size) {
  if (n1 == 0 || n2 == 0 || n3 == 0) throw std::invalid_argument("brute_force_M: grid sizes must be positive");
  if (n1 * n2 * n3 > kBruteForceCellLimit) {
    throw SearchGuardError("brute_force_M: grid has " + std::to_string(n1 * n2 * n3) + " cells, limit is " +
                           std::to_string(kBruteForceCellLimit));
  }
  return StarSearch({n1, n2, n3}, size).run();
}

bool brute_force_M(std::size_t n1, std::size_t n2, std::size_t n3, std::size_t size) {
  return find_independence_system(n1, n2, n3, size).has_value();
}

void write_system(std::ostream& out, const IndependenceSystem& sys) {
  out << "grid " << sys.grid[0] << ' ' << sys.grid[1] << ' ' << sys.grid[2] << '\n' << "size " << sys.size() << '\n';
  for (const auto& j : sys.J) {
    out << j[0] << ' ' << j[1] << ' ' << j[2];
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& k = sys.s[i].at(j);
      out << " | " << k[0] << ' ' << k[1] << ' ' << k[2];
    }
    out << '\n';
  }
}

IndependenceSystem read_system(std::istream& in) {
  IndependenceSystem sys;
  std::string word;
  std::size_t size = 0;
  if (!(in >> word) || word != "grid" || !(in >> sys.grid[0] >> sys.grid[1] >> sys.grid[2])) {
    throw std::invalid_argument("independence system: expected 'grid n1 n2 n3'");
  }
  if (!(in >> word) || word != "size" || !(in >> size)) throw std::invalid_argument("independence system: expected 'size M'");
  auto read_triple = [&](Triple& t) {
    if (!(in >> t[0] >> t[1] >> t[2])) throw std::invalid_argument("independence system: truncated star line");
  };
  for (std::size_t r = 0; r < size; ++r) {
    Triple j;
    read_triple(j);
    for (std::size_t i = 0; i < 3; ++i) {
      if (!(in >> word) || word != "|") throw std::invalid_argument("independence system: expected '|'");
      Triple k;
      read_triple(k);
      if (!sys.s[i].emplace(j, k).second) throw std::invalid_argument("independence system: repeated J element");
    }
    sys.J.push_back(j);
  }
  std::sort(sys.J.begin(), sys.J.end());
  return sys;
}

}  // namespace subadd
