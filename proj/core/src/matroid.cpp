#include "tractlab/matroid.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace tractlab {

namespace {

constexpr int kMaxGround = 20;

std::vector<int> mask_indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

// canonical circuit order: lexicographic on sorted index lists
bool circuit_less(std::uint32_t a, std::uint32_t b) {
  return mask_indices(a) < mask_indices(b);
}

void sort_circuits(std::vector<std::uint32_t>& circuits) {
  std::sort(circuits.begin(), circuits.end(), circuit_less);
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
}

}  // namespace

Matroid::Matroid(std::vector<std::string> ground,
                 std::vector<std::uint32_t> circuits)
    : ground_(std::move(ground)), circuits_(std::move(circuits)) {
  sort_circuits(circuits_);
}

Matroid Matroid::from_circuits(
    std::vector<std::string> ground,
    const std::vector<std::vector<std::string>>& circuits) {
  if (ground.size() > std::size_t(kMaxGround))
    throw std::invalid_argument("ground set too large");
  for (std::size_t i = 0; i < ground.size(); ++i)
    for (std::size_t j = i + 1; j < ground.size(); ++j)
      if (ground[i] == ground[j])
        throw std::invalid_argument("ground labels must be distinct");

  auto index = [&](const std::string& label) {
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (ground[i] == label) return int(i);
    throw std::invalid_argument("unknown ground element: " + label);
  };

  std::vector<std::uint32_t> masks;
  for (const auto& c : circuits) {
    if (c.empty()) throw std::invalid_argument("circuits must be nonempty");
    std::uint32_t m = 0;
    for (const auto& label : c) {
      std::uint32_t bit = 1u << index(label);
      if (m & bit)
        throw std::invalid_argument("repeated element inside a circuit");
      m |= bit;
    }
    masks.push_back(m);
  }
  sort_circuits(masks);

  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (i == j) continue;
      if ((masks[i] & masks[j]) == masks[i])
        throw std::invalid_argument("circuits must form an antichain");
    }

  // weak elimination: distinct circuits meeting in e admit a circuit
  // inside the union minus e
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      std::uint32_t common = masks[i] & masks[j];
      for (int e = 0; common >> e; ++e) {
        if (!((common >> e) & 1)) continue;
        std::uint32_t target = (masks[i] | masks[j]) & ~(1u << e);
        bool found = false;
        for (std::uint32_t m : masks)
          if ((m & target) == m) {
            found = true;
            break;
          }
        if (!found)
          throw std::invalid_argument("circuit elimination fails");
      }
    }

  return Matroid(std::move(ground), std::move(masks));
}

Matroid Matroid::uniform(int rank, int n) {
  if (rank < 0 || n < 0 || rank > n)
    throw std::invalid_argument("uniform matroid needs 0 <= rank <= n");
  if (n > kMaxGround) throw std::invalid_argument("ground set too large");
  std::vector<std::string> ground;
  ground.reserve(std::size_t(n));
  for (int i = 0; i < n; ++i) ground.push_back(std::to_string(i + 1));
  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (std::popcount(s) == rank + 1) masks.push_back(s);
  return Matroid(std::move(ground), std::move(masks));
}

int Matroid::element_index(std::string_view label) const {
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (ground_[i] == label) return int(i);
  return -1;
}

std::vector<std::vector<std::string>> Matroid::circuits() const {
  std::vector<std::vector<std::string>> out;
  for (std::uint32_t m : circuits_) {
    std::vector<std::string> c;
    for (int i : mask_indices(m)) c.push_back(ground_[std::size_t(i)]);
    out.push_back(std::move(c));
  }
  return out;
}

bool Matroid::is_independent(std::uint32_t subset) const {
  for (std::uint32_t c : circuits_)
    if ((c & subset) == c) return false;
  return true;
}

int Matroid::rank() const {
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << ground_.size()); ++s)
    if (is_independent(s)) best = std::max(best, std::popcount(s));
  return best;
}

std::vector<std::uint32_t> Matroid::bases() const {
  const int r = rank();
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << ground_.size()); ++s)
    if (std::popcount(s) == r && is_independent(s)) out.push_back(s);
  return out;
}

Matroid Matroid::dual() const {
  const std::uint32_t full = (1u << ground_.size()) - 1;
  std::vector<std::uint32_t> cobases;
  for (std::uint32_t b : bases()) cobases.push_back(full & ~b);
  auto coindependent = [&](std::uint32_t s) {
    for (std::uint32_t cb : cobases)
      if ((s & cb) == s) return true;
    return false;
  };
  // dual circuits: minimal nonempty sets that are not coindependent,
  // i.e. removing any element must leave a coindependent set
  std::vector<std::uint32_t> cocircuits;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (coindependent(s)) continue;
    bool minimal = true;
    for (int e = 0; s >> e; ++e)
      if ((s >> e) & 1) {
        std::uint32_t t = s & ~(1u << e);
        if (!coindependent(t)) {
          minimal = false;
          break;
        }
      }
    if (minimal) cocircuits.push_back(s);
  }
  return Matroid(ground_, std::move(cocircuits));
}

Matroid Matroid::deleted(const std::string& e) const {
  int idx = element_index(e);
  if (idx < 0) throw std::invalid_argument("unknown ground element: " + e);
  std::vector<std::string> ground;
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (int(i) != idx) ground.push_back(ground_[i]);

  auto drop_bit = [&](std::uint32_t m) {
    std::uint32_t low = m & ((1u << idx) - 1);
    std::uint32_t high = (m >> (idx + 1)) << idx;
    return low | high;
  };
  std::vector<std::uint32_t> masks;
  for (std::uint32_t c : circuits_)
    if (!((c >> idx) & 1)) masks.push_back(drop_bit(c));
  return Matroid(std::move(ground), std::move(masks));
}

Matroid Matroid::contracted(const std::string& e) const {
  int idx = element_index(e);
  if (idx < 0) throw std::invalid_argument("unknown ground element: " + e);
  std::vector<std::string> ground;
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (int(i) != idx) ground.push_back(ground_[i]);

  auto drop_bit = [&](std::uint32_t m) {
    std::uint32_t cleared = m & ~(1u << idx);
    std::uint32_t low = cleared & ((1u << idx) - 1);
    std::uint32_t high = (cleared >> (idx + 1)) << idx;
    return low | high;
  };
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t c : circuits_) {
    std::uint32_t m = drop_bit(c);
    if (m != 0) candidates.push_back(m);
  }
  // keep the minimal ones
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m : candidates) {
    bool minimal = true;
    for (std::uint32_t other : candidates)
      if (other != m && (other & m) == other) {
        minimal = false;
        break;
      }
    if (minimal) masks.push_back(m);
  }
  return Matroid(std::move(ground), std::move(masks));
}

}  // namespace tractlab
