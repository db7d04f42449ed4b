#include "tractlab/tract.hpp"

#include <algorithm>
#include <set>

namespace tractlab {

BoundError::BoundError(int requested_norm, int valid_bound)
    : std::runtime_error("null-set query at norm " +
                         std::to_string(requested_norm) +
                         " exceeds oracle bound " + std::to_string(valid_bound)),
      requested_(requested_norm),
      valid_(valid_bound) {}

NullOracle::NullOracle(Predicate membership, std::optional<int> valid_norm_bound,
                       std::string description)
    : membership_(std::move(membership)),
      bound_(valid_norm_bound),
      description_(std::move(description)) {
  if (!membership_) throw std::invalid_argument("null oracle needs a predicate");
  if (bound_ && *bound_ < 0)
    throw std::invalid_argument("oracle bound must be nonnegative");
}

bool NullOracle::contains(const FormalSum& a) const {
  if (bound_ && a.norm() > *bound_) throw BoundError(a.norm(), *bound_);
  return membership_(a);
}

Involution Involution::identity(CarrierPtr carrier) {
  std::vector<ElemId> map(carrier->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = ElemId(i);
  return Involution(std::move(carrier), std::move(map));
}

Involution::Involution(CarrierPtr carrier, std::vector<ElemId> map)
    : carrier_(std::move(carrier)), map_(std::move(map)) {
  const std::size_t n = carrier_->size();
  if (map_.size() != n)
    throw std::invalid_argument("involution map has wrong size");
  if (map_[0] != 0) throw std::invalid_argument("involution must fix zero");
  for (std::size_t i = 1; i < n; ++i) {
    if (map_[i] == 0 || map_[i] >= n)
      throw std::invalid_argument("involution must send units to units");
    if (map_[map_[i]] != ElemId(i))
      throw std::invalid_argument("involution must be self-inverse");
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      if (map_[carrier_->mul(ElemId(i), ElemId(j))] !=
          carrier_->mul(map_[i], map_[j]))
        throw std::invalid_argument("involution must be multiplicative");
}

FormalSum Involution::apply(const FormalSum& a) const {
  std::vector<ElemId> mapped;
  mapped.reserve(std::size_t(a.norm()));
  for (const auto& t : a.terms())
    for (std::uint32_t k = 0; k < t.mult; ++k) mapped.push_back(map_[t.elem]);
  return FormalSum(carrier_, std::span<const ElemId>(mapped));
}

bool Involution::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != ElemId(i)) return false;
  return true;
}

Tract::Tract(CarrierPtr carrier, NullOracle null, std::string name)
    : Tract(carrier, std::move(null), Involution::identity(carrier),
            std::move(name)) {}

Tract::Tract(CarrierPtr carrier, NullOracle null, Involution inv,
             std::string name)
    : carrier_(std::move(carrier)),
      null_(std::move(null)),
      involution_(std::move(inv)),
      name_(std::move(name)) {
  if (!carrier_) throw std::invalid_argument("tract needs a carrier");
  if (involution_.carrier_ptr() != carrier_ &&
      !involution_.carrier_ptr()->same_structure(*carrier_))
    throw std::invalid_argument("involution carrier mismatch");
}

FormalSum Tract::sum(std::initializer_list<std::string_view> names) const {
  std::vector<ElemId> ids;
  ids.reserve(names.size());
  for (std::string_view n : names) {
    auto id = carrier_->find(n);
    if (!id) throw std::invalid_argument("unknown element name: " + std::string(n));
    ids.push_back(*id);
  }
  return FormalSum(carrier_, std::span<const ElemId>(ids));
}

Pasture::Pasture(CarrierPtr carrier, std::vector<FormalSum> null_sums,
                 std::string name)
    : carrier_(std::move(carrier)), name_(std::move(name)) {
  if (!carrier_) throw std::invalid_argument("pasture needs a carrier");
  std::set<FormalSum> closed;
  closed.insert(FormalSum(carrier_));
  for (const FormalSum& s : null_sums) {
    if (s.norm() > 3)
      throw std::invalid_argument("pasture null sums must have norm at most 3");
    for (std::size_t u = 1; u < carrier_->size(); ++u)
      closed.insert(s.scaled(ElemId(u)));
  }

  // exactly one unit u with 1 + u null, and it must be epsilon
  int count = 0;
  for (std::size_t u = 1; u < carrier_->size(); ++u) {
    FormalSum s(carrier_, {carrier_->one(), ElemId(u)});
    if (closed.count(s)) {
      ++count;
      if (ElemId(u) != carrier_->epsilon())
        throw std::invalid_argument("1 + u null for a unit other than epsilon");
    }
  }
  if (count != 1)
    throw std::invalid_argument("pasture needs 1 + epsilon null, uniquely");

  null_sums_.assign(closed.begin(), closed.end());
}

bool Pasture::contains(const FormalSum& a) const {
  if (a.norm() > 3) throw BoundError(a.norm(), 3);
  return std::binary_search(null_sums_.begin(), null_sums_.end(), a);
}

Tract Pasture::as_tract() const {
  auto sums = std::make_shared<const std::vector<FormalSum>>(null_sums_);
  NullOracle oracle(
      [sums](const FormalSum& a) {
        return std::binary_search(sums->begin(), sums->end(), a);
      },
      3, "explicit null sums of norm at most 3");
  return Tract(carrier_, std::move(oracle), name_);
}

Morphism make_morphism(Tract source, Tract target, std::vector<ElemId> map,
                       std::string name) {
  const TractCarrier& s = source.carrier();
  const TractCarrier& t = target.carrier();
  if (map.size() != s.size())
    throw std::invalid_argument("morphism map has wrong size");
  if (map[0] != 0) throw std::invalid_argument("morphism must send zero to zero");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (map[i] == 0 || map[i] >= t.size())
      throw std::invalid_argument("morphism must send units to units");
  if (map[s.one()] != t.one())
    throw std::invalid_argument("morphism must preserve the identity");
  for (std::size_t i = 1; i < s.size(); ++i)
    for (std::size_t j = 1; j < s.size(); ++j)
      if (map[s.mul(ElemId(i), ElemId(j))] != t.mul(map[i], map[j]))
        throw std::invalid_argument("morphism must be multiplicative");
  if (name.empty()) name = source.name() + "->" + target.name();
  return Morphism{std::move(source), std::move(target), std::move(map),
                  std::move(name)};
}

}  // namespace tractlab
