#include "tractlab/partial_field.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "tractlab/closures.hpp"

namespace tractlab {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

FiniteRing::FiniteRing(std::vector<std::string> names,
                       const std::vector<std::vector<ElemId>>& add,
                       const std::vector<std::vector<ElemId>>& mul, ElemId zero,
                       ElemId one, std::string name)
    : names_(std::move(names)), zero_(zero), one_(one), name_(std::move(name)) {
  const std::size_t n = names_.size();
  require(n >= 2, "ring needs at least two elements");
  require(n <= 256, "ring too large");
  require(zero_ < n && one_ < n && zero_ != one_, "zero and one must differ");
  require(add.size() == n && mul.size() == n, "table has wrong row count");
  for (const auto& row : add) require(row.size() == n, "bad add row");
  for (const auto& row : mul) require(row.size() == n, "bad mul row");

  add_.resize(n * n);
  mul_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      require(add[i][j] < n && mul[i][j] < n, "table entry out of range");
      add_[i * n + j] = add[i][j];
      mul_[i * n + j] = mul[i][j];
    }

  neg_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    require(this->add(ElemId(a), zero_) == ElemId(a), "additive identity fails");
    require(this->mul(ElemId(a), one_) == ElemId(a), "multiplicative identity fails");
    require(this->mul(ElemId(a), zero_) == zero_, "zero must be absorbing");
    bool has_neg = false;
    for (std::size_t b = 0; b < n; ++b)
      if (this->add(ElemId(a), ElemId(b)) == zero_) {
        neg_[a] = ElemId(b);
        has_neg = true;
        break;
      }
    require(has_neg, "every element needs an additive inverse");
    for (std::size_t b = 0; b < n; ++b) {
      require(this->add(ElemId(a), ElemId(b)) == this->add(ElemId(b), ElemId(a)),
              "addition must be commutative");
      require(this->mul(ElemId(a), ElemId(b)) == this->mul(ElemId(b), ElemId(a)),
              "multiplication must be commutative");
      for (std::size_t c = 0; c < n; ++c) {
        require(this->add(this->add(ElemId(a), ElemId(b)), ElemId(c)) ==
                    this->add(ElemId(a), this->add(ElemId(b), ElemId(c))),
                "addition must be associative");
        require(this->mul(this->mul(ElemId(a), ElemId(b)), ElemId(c)) ==
                    this->mul(ElemId(a), this->mul(ElemId(b), ElemId(c))),
                "multiplication must be associative");
        require(this->mul(ElemId(a), this->add(ElemId(b), ElemId(c))) ==
                    this->add(this->mul(ElemId(a), ElemId(b)),
                              this->mul(ElemId(a), ElemId(c))),
                "multiplication must distribute over addition");
      }
    }
  }
}

FiniteRing FiniteRing::integers_mod(int n) {
  require(n >= 2, "modulus must be at least 2");
  require(n <= 256, "modulus too large");
  const std::size_t m = std::size_t(n);
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) names[i] = std::to_string(i);
  std::vector<std::vector<ElemId>> add(m, std::vector<ElemId>(m));
  std::vector<std::vector<ElemId>> mul(m, std::vector<ElemId>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      add[a][b] = ElemId((a + b) % m);
      mul[a][b] = ElemId((a * b) % m);
    }
  return FiniteRing(std::move(names), add, mul, 0, 1,
                    "Z/" + std::to_string(n));
}

FiniteRing FiniteRing::gf(int p) {
  require(p >= 2 && p <= 7, "gf supports primes up to 7");
  for (int d = 2; d * d <= p; ++d) require(p % d != 0, "gf needs a prime");
  FiniteRing r = integers_mod(p);
  r.name_ = "gf" + std::to_string(p);
  return r;
}

std::optional<ElemId> FiniteRing::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return ElemId(i);
  return std::nullopt;
}

bool FiniteRing::is_unit(ElemId a) const {
  for (std::size_t b = 0; b < names_.size(); ++b)
    if (mul(a, ElemId(b)) == one_) return true;
  return false;
}

std::vector<ElemId> FiniteRing::units() const {
  std::vector<ElemId> out;
  for (std::size_t a = 0; a < names_.size(); ++a)
    if (is_unit(ElemId(a))) out.push_back(ElemId(a));
  return out;
}

PartialField::PartialField(FiniteRing ring, std::vector<ElemId> group,
                           std::string name)
    : ring_(std::move(ring)), group_(std::move(group)), name_(std::move(name)) {
  const std::size_t u = group_.size();
  std::vector<std::string> names(u + 1);
  names[0] = "0";
  for (std::size_t i = 0; i < u; ++i) names[i + 1] = ring_.elem_name(group_[i]);
  auto unit_of = [&](ElemId ring_id) -> ElemId {
    for (std::size_t i = 0; i < u; ++i)
      if (group_[i] == ring_id) return ElemId(i + 1);
    throw std::logic_error("product left the subgroup");
  };
  std::vector<std::vector<ElemId>> mul(u + 1, std::vector<ElemId>(u + 1, 0));
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = 0; j < u; ++j)
      mul[i + 1][j + 1] = unit_of(ring_.mul(group_[i], group_[j]));
  ElemId one = unit_of(ring_.one());
  ElemId eps = unit_of(ring_.neg(ring_.one()));
  carrier_ = make_carrier(std::move(names), mul, one, eps);
}

PartialField PartialField::make(FiniteRing ring,
                                const std::vector<ElemId>& generators,
                                std::string name) {
  for (ElemId g : generators) {
    if (g >= ring.size())
      throw std::invalid_argument("generator out of range");
    if (!ring.is_unit(g))
      throw std::invalid_argument("generator " + ring.elem_name(g) +
                                  " is not a unit of the ring");
  }
  std::set<ElemId> group{ring.one(), ring.neg(ring.one())};
  group.insert(generators.begin(), generators.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ElemId> snapshot(group.begin(), group.end());
    for (ElemId a : snapshot)
      for (ElemId b : snapshot)
        changed |= group.insert(ring.mul(a, b)).second;
  }
  // a finite multiplicatively closed set of units contains inverses
  if (name.empty()) name = ring.name() + "-subgroup";
  return PartialField(std::move(ring),
                      std::vector<ElemId>(group.begin(), group.end()),
                      std::move(name));
}

namespace {

bool vanishes_in_ring(const PartialField& pf, const FormalSum& s) {
  const FiniteRing& r = pf.ring();
  ElemId acc = r.zero();
  for (const auto& t : s.terms())
    for (std::uint32_t k = 0; k < t.mult; ++k)
      acc = r.add(acc, pf.ring_elem(t.elem));
  return acc == r.zero();
}

}  // namespace

Pasture pasture_null(const PartialField& pf) {
  std::vector<FormalSum> sums;
  for (const FormalSum& s : enumerate_sums(pf.carrier_ptr(), 3))
    if (vanishes_in_ring(pf, s)) sums.push_back(s);
  return Pasture(pf.carrier_ptr(), std::move(sums), pf.name());
}

Tract tract_embedding(const PartialField& pf) {
  auto shared = std::make_shared<const PartialField>(pf);
  NullOracle oracle(
      [shared](const FormalSum& s) { return vanishes_in_ring(*shared, s); },
      std::nullopt, "the sum vanishes in the ambient ring");
  return Tract(pf.carrier_ptr(), std::move(oracle), pf.name());
}

Tract gf_tract(int p) {
  FiniteRing ring = FiniteRing::gf(p);
  std::vector<ElemId> gens = ring.units();
  std::string name = ring.name();
  return tract_embedding(PartialField::make(std::move(ring), gens, name));
}

}  // namespace tractlab
