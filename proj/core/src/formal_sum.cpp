#include "tractlab/formal_sum.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tractlab {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

TractCarrier::TractCarrier(std::vector<std::string> names,
                           const std::vector<std::vector<ElemId>>& mul,
                           ElemId one, ElemId epsilon)
    : names_(std::move(names)), one_(one), eps_(epsilon) {
  const std::size_t n = names_.size();
  require(n >= 2, "carrier needs a zero and at least one unit");
  require(n <= 256, "carrier too large");
  require(mul.size() == n, "multiplication table has wrong row count");
  for (const auto& row : mul)
    require(row.size() == n, "multiplication table has wrong column count");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      require(mul[i][j] < n, "multiplication table entry out of range");
  require(one >= 1 && one < n, "identity must be a unit");
  require(epsilon >= 1 && epsilon < n, "epsilon must be a unit");
  for (std::size_t i = 0; i < n; ++i) {
    auto seen = std::find_if(names_.begin(), names_.begin() + i,
                             [&](const std::string& s) { return s == names_[i]; });
    require(seen == names_.begin() + i, "element names must be distinct");
  }

  mul_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul_[i * n + j] = mul[i][j];

  for (std::size_t i = 0; i < n; ++i) {
    require(this->mul(0, ElemId(i)) == 0 && this->mul(ElemId(i), 0) == 0,
            "zero must be absorbing");
    require(this->mul(one_, ElemId(i)) == ElemId(i) &&
                this->mul(ElemId(i), one_) == ElemId(i),
            "identity law fails");
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      require(this->mul(ElemId(i), ElemId(j)) != 0, "units must be closed");
      require(this->mul(ElemId(i), ElemId(j)) == this->mul(ElemId(j), ElemId(i)),
              "multiplication must be commutative");
      for (std::size_t k = 1; k < n; ++k)
        require(this->mul(this->mul(ElemId(i), ElemId(j)), ElemId(k)) ==
                    this->mul(ElemId(i), this->mul(ElemId(j), ElemId(k))),
                "multiplication must be associative");
    }

  inv_.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 1; j < n; ++j)
      if (this->mul(ElemId(i), ElemId(j)) == one_) {
        inv_[i] = ElemId(j);
        found = true;
        break;
      }
    require(found, "every unit needs an inverse");
  }
  require(this->mul(eps_, eps_) == one_, "epsilon squared must be one");
}

ElemId TractCarrier::inverse(ElemId unit) const {
  if (unit == 0 || unit >= names_.size())
    throw std::invalid_argument("inverse is defined for units only");
  return inv_[unit];
}

std::optional<ElemId> TractCarrier::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return ElemId(i);
  return std::nullopt;
}

bool TractCarrier::same_structure(const TractCarrier& other) const {
  return names_ == other.names_ && mul_ == other.mul_ && one_ == other.one_ &&
         eps_ == other.eps_;
}

CarrierPtr make_carrier(std::vector<std::string> names,
                        const std::vector<std::vector<ElemId>>& mul,
                        ElemId one, ElemId epsilon) {
  return std::make_shared<const TractCarrier>(std::move(names), mul, one,
                                              epsilon);
}

FormalSum::FormalSum(CarrierPtr carrier) : carrier_(std::move(carrier)) {
  require(carrier_ != nullptr, "formal sum needs a carrier");
}

FormalSum::FormalSum(CarrierPtr carrier, std::initializer_list<ElemId> elems)
    : FormalSum(std::move(carrier),
                std::span<const ElemId>(elems.begin(), elems.size())) {}

FormalSum::FormalSum(CarrierPtr carrier, std::span<const ElemId> elems)
    : carrier_(std::move(carrier)) {
  require(carrier_ != nullptr, "formal sum needs a carrier");
  std::vector<ElemId> sorted(elems.begin(), elems.end());
  std::sort(sorted.begin(), sorted.end());
  for (ElemId e : sorted) {
    require(e >= 1 && e < carrier_->size(), "formal sum terms must be units");
    add_term(e, 1);
  }
}

void FormalSum::add_term(ElemId elem, std::uint32_t mult) {
  if (mult == 0) return;
  if (!terms_.empty() && terms_.back().elem == elem)
    terms_.back().mult += mult;
  else
    terms_.push_back({elem, mult});
  norm_ += int(mult);
}

std::vector<ElemId> FormalSum::elements() const {
  std::vector<ElemId> out;
  out.reserve(std::size_t(norm_));
  for (const Term& t : terms_)
    for (std::uint32_t i = 0; i < t.mult; ++i) out.push_back(t.elem);
  return out;
}

FormalSum FormalSum::scaled(ElemId unit) const {
  if (unit == 0 || unit >= carrier_->size())
    throw std::invalid_argument("scaling requires a unit");
  std::vector<Term> mapped;
  mapped.reserve(terms_.size());
  for (const Term& t : terms_) mapped.push_back({carrier_->mul(unit, t.elem), t.mult});
  std::sort(mapped.begin(), mapped.end(),
            [](const Term& a, const Term& b) { return a.elem < b.elem; });
  FormalSum out(carrier_);
  for (const Term& t : mapped) out.add_term(t.elem, t.mult);
  return out;
}

FormalSum FormalSum::negated() const { return scaled(carrier_->epsilon()); }

namespace {

void require_same_carrier(const FormalSum& a, const FormalSum& b) {
  if (a.carrier_ptr() == b.carrier_ptr()) return;
  if (!a.carrier().same_structure(b.carrier()))
    throw std::invalid_argument("formal sums live over different carriers");
}

}  // namespace

FormalSum operator+(const FormalSum& a, const FormalSum& b) {
  require_same_carrier(a, b);
  FormalSum out(a.carrier_);
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && a.terms_[i].elem < b.terms_[j].elem)) {
      out.add_term(a.terms_[i].elem, a.terms_[i].mult);
      ++i;
    } else if (i == a.terms_.size() || b.terms_[j].elem < a.terms_[i].elem) {
      out.add_term(b.terms_[j].elem, b.terms_[j].mult);
      ++j;
    } else {
      out.add_term(a.terms_[i].elem, a.terms_[i].mult + b.terms_[j].mult);
      ++i;
      ++j;
    }
  }
  return out;
}

FormalSum operator*(const FormalSum& a, const FormalSum& b) {
  require_same_carrier(a, b);
  std::vector<FormalSum::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      products.push_back({a.carrier_->mul(ta.elem, tb.elem), ta.mult * tb.mult});
  std::sort(products.begin(), products.end(),
            [](const FormalSum::Term& x, const FormalSum::Term& y) {
              return x.elem < y.elem;
            });
  FormalSum out(a.carrier_);
  for (const auto& t : products) out.add_term(t.elem, t.mult);
  return out;
}

bool operator==(const FormalSum& a, const FormalSum& b) {
  require_same_carrier(a, b);
  return a.terms_ == b.terms_;
}

std::strong_ordering operator<=>(const FormalSum& a, const FormalSum& b) {
  require_same_carrier(a, b);
  if (auto c = a.norm_ <=> b.norm_; c != 0) return c;
  // lexicographic comparison of the expanded sequences, walked term-wise
  std::size_t i = 0, j = 0;
  std::uint32_t ia = 0, jb = 0;  // consumed multiplicity within current term
  while (i < a.terms_.size() && j < b.terms_.size()) {
    if (auto c = a.terms_[i].elem <=> b.terms_[j].elem; c != 0) return c;
    std::uint32_t take = std::min(a.terms_[i].mult - ia, b.terms_[j].mult - jb);
    ia += take;
    jb += take;
    if (ia == a.terms_[i].mult) {
      ++i;
      ia = 0;
    }
    if (jb == b.terms_[j].mult) {
      ++j;
      jb = 0;
    }
  }
  return std::strong_ordering::equal;  // equal norms exhaust together
}

std::string FormalSum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_)
    for (std::uint32_t k = 0; k < t.mult; ++k) {
      if (!out.empty()) out += "+";
      const std::string& n = carrier_->name(t.elem);
      if (!n.empty() && n.front() == '-')
        out += "(" + n + ")";
      else
        out += n;
    }
  return out;
}

std::size_t FormalSumHash::operator()(const FormalSum& s) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& t : s.terms_) {
    h ^= std::hash<std::uint64_t>()((std::uint64_t(t.elem) << 32) | t.mult) +
         0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<FormalSum> enumerate_sums(const CarrierPtr& carrier, int bound,
                                      int lo) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  std::vector<FormalSum> out;
  const int units = int(carrier->unit_count());
  std::vector<ElemId> stack;
  // combinations with replacement over unit ids: ascending ids give lex
  // order within each norm
  std::function<void(int, int)> rec = [&](int remaining, int least) {
    if (remaining == 0) {
      out.emplace_back(carrier, std::span<const ElemId>(stack));
      return;
    }
    for (int e = least; e <= units; ++e) {
      stack.push_back(ElemId(e));
      rec(remaining - 1, e);
      stack.pop_back();
    }
  };
  for (int n = std::max(lo, 0); n <= bound; ++n) rec(n, 1);
  return out;
}

FormalSum orbit_min(const FormalSum& a) {
  FormalSum best = a;
  for (int u = 1; u < int(a.carrier().size()); ++u) {
    FormalSum cand = a.scaled(ElemId(u));
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace tractlab
