#include "tractlab/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tractlab/builtins.hpp"
#include "tractlab/matroid.hpp"

namespace tractlab {

namespace {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
  return j;
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(std::string("missing field: ") + key);
  return *it;
}

std::vector<std::string> name_list(const Json& j, const char* key) {
  std::vector<std::string> out;
  for (const Json& e : field(j, key)) out.push_back(e.get<std::string>());
  return out;
}

// Element names reordered so the declared zero comes first; the returned
// map sends a name to its new index.
struct NameTable {
  std::vector<std::string> names;

  ElemId at(const std::string& n) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return ElemId(i);
    throw std::invalid_argument("unknown element name: " + n);
  }
};

NameTable reorder_zero_first(std::vector<std::string> elements,
                             const std::string& zero) {
  NameTable t;
  t.names.push_back(zero);
  bool seen = false;
  for (std::string& n : elements) {
    if (n == zero) {
      if (seen) throw std::invalid_argument("duplicate zero element");
      seen = true;
      continue;
    }
    t.names.push_back(std::move(n));
  }
  if (!seen) throw std::invalid_argument("zero is not among the elements");
  return t;
}

// name matrix indexed by the file's element order -> id matrix in the
// reordered table
std::vector<std::vector<ElemId>> id_matrix(const Json& matrix,
                                           const std::vector<std::string>& file_order,
                                           const NameTable& table) {
  if (matrix.size() != file_order.size())
    throw std::invalid_argument("table has wrong number of rows");
  std::size_t n = table.names.size();
  std::vector<std::vector<ElemId>> out(n, std::vector<ElemId>(n, 0));
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const Json& row = matrix[i];
    if (row.size() != file_order.size())
      throw std::invalid_argument("table has wrong number of columns");
    ElemId a = table.at(file_order[i]);
    for (std::size_t j = 0; j < row.size(); ++j) {
      ElemId b = table.at(file_order[j]);
      out[a][b] = table.at(row[j].get<std::string>());
    }
  }
  return out;
}

FormalSum sum_from_names(const CarrierPtr& carrier, const Json& names) {
  std::vector<ElemId> elems;
  for (const Json& n : names) {
    auto id = carrier->find(n.get<std::string>());
    if (!id || *id == 0)
      throw std::invalid_argument("formal sum term is not a unit: " +
                                  n.get<std::string>());
    elems.push_back(*id);
  }
  return FormalSum(carrier, std::span<const ElemId>(elems));
}

Json sum_wire(const FormalSum& s) {
  Json out = Json::array();
  for (const FormalSum::Term& t : s.terms())
    out.push_back(Json::array({s.carrier().name(t.elem), t.mult}));
  return out;
}

Json gen_wire(const GenVector& v) {
  Json out = Json::array();
  for (const FormalSum& s : v.coords) out.push_back(sum_wire(s));
  return out;
}

Json witness_wire(const Witness& w) {
  Json parts = Json::array();
  for (const auto& [label, sum] : w.parts)
    parts.push_back(Json::array({label, sum_wire(sum)}));
  Json out;
  out["parts"] = std::move(parts);
  out["note"] = w.note;
  return out;
}

Json report_wire(const AxiomReport& r) {
  Json out;
  out["axiom"] = r.axiom;
  out["holds"] = r.holds;
  out["bound_checked"] = r.bound_checked;
  out["cases"] = r.cases;
  out["violations"] = r.violations;
  out["witness"] = r.witness ? witness_wire(*r.witness) : Json(nullptr);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Tract builtin_null_tract(const Json& null_spec, const CarrierPtr& carrier) {
  std::string name = field(null_spec, "name").get<std::string>();
  Tract builtin = [&] {
    if (name == "gf") {
      int p = field(field(null_spec, "params"), "p").get<int>();
      return builtins::tract_by_name("gf" + std::to_string(p));
    }
    return builtins::tract_by_name(name);
  }();
  const TractCarrier& bc = builtin.carrier();
  if (bc.size() != carrier->size() || !bc.same_structure(*carrier))
    throw std::invalid_argument("declared carrier does not match builtin " +
                                name);
  for (std::size_t i = 0; i < bc.size(); ++i)
    if (bc.name(ElemId(i)) != carrier->name(ElemId(i)))
      throw std::invalid_argument("element names do not match builtin " + name);
  return builtin;
}

}  // namespace

Tract tract_from_json(const std::string& text) {
  Json j = parse(text);
  std::vector<std::string> file_order = name_list(j, "elements");
  std::string zero = field(j, "zero").get<std::string>();
  NameTable table = reorder_zero_first(file_order, zero);
  auto mul = id_matrix(field(j, "mul"), file_order, table);
  ElemId one = table.at(field(j, "one").get<std::string>());
  ElemId eps = table.at(field(j, "epsilon").get<std::string>());
  CarrierPtr carrier = make_carrier(table.names, mul, one, eps);

  const Json& null_spec = field(j, "null");
  std::string kind = field(null_spec, "kind").get<std::string>();
  if (kind == "builtin") return builtin_null_tract(null_spec, carrier);
  if (kind != "explicit")
    throw std::invalid_argument("unknown null kind: " + kind);

  int bound = field(null_spec, "bound").get<int>();
  if (bound < 0) throw std::invalid_argument("null bound must be nonnegative");
  auto sums = std::make_shared<std::set<FormalSum>>();
  for (const Json& s : field(null_spec, "sums")) {
    FormalSum sum = sum_from_names(carrier, s);
    if (sum.norm() > bound)
      throw std::invalid_argument("null sum exceeds the declared bound");
    sums->insert(std::move(sum));
  }
  NullOracle oracle(
      [sums](const FormalSum& a) { return sums->count(a) > 0; }, bound,
      "explicit list");
  return Tract(carrier, std::move(oracle), j.value("name", "custom"));
}

Hyperfield hyperfield_from_json(const std::string& text) {
  Json j = parse(text);
  std::vector<std::string> file_order = name_list(j, "elements");
  std::string zero = field(j, "zero").get<std::string>();
  NameTable table = reorder_zero_first(file_order, zero);
  auto mul = id_matrix(field(j, "mul"), file_order, table);
  ElemId one = table.at(field(j, "one").get<std::string>());

  std::vector<ElemId> neg(table.names.size(), 0);
  std::vector<bool> neg_set(table.names.size(), false);
  neg_set[0] = true;  // zero negates to itself unless stated
  for (const auto& [from, to] : field(j, "neg").items()) {
    ElemId a = table.at(from);
    neg[a] = table.at(to.get<std::string>());
    neg_set[a] = true;
  }
  for (std::size_t i = 0; i < neg_set.size(); ++i)
    if (!neg_set[i])
      throw std::invalid_argument("neg map misses element " + table.names[i]);

  std::size_t n = table.names.size();
  std::vector<std::vector<std::vector<ElemId>>> table3(
      n, std::vector<std::vector<ElemId>>(n));
  std::vector<std::vector<bool>> cell_set(n, std::vector<bool>(n, false));
  for (const Json& triple : field(j, "hypersum")) {
    if (!triple.is_array() || triple.size() != 3)
      throw std::invalid_argument("hypersum entries are [a, b, [elements]]");
    ElemId a = table.at(triple[0].get<std::string>());
    ElemId b = table.at(triple[1].get<std::string>());
    std::vector<ElemId> cell;
    for (const Json& e : triple[2]) cell.push_back(table.at(e.get<std::string>()));
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      if (cell_set[x][y] && table3[x][y] != cell)
        throw std::invalid_argument("conflicting hypersum entries");
      table3[x][y] = cell;
      cell_set[x][y] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!cell_set[a][b])
        throw std::invalid_argument("hypersum table misses " + table.names[a] +
                                    " + " + table.names[b]);

  return Hyperfield(table.names, mul, std::move(neg), std::move(table3), one,
                    j.value("name", "hyperfield"));
}

namespace {

FiniteRing ring_from_wire(const Json& j) {
  if (j.contains("kind")) {
    std::string kind = field(j, "kind").get<std::string>();
    if (kind != "gf") throw std::invalid_argument("unknown ring kind: " + kind);
    return FiniteRing::gf(field(j, "p").get<int>());
  }
  std::vector<std::string> names = name_list(j, "elements");
  auto index = [&](const std::string& n) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return ElemId(i);
    throw std::invalid_argument("unknown ring element: " + n);
  };
  auto matrix = [&](const Json& m) {
    std::vector<std::vector<ElemId>> out;
    for (const Json& row : m) {
      std::vector<ElemId> r;
      for (const Json& cell : row) r.push_back(index(cell.get<std::string>()));
      out.push_back(std::move(r));
    }
    return out;
  };
  return FiniteRing(names, matrix(field(j, "add")), matrix(field(j, "mul")),
                    index(field(j, "zero").get<std::string>()),
                    index(field(j, "one").get<std::string>()),
                    j.value("name", "ring"));
}

}  // namespace

PartialField partial_field_from_json(const std::string& text) {
  Json j = parse(text);
  FiniteRing ring = ring_from_wire(field(j, "ring"));
  std::vector<ElemId> gens;
  for (const Json& g : field(j, "generators")) {
    auto id = ring.find(g.get<std::string>());
    if (!id) throw std::invalid_argument("unknown generator: " +
                                         g.get<std::string>());
    gens.push_back(*id);
  }
  return PartialField::make(std::move(ring), gens, j.value("name", ""));
}

namespace {

FVector rep_from_wire(const Matroid& m, const CarrierPtr& carrier,
                      const Json& spec) {
  std::vector<std::string> support = name_list(spec, "support");
  FVector v{carrier, std::vector<ElemId>(m.ground_size(), 0)};
  const Json& values = field(spec, "values");
  for (const auto& [label, value] : values.items()) {
    int idx = m.element_index(label);
    if (idx < 0) throw std::invalid_argument("unknown ground label: " + label);
    std::optional<ElemId> id;
    if (value.is_string()) {
      id = carrier->find(value.get<std::string>());
    } else if (value.is_array() && value.size() == 1 && value[0].is_array() &&
               value[0].size() == 2 && value[0][1].get<int>() == 1) {
      id = carrier->find(value[0][0].get<std::string>());
    } else {
      throw std::invalid_argument(
          "representative values are single units (name or singleton wire)");
    }
    if (!id || *id == 0)
      throw std::invalid_argument("representative value is not a unit at " +
                                  label);
    v.values[std::size_t(idx)] = *id;
  }
  // the declared support must be exactly where values sit
  std::uint32_t declared = 0;
  for (const std::string& s : support) {
    int idx = m.element_index(s);
    if (idx < 0) throw std::invalid_argument("unknown support label: " + s);
    declared |= 1u << idx;
  }
  if (declared != v.support_mask())
    throw std::invalid_argument("support and values disagree");
  return v;
}

}  // namespace

FMatroid fmatroid_from_json(const std::string& text) {
  Json j = parse(text);
  const Json& tract_ref = field(j, "tract");
  Tract t = tract_ref.is_string() ? load_tract(tract_ref.get<std::string>())
                                  : tract_from_json(tract_ref.dump());
  std::vector<std::string> ground = name_list(j, "ground");

  std::vector<std::vector<std::string>> supports;
  for (const Json& c : field(j, "circuits"))
    supports.push_back(name_list(c, "support"));
  Matroid m = Matroid::from_circuits(ground, supports);

  std::vector<FVector> circuits;
  for (const Json& c : field(j, "circuits"))
    circuits.push_back(rep_from_wire(m, t.carrier_ptr(), c));
  std::vector<FVector> cocircuits;
  for (const Json& c : field(j, "cocircuits"))
    cocircuits.push_back(rep_from_wire(m, t.carrier_ptr(), c));

  return FMatroid(std::move(m), std::move(t), std::move(circuits),
                  std::move(cocircuits));
}

Tract load_tract(const std::string& ref) {
  if (ref.starts_with("builtin:")) return builtins::tract_by_name(ref);
  return tract_from_json(read_file(ref));
}

Hyperfield load_hyperfield(const std::string& ref) {
  if (ref.starts_with("builtin:")) return builtins::hyperfield_by_name(ref);
  return hyperfield_from_json(read_file(ref));
}

FMatroid load_fmatroid(const std::string& ref) {
  constexpr std::string_view fixture_prefix = "fixture:";
  if (ref.starts_with(fixture_prefix))
    return builtins::fixture(std::string_view(ref).substr(fixture_prefix.size()));
  return fmatroid_from_json(read_file(ref));
}

std::string report_to_json(const AxiomReport& r) {
  return report_wire(r).dump() + "\n";
}

std::string reports_to_json(std::span<const AxiomReport> rs) {
  Json out = Json::array();
  for (const AxiomReport& r : rs) out.push_back(report_wire(r));
  return out.dump() + "\n";
}

std::string certificate_to_json(const Certificate& c) {
  Json out;
  out["claim"] = c.claim;
  out["subject"] = c.subject;
  out["coord_bound"] = c.coord_bound;
  out["oracle_bound"] = c.oracle_bound ? Json(*c.oracle_bound) : Json(nullptr);
  out["vectors"] = c.vectors;
  out["covectors"] = c.covectors;
  out["pairs_checked"] = c.pairs_checked;
  out["verdict"] = c.certified ? "certified" : "violated";
  if (c.violation) {
    Json w;
    w["X"] = gen_wire(c.violation->x);
    w["Y"] = gen_wire(c.violation->y);
    w["inner"] = sum_wire(c.violation->inner);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out.dump() + "\n";
}

std::string sum_to_wire(const FormalSum& s) { return sum_wire(s).dump(); }

std::string members_to_json(const std::string& kind, const std::string& subject,
                            int bound, std::span<const FormalSum> members) {
  Json out;
  out["kind"] = kind;
  out["subject"] = subject;
  out["bound"] = bound;
  out["count"] = members.size();
  Json list = Json::array();
  for (const FormalSum& s : members) list.push_back(sum_wire(s));
  out["members"] = std::move(list);
  return out.dump() + "\n";
}

}  // namespace tractlab
