#include "ccs/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ccs {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<int> int_array(const Json& v, const char* what) {
  if (!v.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw InputError(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json group_to_json(const GroupTable& group) {
  Json j;
  j["order"] = group.order();
  j["label"] = group.label();
  j["table"] = std::vector<int>(group.table().begin(), group.table().end());
  j["inverse"] = std::vector<int>(group.inverses().begin(), group.inverses().end());
  return j;
}

GroupTable group_from_json(const Json& j) {
  const int order = int_field(j, "order");
  auto table = int_array(field(j, "table"), "table");
  if (order <= 0 || table.size() != static_cast<std::size_t>(order) * order)
    throw InputError("table size does not match order");
  for (int x : table)
    if (x < 0 || x >= order) throw InputError("table entry out of range");
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
  try {
    return GroupTable(order, std::move(table), std::move(label));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json partition_to_json(const BasicSetPartition& part, const std::string& group_ref) {
  Json j;
  j["group_ref"] = group_ref;
  j["sets"] = part.sets();
  return j;
}

BasicSetPartition partition_from_json(const Json& j, GroupPtr group) {
  const Json& sets = field(j, "sets");
  if (!sets.is_array()) throw InputError("sets must be an array");
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) out.push_back(int_array(s, "basic set"));
  try {
    return BasicSetPartition(std::move(group), std::move(out));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json constants_to_json(const StructureConstants& sc) {
  Json arr = Json::array();
  for (const auto& e : sc.entries()) arr.push_back({e.x, e.y, e.z, e.c});
  return arr;
}

Json scheme_to_json(const Scheme& scheme) {
  Json j;
  j["degree"] = scheme.degree();
  j["rank"] = scheme.rank();
  j["colors"] = std::vector<int>(scheme.colors().begin(), scheme.colors().end());
  return j;
}

RawColoring coloring_from_json(const Json& j) {
  RawColoring r;
  r.degree = int_field(j, "degree");
  if (r.degree <= 0) throw InputError("degree must be positive");
  r.colors = int_array(field(j, "colors"), "colors");
  if (r.colors.size() != static_cast<std::size_t>(r.degree) * r.degree)
    throw InputError("colors must have degree^2 entries");
  return r;
}

Scheme scheme_from_json(const Json& j) {
  RawColoring raw = coloring_from_json(j);
  try {
    Scheme s = Scheme::from_colors(raw.degree, std::move(raw.colors));
    if (j.contains("rank") && (!j["rank"].is_number_integer() || j["rank"].get<int>() != s.rank()))
      throw InputError("rank field does not match the colors");
    return s;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json tensor_to_json(const IntersectionTensor& tensor) {
  Json j;
  j["rank"] = tensor.rank();
  j["valencies"] = tensor.valencies();
  j["transpose"] = tensor.transposes();
  Json arr = Json::array();
  for (const auto& e : tensor.entries()) arr.push_back({e.s, e.t, e.u, e.c});
  j["entries"] = std::move(arr);
  return j;
}

IntersectionTensor tensor_from_json(const Json& j) {
  const int rank = int_field(j, "rank");
  auto valencies = int_array(field(j, "valencies"), "valencies");
  auto transpose = int_array(field(j, "transpose"), "transpose");
  if (rank <= 0 || valencies.size() != static_cast<std::size_t>(rank) || transpose.size() != valencies.size())
    throw InputError("valencies and transpose must have rank entries");
  for (int t : transpose)
    if (t < 0 || t >= rank) throw InputError("transpose entry out of range");
  const Json& arr = field(j, "entries");
  if (!arr.is_array()) throw InputError("entries must be an array");
  std::vector<IntersectionTensor::Entry> entries;
  for (const auto& q : arr) {
    if (!q.is_array() || q.size() != 4) throw InputError("entries must be [s, t, u, c] quadruples");
    IntersectionTensor::Entry e{q[0].get<int>(), q[1].get<int>(), q[2].get<int>(), q[3].get<long long>()};
    if (e.s < 0 || e.s >= rank || e.t < 0 || e.t >= rank || e.u < 0 || e.u >= rank || e.c <= 0)
      throw InputError("tensor entry out of range");
    entries.push_back(e);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return std::tie(a.s, a.t, a.u) < std::tie(b.s, b.t, b.u); });
  auto lookup = [&](int s, int t, int u) -> long long {
    auto it = std::lower_bound(entries.begin(), entries.end(), std::tuple{s, t, u}, [](const auto& e, const auto& k) {
      return std::tie(e.s, e.t, e.u) < k;
    });
    return it != entries.end() && it->s == s && it->t == t && it->u == u ? it->c : 0;
  };
  std::vector<int> domain(rank, -1), codomain(rank, -1);
  std::vector<int> diagonal;
  for (int d = 0; d < rank; ++d)
    if (lookup(d, d, d) == 1 && transpose[d] == d && valencies[d] == 1) diagonal.push_back(d);
  for (int s = 0; s < rank; ++s)
    for (int d : diagonal) {
      if (lookup(d, s, s) == 1) domain[s] = d;
      if (lookup(s, d, s) == 1) codomain[s] = d;
    }
  for (int s = 0; s < rank; ++s)
    if (domain[s] < 0 || codomain[s] < 0) throw InputError("cannot recover the fiber of color " + std::to_string(s));
  try {
    return IntersectionTensor(rank, std::move(valencies), std::move(transpose), std::move(domain),
                              std::move(codomain), std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json perm_group_to_json(const PermGroup& group) {
  Json j;
  j["degree"] = group.degree();
  j["order"] = group.order().str();
  Json gens = Json::array();
  for (const auto& g : group.generators()) gens.push_back(g.images());
  j["generators"] = std::move(gens);
  return j;
}

PermGroup perm_group_from_json(const Json& j) {
  const int degree = int_field(j, "degree");
  if (degree <= 0) throw InputError("degree must be positive");
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw InputError("generators must be an array");
  std::vector<Permutation> perms;
  try {
    for (const auto& g : gens) {
      auto images = int_array(g, "generator");
      if (images.size() != static_cast<std::size_t>(degree)) throw InputError("generator has the wrong degree");
      perms.emplace_back(std::move(images));
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  PermGroup group(degree, std::move(perms));
  if (j.contains("order")) {
    const Json& o = j["order"];
    if (!o.is_string() || o.get<std::string>() != group.order().str())
      throw InputError("order field does not match the generators");
  }
  return group;
}

Json audit_to_json(const SeparabilityAudit& audit, const std::string& scheme_ref) {
  Json j;
  j["scheme_ref"] = scheme_ref;
  j["algebraic_automorphism_count"] = audit.algebraic_automorphism_count;
  j["induced_count"] = audit.induced_count;
  j["inconclusive_count"] = audit.inconclusive_count;
  j["failure_count"] = audit.failure_count;
  Json w = Json::array();
  for (const auto& x : audit.witnesses) {
    Json item;
    item["phi"] = x.phi;
    item["point_map"] = x.point_map;
    item["status"] = std::string(induce_status_name(x.status));
    w.push_back(std::move(item));
  }
  j["witnesses"] = std::move(w);
  return j;
}

Json report_to_json(const Report& report) {
  Json arr = Json::array();
  for (const auto& c : report.checks()) {
    Json item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    if (!c.detail.empty()) item["detail"] = c.detail;
    arr.push_back(std::move(item));
  }
  return arr;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  } catch (const Json::type_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump() << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace ccs
