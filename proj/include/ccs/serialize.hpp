#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ccs/algebraic_iso.hpp"
#include "ccs/permutation.hpp"
#include "ccs/report.hpp"
#include "ccs/scheme.hpp"
#include "ccs/schur_ring.hpp"

namespace ccs {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json group_to_json(const GroupTable& group);
GroupTable group_from_json(const Json& j);

Json partition_to_json(const BasicSetPartition& part, const std::string& group_ref);
BasicSetPartition partition_from_json(const Json& j, GroupPtr group);

/// Sorted [x, y, z, c] quadruples over basic-set indices.
Json constants_to_json(const StructureConstants& sc);

/// {degree, rank, colors} with colors row-major.
Json scheme_to_json(const Scheme& scheme);
/// Reads and validates a scheme file (colors must be WL-stable).
Scheme scheme_from_json(const Json& j);

struct RawColoring {
  int degree = 0;
  std::vector<int> colors;
};
/// {degree, colors}; any integer labels, not necessarily stable.
RawColoring coloring_from_json(const Json& j);

/// {rank, valencies, transpose, entries: sorted [s, t, u, c]}.
Json tensor_to_json(const IntersectionTensor& tensor);
/// Fiber structure is recovered from the entries: d is diagonal iff
/// c_{dd}^d = 1, and the domain of s is the diagonal d with c_{ds}^s = 1.
IntersectionTensor tensor_from_json(const Json& j);

/// {degree, order (decimal string), generators}.
Json perm_group_to_json(const PermGroup& group);
PermGroup perm_group_from_json(const Json& j);

Json audit_to_json(const SeparabilityAudit& audit, const std::string& scheme_ref);

Json report_to_json(const Report& report);

/// Throws InputError when the file is missing or not JSON.
Json read_json_file(const std::filesystem::path& path);
/// Compact JSON plus a trailing newline. Throws std::runtime_error when the
/// file cannot be written.
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace ccs
