#ifndef VERLIE_REGISTRY_HPP
#define VERLIE_REGISTRY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "verlie/framework.hpp"

namespace verlie {

using ParamBinding = std::map<std::string, FieldElem>;

enum class ParamDomain { Any, NonZero, NotZeroOne };

struct ParamSpec {
    std::string name;
    ParamDomain domain = ParamDomain::Any;
};

/// One table row: an id, free parameters with their domains, an optional
/// joint admissibility constraint, and a builder producing the framework
/// tuple for a binding over a given field.
struct RegistryRow {
    std::string table;
    std::string row;
    int m = 0, n = 0;
    std::vector<ParamSpec> params;
    std::function<bool(const ParamBinding&, const Field&)> joint_constraint;  // may be null
    std::function<FrameworkTuple(const ParamBinding&, const Field&)> build;
    std::string note;   // registry metadata (editorial resolutions etc.)

    std::string id() const { return table + "/" + row; }
};

const std::vector<RegistryRow>& registry_rows();
const RegistryRow& registry_find(const std::string& table, const std::string& row);

/// Every admissible binding of the row's parameters over the given field.
std::vector<ParamBinding> admissible_bindings(const RegistryRow& row, const Field& f);

/// Assembles the row at a binding (validating the binding's domain).
AssembledStructure instantiate(const RegistryRow& row, const ParamBinding& b, const Field& f);

BracketStructure table_lookup(const std::string& table, const std::string& row,
                              const ParamBinding& b, const Field& f);

std::string binding_to_string(const ParamBinding& b, const Field& f);

}  // namespace verlie

#endif
