#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ocelkit {

enum class Severity { Error, Warning };

std::string_view severity_name(Severity severity);

/// Machine-readable validation finding. `code` is drawn from the closed
/// catalog below; `location` is a format-specific locator (table:row for
/// relational sources, an element-style path otherwise).
struct Diagnostic {
  std::string code;
  Severity severity = Severity::Error;
  std::string location;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// One line-delimited JSON record {code, severity, location, message}.
std::string diagnostic_to_json_line(const Diagnostic& d);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// The closed diagnostic catalog.
namespace codes {

// Model-level findings (validate_model).
inline constexpr std::string_view kEventTypeUndeclared = "EVENT_TYPE_UNDECLARED";
inline constexpr std::string_view kObjectTypeUndeclared = "OBJECT_TYPE_UNDECLARED";
inline constexpr std::string_view kTypeRedeclared = "TYPE_REDECLARED";
inline constexpr std::string_view kEventAttrUndeclared = "EVENT_ATTR_UNDECLARED";
inline constexpr std::string_view kObjectAttrUndeclared = "OBJECT_ATTR_UNDECLARED";
inline constexpr std::string_view kAttrKindMismatch = "ATTR_KIND_MISMATCH";
inline constexpr std::string_view kDuplicateEventId = "DUPLICATE_EVENT_ID";
inline constexpr std::string_view kDuplicateObjectId = "DUPLICATE_OBJECT_ID";
inline constexpr std::string_view kIdNamespaceOverlap = "ID_NAMESPACE_OVERLAP";
inline constexpr std::string_view kE2oDanglingEvent = "E2O_DANGLING_EVENT";
inline constexpr std::string_view kE2oDanglingObject = "E2O_DANGLING_OBJECT";
inline constexpr std::string_view kO2oDanglingObject = "O2O_DANGLING_OBJECT";
inline constexpr std::string_view kEventTimeInvalid = "EVENT_TIME_INVALID";
inline constexpr std::string_view kObjectTimeInvalid = "OBJECT_TIME_INVALID";
inline constexpr std::string_view kAssignmentDuplicate = "ASSIGNMENT_DUPLICATE";
inline constexpr std::string_view kAttrNameShared = "ATTR_NAME_SHARED";  // WARNING

// Relational-layout findings (validate_relational_layout); the dangling,
// duplicate-id and undeclared-type codes above are shared with it.
inline constexpr std::string_view kMissingFixedTable = "MISSING_FIXED_TABLE";
inline constexpr std::string_view kMissingTypeTable = "MISSING_TYPE_TABLE";
inline constexpr std::string_view kMapTypeDuplicate = "MAP_TYPE_DUPLICATE";
inline constexpr std::string_view kMapNameDuplicate = "MAP_NAME_DUPLICATE";
inline constexpr std::string_view kTypeTableOrphan = "TYPE_TABLE_ORPHAN";
inline constexpr std::string_view kGeneralTableOrphan = "GENERAL_TABLE_ORPHAN";
inline constexpr std::string_view kTypeTableMismatch = "TYPE_TABLE_MISMATCH";
inline constexpr std::string_view kE2oDuplicate = "E2O_DUPLICATE";
inline constexpr std::string_view kO2oDuplicate = "O2O_DUPLICATE";
inline constexpr std::string_view kChangedFieldUnknown = "CHANGED_FIELD_UNKNOWN";
inline constexpr std::string_view kEpochNoncanonical = "EPOCH_NONCANONICAL";

}  // namespace codes

}  // namespace ocelkit
