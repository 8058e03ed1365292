#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ocelkit/timestamp.hpp"
#include "ocelkit/value.hpp"

namespace ocelkit {

struct AttributeDeclaration {
  std::string name;
  ValueKind kind = ValueKind::String;

  friend bool operator==(const AttributeDeclaration&,
                         const AttributeDeclaration&) = default;
};

/// An event type or object type together with its declared attributes.
struct TypeDeclaration {
  std::string name;
  std::vector<AttributeDeclaration> attributes;

  const AttributeDeclaration* find_attribute(std::string_view attr) const;

  friend bool operator==(const TypeDeclaration&, const TypeDeclaration&) = default;
};

struct Event {
  std::string id;
  std::string type;
  Timestamp time;
  /// Partial map attribute name -> value; an unset attribute is simply absent.
  std::vector<std::pair<std::string, AttributeValue>> attributes;
};

/// One timestamped value given to an object attribute. The value holds from
/// `time` until a later assignment of the same attribute replaces it.
struct ObjectAttributeAssignment {
  std::string attribute;
  Timestamp time;
  AttributeValue value;
};

struct Object {
  std::string id;
  std::string type;
  std::vector<ObjectAttributeAssignment> assignments;
};

/// (source, qualifier, target) triple of the E2O and O2O relation sets.
struct QualifiedRelation {
  std::string source;
  std::string qualifier;
  std::string target;

  friend auto operator<=>(const QualifiedRelation&,
                          const QualifiedRelation&) = default;
};

class LogBuilder;

/// The canonical in-memory object-centric event log.
///
/// A Log is immutable once built and safe for unrestricted concurrent reads.
/// It is deliberately permissive as a container: duplicate ids, undeclared
/// attributes, dangling relation endpoints and similar defects are stored
/// as-is so that validate_model can report them as diagnostics. Writers
/// require a log free of validation ERRORs.
class Log {
 public:
  Log() = default;

  const std::vector<TypeDeclaration>& event_type_declarations() const {
    return event_types_;
  }
  const std::vector<TypeDeclaration>& object_type_declarations() const {
    return object_types_;
  }
  const std::vector<Event>& events() const { return events_; }
  const std::vector<Object>& objects() const { return objects_; }
  const std::vector<QualifiedRelation>& e2o() const { return e2o_; }
  const std::vector<QualifiedRelation>& o2o() const { return o2o_; }

  /// First declaration with the given name, or nullptr.
  const TypeDeclaration* find_event_type(std::string_view name) const;
  const TypeDeclaration* find_object_type(std::string_view name) const;

  /// First event/object with the given id, or nullptr.
  const Event* find_event(std::string_view id) const;
  const Object* find_object(std::string_view id) const;

  /// Distinct type names over the events that actually occur in the log
  /// (a subset of the declared types when some are unused).
  std::set<std::string> event_types() const;
  /// Distinct type names over the stored objects.
  std::set<std::string> object_types() const;

  /// Value of an event attribute, or nullopt when unset.
  /// Throws UnknownEventError when no such event exists.
  std::optional<AttributeValue> event_attribute(std::string_view event_id,
                                                std::string_view attribute) const;

  /// Value of an object attribute at time `at`: the assignment with the
  /// greatest time t' <= at, or nullopt when no assignment precedes `at`.
  /// Throws UnknownObjectError when no such object exists.
  std::optional<AttributeValue> object_attribute_at(std::string_view object_id,
                                                    std::string_view attribute,
                                                    Timestamp at) const;

  /// Final value of an object attribute (object_attribute_at with infinity).
  std::optional<AttributeValue> object_attribute_final(
      std::string_view object_id, std::string_view attribute) const;

  /// Qualified objects of an event: the set of (object id, qualifier) pairs
  /// related to it, sorted ascending. Throws UnknownEventError.
  std::vector<std::pair<std::string, std::string>> event_related_objects(
      std::string_view event_id) const;

  /// Outgoing qualified objects of an object: (target id, qualifier) pairs
  /// over the O2O triples with the given object as source, sorted ascending.
  /// Throws UnknownObjectError.
  std::vector<std::pair<std::string, std::string>> object_related_objects(
      std::string_view object_id) const;

 private:
  friend class LogBuilder;

  std::vector<TypeDeclaration> event_types_;
  std::vector<TypeDeclaration> object_types_;
  std::vector<Event> events_;
  std::vector<Object> objects_;
  std::vector<QualifiedRelation> e2o_;
  std::vector<QualifiedRelation> o2o_;

  // First-occurrence indices.
  std::unordered_map<std::string, std::size_t> event_index_;
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::size_t> event_type_index_;
  std::unordered_map<std::string, std::size_t> object_type_index_;
};

/// Single-owner builder; move-only, consumed by build().
/// Relation collections have set semantics: duplicate (source, qualifier,
/// target) triples are merged. Everything else is stored verbatim.
class LogBuilder {
 public:
  LogBuilder() = default;
  LogBuilder(const LogBuilder&) = delete;
  LogBuilder& operator=(const LogBuilder&) = delete;
  LogBuilder(LogBuilder&&) = default;
  LogBuilder& operator=(LogBuilder&&) = default;

  LogBuilder& add_event_type(TypeDeclaration decl);
  LogBuilder& add_object_type(TypeDeclaration decl);
  LogBuilder& add_event(Event event);
  LogBuilder& add_object(Object object);
  LogBuilder& add_e2o(std::string event_id, std::string qualifier,
                      std::string object_id);
  LogBuilder& add_o2o(std::string source_id, std::string qualifier,
                      std::string target_id);

  Log build() &&;

 private:
  Log log_;
  std::set<QualifiedRelation> e2o_seen_;
  std::set<QualifiedRelation> o2o_seen_;
};

/// True iff the two logs are equal as mathematical tuples: equal sets of
/// type declarations (attribute order ignored), events, objects (assignment
/// order ignored) and relation sets. All container orderings are ignored.
bool logs_equal(const Log& a, const Log& b);

}  // namespace ocelkit
