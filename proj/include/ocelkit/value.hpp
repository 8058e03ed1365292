#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ocelkit/timestamp.hpp"

namespace ocelkit {

/// The five attribute value kinds of the exchange formats.
enum class ValueKind { String, Time, Integer, Float, Boolean };

std::string_view kind_name(ValueKind kind);
std::optional<ValueKind> parse_kind(std::string_view name);

/// Tagged union over the five value kinds. Values compare equal only when
/// both kind and payload match; floats compare by bit pattern so that
/// round-tripped values stay equal.
class AttributeValue {
 public:
  static AttributeValue string(std::string v) { return AttributeValue(std::move(v)); }
  static AttributeValue time(Timestamp v) { return AttributeValue(v); }
  static AttributeValue integer(std::int64_t v) { return AttributeValue(v); }
  static AttributeValue real(double v) { return AttributeValue(v); }
  static AttributeValue boolean(bool v) { return AttributeValue(v); }

  ValueKind kind() const { return static_cast<ValueKind>(value_.index()); }

  const std::string& as_string() const { return std::get<std::string>(value_); }
  Timestamp as_time() const { return std::get<Timestamp>(value_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(value_); }
  double as_real() const { return std::get<double>(value_); }
  bool as_boolean() const { return std::get<bool>(value_); }

  friend bool operator==(const AttributeValue& a, const AttributeValue& b);
  friend bool operator!=(const AttributeValue& a, const AttributeValue& b) {
    return !(a == b);
  }

 private:
  // Alternative order mirrors ValueKind.
  using Storage = std::variant<std::string, Timestamp, std::int64_t, double, bool>;

  explicit AttributeValue(std::string v) : value_(std::move(v)) {}
  explicit AttributeValue(Timestamp v) : value_(v) {}
  explicit AttributeValue(std::int64_t v) : value_(v) {}
  explicit AttributeValue(double v) : value_(v) {}
  explicit AttributeValue(bool v) : value_(v) {}

  Storage value_;
};

/// Renders the payload as exchange-format text: integers in decimal, floats
/// as the shortest round-trippable decimal, booleans as "true"/"false",
/// times as ISO 8601.
std::string render_value_text(const AttributeValue& value);

/// Parses exchange-format text under a declared kind. Returns nullopt for
/// text that is not a valid literal of that kind (including non-finite
/// float spellings).
std::optional<AttributeValue> parse_value_text(ValueKind kind, std::string_view text);

}  // namespace ocelkit
