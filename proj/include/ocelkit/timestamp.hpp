#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace ocelkit {

/// A point in time with millisecond precision and a total order.
///
/// Two sentinels exist: zero() is the epoch 1970-01-01T00:00:00Z and the
/// smallest representable instant; infinity() is the largest. infinity() is
/// an in-memory marker only and must never be serialized. Instants before
/// the epoch are outside the timestamp universe and cannot be constructed
/// through parsing.
class Timestamp {
 public:
  constexpr Timestamp() = default;

  static constexpr Timestamp zero() { return Timestamp(0); }
  static constexpr Timestamp infinity() {
    return Timestamp(std::numeric_limits<std::int64_t>::max());
  }
  static constexpr Timestamp from_millis(std::int64_t ms) {
    return Timestamp(ms);
  }

  constexpr std::int64_t millis() const { return millis_; }
  constexpr bool is_zero() const { return millis_ == 0; }
  constexpr bool is_infinite() const {
    return millis_ == std::numeric_limits<std::int64_t>::max();
  }

  friend constexpr auto operator<=>(Timestamp, Timestamp) = default;

 private:
  explicit constexpr Timestamp(std::int64_t ms) : millis_(ms) {}

  std::int64_t millis_ = 0;
};

/// Parses a timestamp literal. Accepted shapes:
///   2022-01-09T15:00:00Z        (ISO 8601, 'T' or ' ' separator)
///   2022-01-09T15:00:00.250Z    (fractional seconds, truncated to millis)
///   2022-01-09T16:00:00+01:00   (explicit offset, also +0100 / +01)
///   2022-01-09 15:00            (seconds optional; missing offset = UTC)
///   1970-01-01 00:00 UTC        (trailing " UTC" marker)
/// Instants before 1970-01-01T00:00:00Z do not parse.
std::optional<Timestamp> parse_timestamp(std::string_view text);

/// Renders as UTC ISO 8601 with a 'Z' suffix. Milliseconds appear only when
/// non-zero, e.g. 2022-01-09T15:00:00Z or 2022-01-09T15:00:00.250Z.
/// The timestamp must not be infinity().
std::string format_timestamp(Timestamp t);

/// Like format_timestamp but always renders milliseconds
/// (2022-01-09T15:00:00.000Z), the column format of relational files.
std::string format_timestamp_ms(Timestamp t);

}  // namespace ocelkit
