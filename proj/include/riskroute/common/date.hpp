#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace riskroute {

/// Calendar date with day precision, stored as days since 1970-01-01.
class Date {
 public:
  constexpr Date() = default;
  constexpr explicit Date(std::int32_t days_since_epoch) : days_(days_since_epoch) {}

  static Date from_ymd(int year, unsigned month, unsigned day);
  /// Parses strict ISO-8601 "YYYY-MM-DD"; throws ParseError otherwise.
  static Date parse(std::string_view iso);

  constexpr std::int32_t days_since_epoch() const { return days_; }
  std::string iso() const;

  constexpr Date operator+(std::int32_t days) const { return Date(days_ + days); }
  constexpr Date operator-(std::int32_t days) const { return Date(days_ - days); }
  constexpr std::int32_t operator-(Date other) const { return days_ - other.days_; }

  constexpr auto operator<=>(const Date&) const = default;

 private:
  std::int32_t days_ = 0;
};

inline constexpr std::int32_t kDaysPerYear = 365;
inline constexpr std::int32_t kDaysPerHalfYear = 183;

}  // namespace riskroute
