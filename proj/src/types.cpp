#include "legnet/types.hpp"

#include <charconv>
#include <cstdio>

#include "legnet/error.hpp"

namespace legnet {
namespace {

// Civil-calendar conversions (proleptic Gregorian), after H. Hinnant.
constexpr std::int32_t days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<int>(doe) - 719468;
}

struct Civil {
  int y;
  unsigned m;
  unsigned d;
};

constexpr Civil civil_from_days(std::int32_t z) {
  z += 719468;
  const int era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const int y = static_cast<int>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  return {y + (m <= 2), m, d};
}

constexpr bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

constexpr unsigned days_in_month(int y, unsigned m) {
  constexpr unsigned table[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && is_leap(y) ? 29 : table[m - 1];
}

constexpr std::array<std::string_view, kRefTypeCount> kRefTokens = {
    "amended_by", "amendment_to", "legal_basis", "instruments_cited", "affected_by_case", "other"};

}  // namespace

bool is_valid_civil(int year, unsigned month, unsigned day) {
  return year >= 1 && year <= 9999 && month >= 1 && month <= 12 && day >= 1 &&
         day <= days_in_month(year, month);
}

Date::Date(int year, unsigned month, unsigned day) {
  if (!is_valid_civil(year, month, day)) {
    throw ValidationError("graph-core", "invalid calendar date " + std::to_string(year) + "-" +
                                            std::to_string(month) + "-" + std::to_string(day));
  }
  days_ = days_from_civil(year, month, day);
}

std::optional<Date> Date::parse(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  auto field = [&](std::size_t pos, std::size_t len, int& out) {
    const char* first = text.data() + pos;
    const char* last = first + len;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
  };
  int y = 0, m = 0, d = 0;
  if (!field(0, 4, y) || !field(5, 2, m) || !field(8, 2, d)) return std::nullopt;
  if (m < 1 || d < 1 || !is_valid_civil(y, static_cast<unsigned>(m), static_cast<unsigned>(d))) {
    return std::nullopt;
  }
  return Date(y, static_cast<unsigned>(m), static_cast<unsigned>(d));
}

int Date::year() const { return civil_from_days(days_).y; }
unsigned Date::month() const { return civil_from_days(days_).m; }
unsigned Date::day() const { return civil_from_days(days_).d; }

std::string Date::to_string() const {
  const Civil c = civil_from_days(days_);
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", c.y, c.m, c.d);
  return buf;
}

Date Date::plus_years(int years) const {
  const Civil c = civil_from_days(days_);
  const int y = c.y + years;
  const unsigned d = std::min(c.d, days_in_month(y, c.m));
  return Date(y, c.m, d);
}

std::optional<Sector> sector_from_code(long long code) {
  if (code < 1 || code > 6) return std::nullopt;
  return static_cast<Sector>(code);
}

std::string_view sector_name(Sector s) {
  switch (s) {
    case Sector::treaties:
      return "treaties";
    case Sector::international_agreements:
      return "international_agreements";
    case Sector::legislation:
      return "legislation";
    case Sector::complementary_legislation:
      return "complementary_legislation";
    case Sector::preparatory_acts:
      return "preparatory_acts";
    case Sector::jurisprudence:
      return "jurisprudence";
  }
  return "unknown";
}

std::string_view reftype_token(RefType r) { return kRefTokens[reftype_slot(r)]; }

std::optional<RefType> reftype_from_token(std::string_view token) {
  for (std::size_t i = 0; i < kRefTokens.size(); ++i) {
    if (kRefTokens[i] == token) return static_cast<RefType>(i);
  }
  return std::nullopt;
}

DocId::DocId(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw ValidationError("graph-core", "document id must be non-empty");
}

}  // namespace legnet
