#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace legnet {

/// Calendar date with day precision, stored as a day serial.
/// 9999-12-31 is an ordinary value.
class Date {
 public:
  constexpr Date() = default;
  Date(int year, unsigned month, unsigned day);  // throws ValidationError

  static Date from_serial(std::int32_t days) {
    Date d;
    d.days_ = days;
    return d;
  }
  /// Expiry carried by documents without a sunset clause.
  static Date sentinel() { return Date(9999, 12, 31); }
  /// Parses strict ISO-8601 "YYYY-MM-DD"; nullopt on any malformation.
  static std::optional<Date> parse(std::string_view text);

  std::int32_t serial() const noexcept { return days_; }
  int year() const;
  unsigned month() const;
  unsigned day() const;
  std::string to_string() const;

  /// Same month/day `years` later; Feb 29 maps to Feb 28 in non-leap years.
  Date plus_years(int years) const;

  friend constexpr auto operator<=>(const Date&, const Date&) = default;

 private:
  std::int32_t days_ = 0;  // days since 1970-01-01
};

bool is_valid_civil(int year, unsigned month, unsigned day);

/// Top-level EUR-Lex document categories with their stable integer codes.
enum class Sector : std::uint8_t {
  treaties = 1,
  international_agreements = 2,
  legislation = 3,
  complementary_legislation = 4,
  preparatory_acts = 5,
  jurisprudence = 6,
};

inline constexpr std::size_t kSectorCount = 6;
inline constexpr std::array<Sector, kSectorCount> kAllSectors = {
    Sector::treaties,         Sector::international_agreements, Sector::legislation,
    Sector::complementary_legislation, Sector::preparatory_acts, Sector::jurisprudence};

constexpr int sector_code(Sector s) { return static_cast<int>(s); }
constexpr std::size_t sector_slot(Sector s) { return static_cast<std::size_t>(s) - 1; }
std::optional<Sector> sector_from_code(long long code);
std::string_view sector_name(Sector s);

/// Semantic label of a cross-reference.
enum class RefType : std::uint8_t {
  amended_by = 0,
  amendment_to = 1,
  legal_basis = 2,
  instruments_cited = 3,
  affected_by_case = 4,
  other = 5,
};

inline constexpr std::size_t kRefTypeCount = 6;
inline constexpr std::array<RefType, kRefTypeCount> kAllRefTypes = {
    RefType::amended_by, RefType::amendment_to,     RefType::legal_basis,
    RefType::instruments_cited, RefType::affected_by_case, RefType::other};

constexpr std::size_t reftype_slot(RefType r) { return static_cast<std::size_t>(r); }
/// Wire token, e.g. "amended_by", "instruments_cited".
std::string_view reftype_token(RefType r);
std::optional<RefType> reftype_from_token(std::string_view token);

/// Amendment relations come in reciprocal pairs; nullopt for every other kind.
constexpr std::optional<RefType> reciprocal(RefType r) {
  switch (r) {
    case RefType::amended_by:
      return RefType::amendment_to;
    case RefType::amendment_to:
      return RefType::amended_by;
    default:
      return std::nullopt;
  }
}

/// Opaque, non-empty document identifier (CELEX-style, e.g. "370L0220").
class DocId {
 public:
  explicit DocId(std::string value);  // throws ValidationError when empty
  const std::string& str() const noexcept { return value_; }
  friend auto operator<=>(const DocId&, const DocId&) = default;

 private:
  std::string value_;
};

struct LegalDocument {
  DocId id;
  Sector sector = Sector::legislation;
  Date effect;
  Date expiry = Date::sentinel();
  bool stub = false;  // created for a dangling reference during lenient ingest

  friend bool operator==(const LegalDocument&, const LegalDocument&) = default;
};

struct Reference {
  DocId source;
  DocId target;
  RefType kind;
};

}  // namespace legnet
