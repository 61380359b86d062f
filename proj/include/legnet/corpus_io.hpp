#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "legnet/graph.hpp"

namespace legnet {

/// One line of the JSONL corpus format:
///
///   {"id": "383L0351", "sector": 3, "date_of_effect": "1983-06-16",
///    "date_of_expiry": "9999-12-31",
///    "references": [{"target": "370L0220", "type": "amendment_to"}]}
///
/// date_of_expiry may be absent or null (no sunset clause). "stub": true marks
/// a node created for a dangling reference.
struct RecordReference {
  std::string target;
  RefType kind;
  friend bool operator==(const RecordReference&, const RecordReference&) = default;
};

struct DocumentRecord {
  std::string id;
  Sector sector = Sector::legislation;
  Date effect;
  std::optional<Date> expiry;
  std::vector<RecordReference> references;
  bool stub = false;
  std::size_t line = 0;  // source line, 0 when not read from a stream

  friend bool operator==(const DocumentRecord& a, const DocumentRecord& b) {
    return a.id == b.id && a.sector == b.sector && a.effect == b.effect && a.expiry == b.expiry &&
           a.references == b.references && a.stub == b.stub;
  }
};

enum class IngestMode { strict, lenient };

struct IngestReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t stubs = 0;
  /// Edge insertions (declared plus materialized reciprocals) that were
  /// already present.
  std::size_t deduplicated = 0;
  std::array<std::size_t, kRefTypeCount> per_type_counts{};
  std::vector<std::string> stub_ids;
};

struct IngestResult {
  LegislationGraph graph;
  IngestReport report;
};

DocumentRecord parse_record(std::string_view line, std::size_t line_number);
nlohmann::json record_to_json(const DocumentRecord& record);

/// Reads every non-blank line as a record. Throws ParseError with the line number.
std::vector<DocumentRecord> read_jsonl(std::istream& in);

/// Builds a sealed graph. Amendment references get their reciprocal
/// materialized; duplicates are dropped and counted. In lenient mode a
/// reference to an unknown id creates a flagged stub (sector 3, effect of the
/// first referencing document, no expiry); in strict mode it throws
/// DanglingReferenceError.
IngestResult ingest(std::span<const DocumentRecord> records, IngestMode mode);
IngestResult ingest_jsonl(std::istream& in, IngestMode mode);

/// Documents in node order, each with its outgoing typed references.
std::vector<DocumentRecord> export_records(const LegislationGraph& g);
void write_jsonl(const LegislationGraph& g, std::ostream& out);

/// CSV alternative: a document table (id,sector,date_of_effect,date_of_expiry,stub)
/// and an edge table (source,target,type), both with header rows.
IngestResult ingest_csv(std::istream& documents, std::istream& edges, IngestMode mode);
void write_csv(const LegislationGraph& g, std::ostream& documents, std::ostream& edges);

nlohmann::json to_json(const IngestReport& report);

}  // namespace legnet
