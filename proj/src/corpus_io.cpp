#include "legnet/corpus_io.hpp"

#include <istream>
#include <map>
#include <ostream>

#include "legnet/csv.hpp"
#include "legnet/error.hpp"

namespace legnet {
namespace {

using nlohmann::json;

Date parse_date_field(const json& value, std::string_view field, std::size_t line) {
  if (!value.is_string()) throw ParseError(line, std::string(field) + " must be a date string");
  auto date = Date::parse(value.get<std::string>());
  if (!date) {
    throw ParseError(line, std::string(field) + " is not a valid YYYY-MM-DD date: '" +
                               value.get<std::string>() + "'");
  }
  return *date;
}

Sector parse_sector_value(long long code, std::size_t line) {
  auto sector = sector_from_code(code);
  if (!sector) throw ParseError(line, "sector must be in 1..6, got " + std::to_string(code));
  return *sector;
}

RefType parse_reftype_value(std::string_view token, std::size_t line) {
  auto kind = reftype_from_token(token);
  if (!kind) throw ParseError(line, "unknown reference type '" + std::string(token) + "'");
  return *kind;
}

}  // namespace

DocumentRecord parse_record(std::string_view line, std::size_t line_number) {
  json object;
  try {
    object = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(line_number, std::string("invalid JSON: ") + e.what());
  }
  if (!object.is_object()) throw ParseError(line_number, "record must be a JSON object");

  DocumentRecord record;
  record.line = line_number;
  auto id = object.find("id");
  if (id == object.end() || !id->is_string() || id->get<std::string>().empty()) {
    throw ParseError(line_number, "record needs a non-empty string id");
  }
  record.id = id->get<std::string>();

  auto sector = object.find("sector");
  if (sector == object.end() || !sector->is_number_integer()) {
    throw ParseError(line_number, "sector must be an integer");
  }
  record.sector = parse_sector_value(sector->get<long long>(), line_number);

  auto effect = object.find("date_of_effect");
  if (effect == object.end()) throw ParseError(line_number, "missing date_of_effect");
  record.effect = parse_date_field(*effect, "date_of_effect", line_number);

  auto expiry = object.find("date_of_expiry");
  if (expiry != object.end() && !expiry->is_null()) {
    record.expiry = parse_date_field(*expiry, "date_of_expiry", line_number);
  }

  if (auto stub = object.find("stub"); stub != object.end()) {
    if (!stub->is_boolean()) throw ParseError(line_number, "stub must be a boolean");
    record.stub = stub->get<bool>();
  }

  if (auto refs = object.find("references"); refs != object.end() && !refs->is_null()) {
    if (!refs->is_array()) throw ParseError(line_number, "references must be an array");
    for (const json& ref : *refs) {
      auto target = ref.find("target");
      auto type = ref.find("type");
      if (!ref.is_object() || target == ref.end() || !target->is_string() ||
          target->get<std::string>().empty() || type == ref.end() || !type->is_string()) {
        throw ParseError(line_number, "reference needs string fields target and type");
      }
      record.references.push_back(
          {target->get<std::string>(), parse_reftype_value(type->get<std::string>(), line_number)});
    }
  }
  return record;
}

json record_to_json(const DocumentRecord& record) {
  json refs = json::array();
  for (const RecordReference& ref : record.references) {
    refs.push_back({{"target", ref.target}, {"type", std::string(reftype_token(ref.kind))}});
  }
  json object = {{"id", record.id},
                 {"sector", sector_code(record.sector)},
                 {"date_of_effect", record.effect.to_string()},
                 {"date_of_expiry", record.expiry ? json(record.expiry->to_string()) : json()},
                 {"references", std::move(refs)}};
  if (record.stub) object["stub"] = true;
  return object;
}

std::vector<DocumentRecord> read_jsonl(std::istream& in) {
  std::vector<DocumentRecord> records;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    records.push_back(parse_record(line, number));
  }
  return records;
}

IngestResult ingest(std::span<const DocumentRecord> records, IngestMode mode) {
  IngestResult result;
  LegislationGraph& g = result.graph;
  IngestReport& report = result.report;

  for (const DocumentRecord& record : records) {
    LegalDocument doc{DocId(record.id), record.sector, record.effect,
                      record.expiry.value_or(Date::sentinel()), record.stub};
    if (doc.effect > doc.expiry) {
      throw ParseError(record.line, "document '" + record.id + "' has date_of_effect " +
                                        doc.effect.to_string() + " after date_of_expiry " +
                                        doc.expiry.to_string());
    }
    if (g.find(record.id)) throw DuplicateIdError(record.id);
    g.add_document(std::move(doc));
  }

  std::size_t attempts = 0;
  for (const DocumentRecord& record : records) {
    const NodeIndex source = g.index_of(record.id);
    for (const RecordReference& ref : record.references) {
      if (ref.target == record.id) {
        throw ParseError(record.line, "document '" + record.id + "' references itself");
      }
      NodeIndex target;
      if (auto found = g.find(ref.target)) {
        target = *found;
      } else if (mode == IngestMode::strict) {
        throw DanglingReferenceError(record.id, ref.target);
      } else {
        target = g.add_document(LegalDocument{DocId(ref.target), Sector::legislation,
                                              record.effect, Date::sentinel(), true});
        report.stub_ids.push_back(ref.target);
      }
      ++attempts;
      g.add_edge(source, target, ref.kind);
      if (auto back = reciprocal(ref.kind)) {
        ++attempts;
        g.add_edge(target, source, *back);
      }
    }
  }
  g.seal();

  report.nodes = g.node_count();
  report.edges = g.edge_count();
  report.stubs = report.stub_ids.size();
  report.deduplicated = attempts - g.edge_count();
  for (const Edge& e : g.edges()) ++report.per_type_counts[reftype_slot(e.kind)];
  return result;
}

IngestResult ingest_jsonl(std::istream& in, IngestMode mode) {
  const auto records = read_jsonl(in);
  return ingest(records, mode);
}

std::vector<DocumentRecord> export_records(const LegislationGraph& g) {
  g.require_sealed("export");
  std::vector<DocumentRecord> records;
  records.reserve(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    const LegalDocument& doc = g.document(v);
    DocumentRecord record;
    record.id = doc.id.str();
    record.sector = doc.sector;
    record.effect = doc.effect;
    if (doc.expiry != Date::sentinel()) record.expiry = doc.expiry;
    record.stub = doc.stub;
    for (const Edge& e : g.out_edges(v)) {
      record.references.push_back({g.document(e.target).id.str(), e.kind});
    }
    records.push_back(std::move(record));
  }
  return records;
}

void write_jsonl(const LegislationGraph& g, std::ostream& out) {
  for (const DocumentRecord& record : export_records(g)) {
    out << record_to_json(record).dump() << '\n';
  }
}

IngestResult ingest_csv(std::istream& documents, std::istream& edges, IngestMode mode) {
  std::vector<DocumentRecord> records;
  std::map<std::string, std::size_t> position;
  std::size_t line = 0;
  bool header = true;
  while (auto row = csv::read_record(documents, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (row->size() == 1 && (*row)[0].empty()) continue;
    if (row->size() < 3) throw ParseError(line, "document row needs id,sector,date_of_effect");
    DocumentRecord record;
    record.line = line;
    record.id = (*row)[0];
    if (record.id.empty()) throw ParseError(line, "empty document id");
    long long code = 0;
    try {
      std::size_t used = 0;
      code = std::stoll((*row)[1], &used);
      if (used != (*row)[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(line, "sector must be an integer, got '" + (*row)[1] + "'");
    }
    record.sector = parse_sector_value(code, line);
    record.effect = parse_date_field((*row)[2], "date_of_effect", line);
    if (row->size() > 3 && !(*row)[3].empty()) {
      record.expiry = parse_date_field((*row)[3], "date_of_expiry", line);
    }
    if (row->size() > 4) record.stub = (*row)[4] == "1" || (*row)[4] == "true";
    position.emplace(record.id, records.size());
    records.push_back(std::move(record));
  }

  line = 0;
  header = true;
  while (auto row = csv::read_record(edges, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (row->size() == 1 && (*row)[0].empty()) continue;
    if (row->size() != 3) throw ParseError(line, "edge row needs source,target,type");
    auto it = position.find((*row)[0]);
    if (it == position.end()) {
      throw ParseError(line, "edge source '" + (*row)[0] + "' is not a listed document");
    }
    if ((*row)[1].empty()) throw ParseError(line, "empty edge target");
    records[it->second].references.push_back({(*row)[1], parse_reftype_value((*row)[2], line)});
  }
  return ingest(records, mode);
}

void write_csv(const LegislationGraph& g, std::ostream& documents, std::ostream& edges) {
  g.require_sealed("export");
  documents << "id,sector,date_of_effect,date_of_expiry,stub\n";
  for (const LegalDocument& doc : g.documents()) {
    documents << csv::join({doc.id.str(), std::to_string(sector_code(doc.sector)),
                            doc.effect.to_string(),
                            doc.expiry == Date::sentinel() ? "" : doc.expiry.to_string(),
                            doc.stub ? "1" : "0"})
              << '\n';
  }
  edges << "source,target,type\n";
  for (const Edge& e : g.edges()) {
    edges << csv::join({g.document(e.source).id.str(), g.document(e.target).id.str(),
                        std::string(reftype_token(e.kind))})
          << '\n';
  }
}

json to_json(const IngestReport& report) {
  json per_type = json::object();
  for (RefType kind : kAllRefTypes) {
    per_type[std::string(reftype_token(kind))] = report.per_type_counts[reftype_slot(kind)];
  }
  return {{"nodes", report.nodes},
          {"edges", report.edges},
          {"stubs", report.stubs},
          {"deduplicated", report.deduplicated},
          {"per_type_counts", std::move(per_type)}};
}

}  // namespace legnet
