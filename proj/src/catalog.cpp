#include "joinscout/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "joinscout/csv.hpp"
#include "joinscout/errors.hpp"

namespace joinscout {

namespace fs = std::filesystem;
using nlohmann::json;

Column::Column(std::string name, std::vector<std::string> values)
    : name_(std::move(name)), values_(std::move(values)) {
  distinct_.reserve(values_.size());
  for (const auto& v : values_) {
    if (!v.empty()) distinct_.push_back(v);
  }
  std::sort(distinct_.begin(), distinct_.end());
  distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());
}

Table::Table(std::string name, std::vector<Column> columns, std::vector<std::string> primary_key,
             std::vector<ForeignKey> foreign_keys, std::string file)
    : name_(std::move(name)),
      columns_(std::move(columns)),
      primary_key_(std::move(primary_key)),
      foreign_keys_(std::move(foreign_keys)),
      file_(std::move(file)) {
  std::set<std::string_view> seen;
  for (const auto& c : columns_) {
    if (!seen.insert(c.name()).second)
      throw SchemaMismatchError("table '" + name_ + "': duplicate column '" + c.name() + "'");
  }
  rows_ = columns_.empty() ? 0 : columns_.front().values().size();
  for (const auto& c : columns_) {
    if (c.values().size() != rows_)
      throw SchemaMismatchError("table '" + name_ + "': column '" + c.name() +
                                "' has a different row count");
  }
  for (const auto& k : primary_key_) {
    if (!find_column(k))
      throw SchemaMismatchError("table '" + name_ + "': primary key column '" + k + "' not found");
  }
  for (const auto& fk : foreign_keys_) {
    if (fk.columns.empty() || fk.columns.size() != fk.ref_columns.size())
      throw SchemaMismatchError("table '" + name_ + "': foreign key arity mismatch");
    for (const auto& k : fk.columns) {
      if (!find_column(k))
        throw SchemaMismatchError("table '" + name_ + "': foreign key column '" + k +
                                  "' not found");
    }
  }
}

const Column* Table::find_column(std::string_view name) const {
  auto it = std::find_if(columns_.begin(), columns_.end(),
                         [&](const Column& c) { return c.name() == name; });
  return it == columns_.end() ? nullptr : &*it;
}

const Column& Table::column(std::string_view name) const {
  if (const Column* c = find_column(name)) return *c;
  throw SchemaMismatchError("table '" + name_ + "' has no column '" + std::string(name) + "'");
}

std::optional<std::size_t> Table::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name() == name) return i;
  }
  return std::nullopt;
}

const Table* Database::find_table(std::string_view table) const {
  auto it = std::find_if(tables.begin(), tables.end(),
                         [&](const Table& t) { return t.name() == table; });
  return it == tables.end() ? nullptr : &*it;
}

Catalog::Catalog(std::vector<Database> databases) : databases_(std::move(databases)) {
  std::set<std::string_view> db_names;
  for (const auto& db : databases_) {
    if (!db_names.insert(db.name).second)
      throw SchemaMismatchError("duplicate database '" + db.name + "'");
    std::set<std::string_view> table_names;
    for (const auto& t : db.tables) {
      if (!table_names.insert(t.name()).second)
        throw SchemaMismatchError("database '" + db.name + "': duplicate table '" + t.name() + "'");
    }
    for (const auto& t : db.tables) {
      for (const auto& fk : t.foreign_keys()) {
        const Table* parent = db.find_table(fk.ref_table);
        if (!parent)
          throw DanglingForeignKeyError(db.name + "." + t.name() + ": foreign key references unknown table '" +
                                        fk.ref_table + "'");
        for (const auto& rc : fk.ref_columns) {
          if (!parent->find_column(rc))
            throw DanglingForeignKeyError(db.name + "." + t.name() +
                                          ": foreign key references unknown column '" +
                                          fk.ref_table + "." + rc + "'");
        }
      }
    }
  }
}

const Database* Catalog::find_database(std::string_view name) const {
  auto it = std::find_if(databases_.begin(), databases_.end(),
                         [&](const Database& d) { return d.name == name; });
  return it == databases_.end() ? nullptr : &*it;
}

const Table* Catalog::find_table(const TableRef& ref) const {
  const Database* db = find_database(ref.database);
  return db ? db->find_table(ref.table) : nullptr;
}

const Table& Catalog::table(const TableRef& ref) const {
  if (const Table* t = find_table(ref)) return *t;
  throw UnknownTableError("unknown table '" + ref.qualified() + "'");
}

const Column& Catalog::column(const ColumnRef& ref) const {
  return table(ref.table_ref()).column(ref.column);
}

TableRef Catalog::resolve(std::string_view name) const {
  if (auto dot = name.find('.'); dot != std::string_view::npos) {
    TableRef ref{std::string(name.substr(0, dot)), std::string(name.substr(dot + 1))};
    if (find_table(ref)) return ref;
  }
  std::optional<TableRef> found;
  for (const auto& db : databases_) {
    if (db.find_table(name)) {
      if (found)
        throw UnknownTableError("table name '" + std::string(name) +
                                "' is ambiguous; qualify it as <database>.<table>");
      found = TableRef{db.name, std::string(name)};
    }
  }
  if (!found) throw UnknownTableError("unknown table '" + std::string(name) + "'");
  return *found;
}

std::vector<TableRef> Catalog::table_refs() const {
  std::vector<TableRef> refs;
  for (const auto& db : databases_) {
    for (const auto& t : db.tables) refs.push_back({db.name, t.name()});
  }
  return refs;
}

std::size_t Catalog::foreign_key_count() const {
  std::size_t n = 0;
  for (const auto& db : databases_) {
    for (const auto& t : db.tables) n += t.foreign_keys().size();
  }
  return n;
}

std::vector<FkLink> fk_edges(const Catalog& catalog) {
  std::vector<FkLink> links;
  for (const auto& db : catalog.databases()) {
    for (const auto& t : db.tables) {
      for (const auto& fk : t.foreign_keys()) {
        FkLink link{{db.name, t.name()}, {db.name, fk.ref_table}, {}};
        for (std::size_t i = 0; i < fk.columns.size(); ++i)
          link.columns.emplace_back(fk.columns[i], fk.ref_columns[i]);
        links.push_back(std::move(link));
      }
    }
  }
  return links;
}

namespace {

std::vector<std::string> string_list(const json& node, const std::string& what) {
  if (!node.is_array()) throw ManifestParseError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) throw ManifestParseError(what + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ManifestParseError(where + ": missing key '" + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) throw ManifestParseError(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

Table load_table(const json& entry, const fs::path& base, const std::string& db_name) {
  if (!entry.is_object()) throw ManifestParseError(db_name + ": table entry must be an object");
  const std::string name = require_string(entry, "name", db_name + " table");
  const std::string where = db_name + "." + name;
  const std::string file = require_string(entry, "file", where);
  const auto columns = string_list(require(entry, "columns", where), where + ".columns");

  std::vector<std::string> primary_key;
  if (auto it = entry.find("primary_key"); it != entry.end() && !it->is_null())
    primary_key = string_list(*it, where + ".primary_key");

  std::vector<ForeignKey> fks;
  if (auto it = entry.find("foreign_keys"); it != entry.end() && !it->is_null()) {
    if (!it->is_array()) throw ManifestParseError(where + ".foreign_keys must be an array");
    for (const auto& fk : *it) {
      if (!fk.is_object()) throw ManifestParseError(where + ": foreign key must be an object");
      ForeignKey key;
      key.columns = string_list(require(fk, "columns", where + " foreign key"), where + " foreign key columns");
      key.ref_table = require_string(fk, "ref_table", where + " foreign key");
      key.ref_columns = string_list(require(fk, "ref_columns", where + " foreign key"),
                                    where + " foreign key ref_columns");
      fks.push_back(std::move(key));
    }
  }

  const fs::path csv_path = base / file;
  if (!fs::exists(csv_path)) throw MissingFileError(where + ": csv file not found: " + csv_path.string());
  auto records = csv::read_file(csv_path);
  if (records.empty()) throw SchemaMismatchError(where + ": csv file has no header row");
  if (records.front() != columns)
    throw SchemaMismatchError(where + ": csv header does not match manifest columns");

  std::vector<std::vector<std::string>> cells(columns.size());
  for (std::size_t r = 1; r < records.size(); ++r) {
    auto& rec = records[r];
    if (rec.size() > columns.size())
      throw SchemaMismatchError(where + ": row " + std::to_string(r) + " has more cells than columns");
    rec.resize(columns.size());  // missing trailing cells become empty
    for (std::size_t c = 0; c < columns.size(); ++c) cells[c].push_back(std::move(rec[c]));
  }
  std::vector<Column> cols;
  cols.reserve(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) cols.emplace_back(columns[c], std::move(cells[c]));
  return Table(name, std::move(cols), std::move(primary_key), std::move(fks), file);
}

}  // namespace

Catalog load_catalog(const fs::path& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw MissingFileError("manifest not found: " + manifest_path.string());
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ManifestParseError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!manifest.is_object()) throw ManifestParseError("manifest root must be an object");
  const json& dbs = require(manifest, "databases", "manifest");
  if (!dbs.is_array()) throw ManifestParseError("'databases' must be an array");

  const fs::path base = manifest_path.parent_path();
  std::vector<Database> databases;
  for (const auto& db_spec : dbs) {
    if (!db_spec.is_object()) throw ManifestParseError("database entry must be an object");
    Database db;
    db.name = require_string(db_spec, "name", "database");
    const json& tables = require(db_spec, "tables", db.name);
    if (!tables.is_array()) throw ManifestParseError(db.name + ": 'tables' must be an array");
    for (const auto& t : tables) db.tables.push_back(load_table(t, base, db.name));
    databases.push_back(std::move(db));
  }
  return Catalog(std::move(databases));
}

void save_catalog(const Catalog& catalog, const fs::path& directory) {
  json dbs = json::array();
  for (const auto& db : catalog.databases()) {
    json tables = json::array();
    for (const auto& t : db.tables) {
      const std::string file = t.file().empty() ? db.name + "/" + t.name() + ".csv" : t.file();
      const fs::path out_path = directory / file;
      std::error_code ec;
      fs::create_directories(out_path.parent_path(), ec);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw IoError("cannot write " + out_path.string());

      csv::Record header;
      for (const auto& c : t.columns()) header.push_back(c.name());
      csv::write_record(out, header);
      for (std::size_t r = 0; r < t.row_count(); ++r) {
        csv::Record row;
        row.reserve(t.columns().size());
        for (const auto& c : t.columns()) row.push_back(c.values()[r]);
        csv::write_record(out, row);
      }
      if (!out) throw IoError("failed writing " + out_path.string());

      json entry = {{"name", t.name()}, {"file", file}, {"columns", header}};
      if (!t.primary_key().empty()) entry["primary_key"] = t.primary_key();
      if (!t.foreign_keys().empty()) {
        json fks = json::array();
        for (const auto& fk : t.foreign_keys())
          fks.push_back({{"columns", fk.columns}, {"ref_table", fk.ref_table}, {"ref_columns", fk.ref_columns}});
        entry["foreign_keys"] = std::move(fks);
      }
      tables.push_back(std::move(entry));
    }
    dbs.push_back({{"name", db.name}, {"tables", std::move(tables)}});
  }
  const fs::path manifest_path = directory / "manifest.json";
  std::ofstream out(manifest_path, std::ios::binary);
  if (!out) throw IoError("cannot write " + manifest_path.string());
  out << json{{"databases", std::move(dbs)}}.dump(2) << '\n';
  if (!out) throw IoError("failed writing " + manifest_path.string());
}

}  // namespace joinscout
