#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace joinscout {

/// Identifies a table by database and table name.
struct TableRef {
  std::string database;
  std::string table;

  std::string qualified() const { return database + "." + table; }
  auto operator<=>(const TableRef&) const = default;
};

/// Identifies one column of one table.
struct ColumnRef {
  std::string database;
  std::string table;
  std::string column;

  TableRef table_ref() const { return {database, table}; }
  std::string qualified() const { return database + "." + table + "." + column; }
  auto operator<=>(const ColumnRef&) const = default;
};

struct ForeignKey {
  std::vector<std::string> columns;
  std::string ref_table;
  std::vector<std::string> ref_columns;
};

/// A column with every cell held as text. `distinct_values` is sorted and
/// never contains the empty string.
class Column {
 public:
  Column(std::string name, std::vector<std::string> values);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& values() const { return values_; }
  const std::vector<std::string>& distinct_values() const { return distinct_; }

 private:
  std::string name_;
  std::vector<std::string> values_;
  std::vector<std::string> distinct_;
};

class Table {
 public:
  Table(std::string name, std::vector<Column> columns, std::vector<std::string> primary_key,
        std::vector<ForeignKey> foreign_keys, std::string file = {});

  const std::string& name() const { return name_; }
  const std::vector<Column>& columns() const { return columns_; }
  std::size_t row_count() const { return rows_; }
  const std::vector<std::string>& primary_key() const { return primary_key_; }
  const std::vector<ForeignKey>& foreign_keys() const { return foreign_keys_; }
  /// CSV path relative to the manifest, as declared.
  const std::string& file() const { return file_; }

  const Column* find_column(std::string_view name) const;
  const Column& column(std::string_view name) const;  // throws SchemaMismatchError
  std::optional<std::size_t> column_index(std::string_view name) const;

 private:
  std::string name_;
  std::vector<Column> columns_;
  std::size_t rows_ = 0;
  std::vector<std::string> primary_key_;
  std::vector<ForeignKey> foreign_keys_;
  std::string file_;
};

struct Database {
  std::string name;
  std::vector<Table> tables;

  const Table* find_table(std::string_view table) const;
};

/// Immutable multi-database catalog. Construction validates name uniqueness
/// and that every foreign key resolves inside its own database.
class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<Database> databases);

  const std::vector<Database>& databases() const { return databases_; }

  const Database* find_database(std::string_view name) const;
  const Table* find_table(const TableRef& ref) const;
  const Table& table(const TableRef& ref) const;  // throws UnknownTableError
  const Column& column(const ColumnRef& ref) const;

  /// Resolves "db.table" or a bare table name that is unique across the
  /// catalog. Throws UnknownTableError.
  TableRef resolve(std::string_view name) const;

  std::vector<TableRef> table_refs() const;
  std::size_t foreign_key_count() const;

 private:
  std::vector<Database> databases_;
};

/// Undirected foreign-key relation: `columns` pairs (child column, referenced
/// column).
struct FkLink {
  TableRef child;
  TableRef parent;
  std::vector<std::pair<std::string, std::string>> columns;
};

/// One entry per declared foreign key, in manifest order.
std::vector<FkLink> fk_edges(const Catalog& catalog);

/// Loads a JSON manifest and its CSV files. Paths inside the manifest are
/// relative to the manifest's directory.
Catalog load_catalog(const std::filesystem::path& manifest_path);

/// Writes `manifest.json` plus one CSV per table into `directory`. Tables
/// without a declared file are written as `<database>/<table>.csv`.
void save_catalog(const Catalog& catalog, const std::filesystem::path& directory);

}  // namespace joinscout
