#include "joinscout/fuzzgen.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "joinscout/errors.hpp"
#include "joinscout/similarity.hpp"
#include "wordlists.hpp"

namespace joinscout {

namespace fs = std::filesystem;
using nlohmann::json;

std::map<std::string, std::string, std::less<>> FuzzConfig::default_synonyms() {
  std::map<std::string, std::string, std::less<>> out;
  for (const auto& [from, to] : words::kDrugSynonyms) out.emplace(from, to);
  return out;
}

void FuzzConfig::validate() const {
  for (double p : {char_removal_rate, reorder_rate, fuzzify_fraction}) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("fuzzification rates must lie in [0, 1]");
  }
}

std::string remove_chars(std::string_view value, Rng& rng) {
  std::u32string chars = decode_utf8(value);
  if (chars.size() < 3) throw ValueTooShortError("remove_chars needs at least 3 characters: '" + std::string(value) + "'");
  const auto count = static_cast<std::size_t>(rng.between(1, 2));
  for (std::size_t k = 0; k < count; ++k) chars.erase(rng.index(chars.size()), 1);
  std::string out;
  for (char32_t c : chars) {
    // re-encode; decode_utf8 never yields surrogates
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

std::string reorder_name(std::string_view value) {
  std::vector<std::string> parts;
  std::istringstream in{std::string(value)};
  for (std::string part; in >> part;) parts.push_back(part);
  if (parts.size() < 2) throw SingleTokenError("reorder_name needs at least two name parts: '" + std::string(value) + "'");
  std::string out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!out.empty()) out.push_back(' ');
    out += *it;
  }
  return out;
}

std::string inject_synonym(std::string_view value, const std::map<std::string, std::string, std::less<>>& synonyms) {
  auto it = synonyms.find(value);
  return it == synonyms.end() ? std::string(value) : it->second;
}

std::string vary_label(std::string_view value, const std::vector<std::string>& suffix_pool, Rng& rng) {
  if (suffix_pool.empty()) return std::string(value);
  return std::string(value) + " " + suffix_pool[rng.index(suffix_pool.size())];
}

namespace {

json column_ref_json(const ColumnRef& c) { return {{"db", c.database}, {"table", c.table}, {"column", c.column}}; }

ColumnRef column_ref_from(const json& node) {
  return {node.at("db").get<std::string>(), node.at("table").get<std::string>(), node.at("column").get<std::string>()};
}

}  // namespace

json GroundTruth::to_json() const {
  json pairs = json::array();
  for (const auto& [l, r] : joinable_pairs) pairs.push_back({{"left", column_ref_json(l)}, {"right", column_ref_json(r)}});
  json records = json::array();
  for (const auto& f : fuzzified) {
    records.push_back({{"db", f.column.database},
                       {"table", f.column.table},
                       {"column", f.column.column},
                       {"row", f.row},
                       {"value", f.value},
                       {"original", f.original},
                       {"transforms", f.transforms}});
  }
  return {{"seed", seed},
          {"scale", scale},
          {"fuzzify_fraction", fuzzify_fraction},
          {"joinable_pairs", std::move(pairs)},
          {"fuzzified", std::move(records)}};
}

GroundTruth GroundTruth::from_json(const json& node) {
  try {
    GroundTruth gt;
    gt.seed = node.at("seed").get<std::uint64_t>();
    gt.scale = node.at("scale").get<std::size_t>();
    gt.fuzzify_fraction = node.at("fuzzify_fraction").get<double>();
    for (const auto& p : node.at("joinable_pairs"))
      gt.joinable_pairs.emplace_back(column_ref_from(p.at("left")), column_ref_from(p.at("right")));
    for (const auto& f : node.at("fuzzified")) {
      gt.fuzzified.push_back({{f.at("db").get<std::string>(), f.at("table").get<std::string>(),
                               f.at("column").get<std::string>()},
                              f.at("row").get<std::size_t>(),
                              f.at("value").get<std::string>(),
                              f.at("original").get<std::string>(),
                              f.at("transforms").get<std::vector<std::string>>()});
    }
    return gt;
  } catch (const json::exception& e) {
    throw ManifestParseError(std::string("ground truth JSON is malformed: ") + e.what());
  }
}

namespace {

template <typename Array>
std::string pick(const Array& items, Rng& rng) {
  return std::string(items[rng.index(items.size())]);
}

std::string uuid(Rng& rng) {
  const std::uint64_t hi = (rng.next() & 0xFFFFFFFFFFFF0FFFull) | 0x0000000000004000ull;
  const std::uint64_t lo = (rng.next() & 0x3FFFFFFFFFFFFFFFull) | 0x8000000000000000ull;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%08llx-%04llx-%04llx-%04llx-%012llx",
                static_cast<unsigned long long>(hi >> 32), static_cast<unsigned long long>((hi >> 16) & 0xFFFF),
                static_cast<unsigned long long>(hi & 0xFFFF), static_cast<unsigned long long>(lo >> 48),
                static_cast<unsigned long long>(lo & 0xFFFFFFFFFFFFull));
  return buf;
}

std::string person(Rng& rng) { return pick(words::kFirstNames, rng) + " " + pick(words::kLastNames, rng); }

std::string date(Rng& rng, int first_year, int last_year) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", static_cast<int>(rng.between(first_year, last_year)),
                static_cast<int>(rng.between(1, 12)), static_cast<int>(rng.between(1, 28)));
  return buf;
}

std::string fixed(double x, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

std::string company(Rng& rng) {
  switch (rng.index(4)) {
    case 0:
      return pick(words::kLastNames, rng) + "-" + pick(words::kLastNames, rng);
    case 1:
      return pick(words::kLastNames, rng) + ", " + pick(words::kLastNames, rng) + " and " +
             pick(words::kLastNames, rng);
    case 2:
      return pick(words::kLastNames, rng) + " and Sons";
    default:
      return pick(words::kLastNames, rng) + " Group";
  }
}

struct TableData {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> primary_key;
  std::vector<ForeignKey> foreign_keys;

  Table build(const std::string& db) && {
    std::vector<std::vector<std::string>> cells(columns.size());
    for (auto& row : rows) {
      for (std::size_t c = 0; c < columns.size(); ++c) cells[c].push_back(std::move(row[c]));
    }
    std::vector<Column> cols;
    for (std::size_t c = 0; c < columns.size(); ++c) cols.emplace_back(columns[c], std::move(cells[c]));
    return Table(name, std::move(cols), std::move(primary_key), std::move(foreign_keys), db + "/" + name + ".csv");
  }
};

ForeignKey fk(std::string column, std::string ref_table, std::string ref_column) {
  return {{std::move(column)}, std::move(ref_table), {std::move(ref_column)}};
}

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.index(i)]);
}

// Index of the unique best token_sort match of `probe` among `pool`, or -1 on
// a tie for best.
std::ptrdiff_t unique_best(const std::string& probe, const std::vector<std::string>& pool) {
  const auto key = token_sort_key(probe);
  double best = -1.0;
  std::ptrdiff_t best_index = -1;
  bool tied = false;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const double s = indel_ratio(std::u32string_view(key), std::u32string_view(token_sort_key(pool[i])));
    if (s > best) {
      best = s;
      best_index = static_cast<std::ptrdiff_t>(i);
      tied = false;
    } else if (s == best) {
      tied = true;
    }
  }
  return tied ? -1 : best_index;
}

class Generator {
 public:
  Generator(const FuzzConfig& config, std::size_t scale) : config_(config), scale_(scale), rng_(config.seed) {}

  GeneratedCatalog run();

 private:
  std::size_t count(std::size_t base) const { return base * scale_; }

  Database hospital();
  Database insurance();
  Database pharmacy();
  Database public_info();

  // Applies a fuzzifier until the result differs from the original in its
  // token-sorted form (or, with `allow_same_key`, just as a string) and the
  // original stays its unique best match in `pool`. Returns nullopt if no
  // attempt qualifies.
  template <typename Fn>
  std::optional<std::pair<std::string, std::vector<std::string>>> fuzz(const std::string& original,
                                                                        const std::vector<std::string>& pool,
                                                                        bool allow_same_key, Fn&& fuzzifier);

  const FuzzConfig& config_;
  std::size_t scale_;
  Rng rng_;
  GroundTruth truth_;

  std::vector<std::string> clinic_names_;
  std::vector<std::string> patient_names_;
  std::vector<std::string> drug_names_;
};

template <typename Fn>
std::optional<std::pair<std::string, std::vector<std::string>>> Generator::fuzz(const std::string& original,
                                                                                const std::vector<std::string>& pool,
                                                                                bool allow_same_key,
                                                                                Fn&& fuzzifier) {
  const auto original_key = token_sort_key(original);
  const auto original_index = std::find(pool.begin(), pool.end(), original) - pool.begin();
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<std::string> applied;
    std::string value = fuzzifier(original, applied);
    if (value == original) continue;
    if (!allow_same_key && token_sort_key(value) == original_key) continue;
    if (unique_best(value, pool) != original_index) continue;
    return std::pair{std::move(value), std::move(applied)};
  }
  return std::nullopt;
}

Database Generator::hospital() {
  Database db{"hospital_db", {}};

  TableData clinics{"Clinics", {"clinic_id", "clinic_name", "city", "phone"}, {}, {"clinic_id"}, {}};
  std::set<std::u32string> clinic_keys;
  while (clinic_names_.size() < count(40)) {
    std::string name = company(rng_);
    if (!clinic_keys.insert(token_sort_key(name)).second) continue;
    clinic_names_.push_back(name);
    char phone[16];
    std::snprintf(phone, sizeof phone, "555-%03d-%04d", static_cast<int>(rng_.between(100, 999)),
                  static_cast<int>(rng_.between(0, 9999)));
    clinics.rows.push_back({uuid(rng_), name, pick(words::kCities, rng_), phone});
  }

  TableData doctors{"Doctors", {"doctor_id", "doctor_name", "specialty", "clinic_id"}, {}, {"doctor_id"},
                    {fk("clinic_id", "Clinics", "clinic_id")}};
  for (std::size_t i = 0; i < count(120); ++i) {
    const auto& clinic = clinics.rows[rng_.index(clinics.rows.size())];
    doctors.rows.push_back({uuid(rng_), person(rng_), pick(words::kSpecialties, rng_), clinic[0]});
  }

  TableData patients{"Patients", {"patient_id", "full_name", "birth_date", "gender", "home_address"}, {},
                     {"patient_id"}, {}};
  for (std::size_t i = 0; i < count(300); ++i) {
    std::string name = person(rng_);
    patient_names_.push_back(name);
    patients.rows.push_back({uuid(rng_), name, date(rng_, 1940, 2015), rng_.chance(0.5) ? "F" : "M",
                             std::to_string(rng_.between(1, 999)) + " " + pick(words::kStreets, rng_)});
  }

  TableData prescriptions{"Prescriptions",
                          {"prescription_id", "patient_id", "doctor_id", "dosage_mg", "written_at"},
                          {},
                          {"prescription_id"},
                          {fk("patient_id", "Patients", "patient_id"), fk("doctor_id", "Doctors", "doctor_id")}};
  for (std::size_t i = 0; i < count(600); ++i) {
    prescriptions.rows.push_back({uuid(rng_), patients.rows[rng_.index(patients.rows.size())][0],
                                  doctors.rows[rng_.index(doctors.rows.size())][0],
                                  std::to_string(5 * rng_.between(1, 200)), date(rng_, 2018, 2024)});
  }

  TableData appointments{"Appointments",
                         {"appointment_id", "patient_id", "doctor_id", "scheduled_for", "reason"},
                         {},
                         {"appointment_id"},
                         {fk("patient_id", "Patients", "patient_id"), fk("doctor_id", "Doctors", "doctor_id")}};
  for (std::size_t i = 0; i < count(500); ++i) {
    char slot[8];
    std::snprintf(slot, sizeof slot, "%02d:%02d", static_cast<int>(rng_.between(8, 17)),
                  static_cast<int>(15 * rng_.between(0, 3)));
    appointments.rows.push_back({uuid(rng_), patients.rows[rng_.index(patients.rows.size())][0],
                                 doctors.rows[rng_.index(doctors.rows.size())][0],
                                 date(rng_, 2022, 2025) + " " + slot, pick(words::kReasons, rng_)});
  }

  db.tables.push_back(std::move(patients).build(db.name));
  db.tables.push_back(std::move(clinics).build(db.name));
  db.tables.push_back(std::move(prescriptions).build(db.name));
  db.tables.push_back(std::move(doctors).build(db.name));
  db.tables.push_back(std::move(appointments).build(db.name));
  return db;
}

Database Generator::insurance() {
  Database db{"insurance_db", {}};

  TableData providers{"Insurance_Providers", {"provider_id", "provider_title", "hotline"}, {}, {"provider_id"}, {}};
  for (std::size_t i = 0; i < count(12); ++i) {
    char hotline[20];
    std::snprintf(hotline, sizeof hotline, "1-800-%03d-%04d", static_cast<int>(rng_.between(200, 999)),
                  static_cast<int>(rng_.between(0, 9999)));
    providers.rows.push_back(
        {uuid(rng_), pick(words::kLastNames, rng_) + " " + pick(words::kInsurerSuffixes, rng_), hotline});
  }

  TableData members{"Insured_Patients",
                    {"member_id", "provider_id", "policyholder", "policy_number", "coverage_tier"},
                    {},
                    {"member_id"},
                    {fk("provider_id", "Insurance_Providers", "provider_id")}};
  for (std::size_t i = 0; i < count(250); ++i) {
    char policy[16];
    std::snprintf(policy, sizeof policy, "POL-%06d", static_cast<int>(rng_.between(0, 999999)));
    members.rows.push_back({uuid(rng_), providers.rows[rng_.index(providers.rows.size())][0], person(rng_), policy,
                            pick(words::kTiers, rng_)});
  }

  TableData claims{"Claims",
                   {"claim_id", "member_id", "claim_amount", "filed_on", "claim_status"},
                   {},
                   {"claim_id"},
                   {fk("member_id", "Insured_Patients", "member_id")}};
  for (std::size_t i = 0; i < count(500); ++i) {
    claims.rows.push_back({uuid(rng_), members.rows[rng_.index(members.rows.size())][0],
                           fixed(static_cast<double>(rng_.between(2000, 500000)) / 100.0, 2), date(rng_, 2019, 2024),
                           pick(words::kClaimStatus, rng_)});
  }

  db.tables.push_back(std::move(providers).build(db.name));
  db.tables.push_back(std::move(members).build(db.name));
  db.tables.push_back(std::move(claims).build(db.name));
  return db;
}

Database Generator::pharmacy() {
  Database db{"pharmacy_db", {}};

  TableData pharmacies{"Pharmacies", {"pharmacy_id", "storefront", "borough"}, {}, {"pharmacy_id"}, {}};
  for (std::size_t i = 0; i < count(25); ++i) {
    pharmacies.rows.push_back(
        {uuid(rng_), pick(words::kLastNames, rng_) + " Pharmacy #" + std::to_string(i + 1), pick(words::kBoroughs, rng_)});
  }

  TableData drugs{"Drugs", {"drug_id", "drug_name", "manufacturer", "unit_price"}, {}, {"drug_id"}, {}};
  const std::size_t base = words::kDrugs.size();
  for (std::size_t i = 0; i < count(base); ++i) {
    std::string name(words::kDrugs[i % base]);
    const std::size_t round = i / base;
    if (round > 0 && round <= words::kDrugForms.size()) name += " " + std::string(words::kDrugForms[round - 1]);
    else if (round > 0) name += " " + std::to_string(round);
    drug_names_.push_back(name);
    drugs.rows.push_back({uuid(rng_), name, pick(words::kManufacturers, rng_),
                          fixed(static_cast<double>(rng_.between(50, 25000)) / 100.0, 2)});
  }

  TableData orders{"Pharmacy_Orders",
                   {"order_id", "pharmacy_id", "drug_id", "quantity", "ordered_at"},
                   {},
                   {"order_id"},
                   {fk("pharmacy_id", "Pharmacies", "pharmacy_id"), fk("drug_id", "Drugs", "drug_id")}};
  for (std::size_t i = 0; i < count(400); ++i) {
    orders.rows.push_back({uuid(rng_), pharmacies.rows[rng_.index(pharmacies.rows.size())][0],
                           drugs.rows[rng_.index(drugs.rows.size())][0], std::to_string(rng_.between(1, 500)),
                           date(rng_, 2020, 2024)});
  }

  db.tables.push_back(std::move(pharmacies).build(db.name));
  db.tables.push_back(std::move(drugs).build(db.name));
  db.tables.push_back(std::move(orders).build(db.name));
  return db;
}

Database Generator::public_info() {
  Database db{"public_info_db", {}};
  const std::string name = db.name;
  auto record = [&](const std::string& table, const std::string& column, std::size_t row, const std::string& value,
                    const std::string& original, std::vector<std::string> transforms) {
    truth_.fuzzified.push_back({{name, table, column}, row, value, original, std::move(transforms)});
  };

  // Citizens: most patients reappear, some with reordered or misspelled names.
  TableData citizens{"Citizen_Registry", {"citizen_id", "full_name", "birth_year", "district_code"}, {},
                     {"citizen_id"}, {}};
  std::vector<std::string> distinct_patients = patient_names_;
  std::sort(distinct_patients.begin(), distinct_patients.end());
  distinct_patients.erase(std::unique(distinct_patients.begin(), distinct_patients.end()), distinct_patients.end());
  std::vector<std::string> copied = distinct_patients;
  shuffle(copied, rng_);
  copied.resize(copied.size() * 8 / 10);
  auto person_fuzzifier = [&](const std::string& v, std::vector<std::string>& applied) {
    std::string out = v;
    if (rng_.chance(config_.reorder_rate)) {
      out = reorder_name(out);
      applied.push_back("reorder_name");
    }
    if (applied.empty() || rng_.chance(config_.char_removal_rate)) {
      out = remove_chars(out, rng_);
      applied.push_back("remove_chars");
    }
    return out;
  };
  for (const auto& original : copied) {
    std::string value = original;
    if (rng_.chance(config_.fuzzify_fraction)) {
      if (auto f = fuzz(original, distinct_patients, true, person_fuzzifier)) {
        value = f->first;
        record(citizens.name, "full_name", citizens.rows.size(), value, original, f->second);
      }
    }
    char district[8];
    std::snprintf(district, sizeof district, "D-%02d", static_cast<int>(rng_.between(1, 30)));
    citizens.rows.push_back({uuid(rng_), value, std::to_string(rng_.between(1940, 2015)), district});
  }
  const std::size_t fresh = count(300) > copied.size() ? count(300) - copied.size() : 0;
  for (std::size_t i = 0; i < fresh; ++i) {
    char district[8];
    std::snprintf(district, sizeof district, "D-%02d", static_cast<int>(rng_.between(1, 30)));
    citizens.rows.push_back({uuid(rng_), person(rng_), std::to_string(rng_.between(1940, 2015)), district});
  }

  // Survey: one entry per clinic plus hospitals unknown to hospital_db.
  TableData survey{"Hospital_Survey", {"survey_id", "hospital_name", "satisfaction_score", "survey_year"}, {},
                   {"survey_id"}, {}};
  std::vector<std::string> surveyed = clinic_names_;
  shuffle(surveyed, rng_);
  auto facility_fuzzifier = [&](const std::string& v, std::vector<std::string>& applied) {
    std::string out = vary_label(v, config_.suffix_pool, rng_);
    applied.push_back("vary_label");
    if (rng_.chance(config_.char_removal_rate)) {
      out = remove_chars(out, rng_);
      applied.push_back("remove_chars");
    }
    return out;
  };
  std::set<std::u32string> used_keys;
  for (const auto& c : clinic_names_) used_keys.insert(token_sort_key(c));
  for (const auto& original : surveyed) {
    std::string value = original;
    if (rng_.chance(config_.fuzzify_fraction)) {
      auto f = fuzz(original, clinic_names_, false, facility_fuzzifier);
      if (f && !used_keys.count(token_sort_key(f->first))) {
        value = f->first;
        used_keys.insert(token_sort_key(value));
        record(survey.name, "hospital_name", survey.rows.size(), value, original, f->second);
      }
    }
    survey.rows.push_back({uuid(rng_), value, fixed(static_cast<double>(rng_.between(300, 500)) / 100.0, 2),
                           std::to_string(rng_.between(2019, 2024))});
  }
  const std::size_t extra = clinic_names_.size() / 4;
  for (std::size_t added = 0; added < extra;) {
    std::string value = "St. " + pick(words::kLastNames, rng_) + " " + pick(words::kCities, rng_) + " Hospital";
    if (!used_keys.insert(token_sort_key(value)).second) continue;
    survey.rows.push_back({uuid(rng_), value, fixed(static_cast<double>(rng_.between(300, 500)) / 100.0, 2),
                           std::to_string(rng_.between(2019, 2024))});
    ++added;
  }

  // Watchlist: a share of the drug catalog, some misspelled.
  TableData watchlist{"Drug_Watchlist", {"watch_id", "medication_name", "risk_level", "listed_on"}, {}, {"watch_id"},
                      {}};
  std::vector<std::string> watched = drug_names_;
  shuffle(watched, rng_);
  watched.resize(watched.size() * 7 / 10);
  auto drug_fuzzifier = [&](const std::string& v, std::vector<std::string>& applied) {
    if (config_.synonym_map.count(v)) {
      applied.push_back("inject_synonym");
      return inject_synonym(v, config_.synonym_map);
    }
    applied.push_back("remove_chars");
    return remove_chars(v, rng_);
  };
  for (const auto& original : watched) {
    std::string value = original;
    if (rng_.chance(config_.fuzzify_fraction)) {
      if (auto f = fuzz(original, drug_names_, false, drug_fuzzifier)) {
        value = f->first;
        record(watchlist.name, "medication_name", watchlist.rows.size(), value, original, f->second);
      }
    }
    watchlist.rows.push_back({uuid(rng_), value, pick(words::kRiskLevels, rng_), date(rng_, 2015, 2024)});
  }

  db.tables.push_back(std::move(citizens).build(db.name));
  db.tables.push_back(std::move(survey).build(db.name));
  db.tables.push_back(std::move(watchlist).build(db.name));
  return db;
}

GeneratedCatalog Generator::run() {
  truth_.seed = config_.seed;
  truth_.scale = scale_;
  truth_.fuzzify_fraction = config_.fuzzify_fraction;
  truth_.joinable_pairs = {
      {{"hospital_db", "Clinics", "clinic_name"}, {"public_info_db", "Hospital_Survey", "hospital_name"}},
      {{"pharmacy_db", "Drugs", "drug_name"}, {"public_info_db", "Drug_Watchlist", "medication_name"}},
      {{"hospital_db", "Patients", "full_name"}, {"public_info_db", "Citizen_Registry", "full_name"}},
  };
  std::vector<Database> dbs;
  dbs.push_back(hospital());
  dbs.push_back(insurance());
  dbs.push_back(pharmacy());
  dbs.push_back(public_info());
  return {Catalog(std::move(dbs)), std::move(truth_)};
}

}  // namespace

GeneratedCatalog generate_catalog(const FuzzConfig& config, std::size_t scale) {
  config.validate();
  if (scale < 1) throw ConfigError("scale must be at least 1");
  return Generator(config, scale).run();
}

void write_generated(const GeneratedCatalog& generated, const fs::path& out_dir) {
  const fs::path parent = out_dir.has_parent_path() ? out_dir.parent_path() : fs::path(".");
  if (!fs::is_directory(parent)) throw IoError("output parent directory does not exist: " + parent.string());
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  save_catalog(generated.catalog, out_dir);
  const fs::path truth_path = out_dir / "ground_truth.json";
  std::ofstream out(truth_path, std::ios::binary);
  if (!out) throw IoError("cannot write " + truth_path.string());
  out << generated.truth.to_json().dump(2) << '\n';
  if (!out) throw IoError("failed writing " + truth_path.string());
}

GroundTruth load_ground_truth(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError("ground truth not found: " + path.string());
  try {
    return GroundTruth::from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ManifestParseError(std::string("ground truth is not valid JSON: ") + e.what());
  }
}

EdgeEvaluation evaluate_fuzzy_edges(const JoinGraph& graph, const GroundTruth& truth) {
  std::set<std::pair<TableRef, TableRef>> expected;
  for (const auto& [l, r] : truth.joinable_pairs) expected.insert(std::minmax(l.table_ref(), r.table_ref()));
  std::set<std::pair<TableRef, TableRef>> found;
  for (const auto& e : graph.edges()) {
    if (e.kind == EdgeKind::Fuzzy) found.insert(std::minmax(e.left, e.right));
  }
  EdgeEvaluation ev;
  for (const auto& f : found) (expected.count(f) ? ev.true_positives : ev.false_positives)++;
  for (const auto& x : expected) ev.false_negatives += found.count(x) ? 0 : 1;
  ev.precision = found.empty() ? 0.0 : static_cast<double>(ev.true_positives) / static_cast<double>(found.size());
  ev.recall = expected.empty() ? 1.0 : static_cast<double>(ev.true_positives) / static_cast<double>(expected.size());
  return ev;
}

}  // namespace joinscout
