#pragma once

#include <array>
#include <string_view>

// Fixed vocabularies for the synthetic healthcare generator.
namespace joinscout::words {

inline constexpr std::array<std::string_view, 64> kFirstNames = {
    "James",   "Mary",     "Robert",  "Patricia", "John",     "Jennifer", "Michael", "Linda",
    "David",   "Elizabeth", "William", "Barbara", "Richard",  "Susan",    "Joseph",  "Jessica",
    "Thomas",  "Sarah",    "Charles", "Karen",    "Daniel",   "Lisa",     "Matthew", "Nancy",
    "Anthony", "Betty",    "Mark",    "Sandra",   "Donald",   "Margaret", "Steven",  "Ashley",
    "Paul",    "Kimberly", "Andrew",  "Emily",    "Joshua",   "Donna",    "Kenneth", "Michelle",
    "Kevin",   "Carol",    "Brian",   "Amanda",   "George",   "Melissa",  "Timothy", "Deborah",
    "Ronald",  "Stephanie", "Edward", "Rebecca",  "Jason",    "Sharon",   "Jeffrey", "Laura",
    "Ryan",    "Cynthia",  "Jacob",   "Valerie",  "Gary",     "Amy",      "Patrick", "Alan"};

inline constexpr std::array<std::string_view, 64> kLastNames = {
    "Smith",    "Johnson",  "Williams", "Brown",    "Jones",   "Garcia",   "Miller",   "Davis",
    "Rodriguez", "Martinez", "Hernandez", "Lopez",  "Gonzalez", "Wilson",  "Anderson", "Thomas",
    "Taylor",   "Moore",    "Jackson",  "Martin",   "Lee",     "Perez",    "Thompson", "White",
    "Harris",   "Sanchez",  "Clark",    "Ramirez",  "Lewis",   "Robinson", "Walker",   "Young",
    "Allen",    "King",     "Wright",   "Scott",    "Torres",  "Nguyen",   "Hill",     "Flores",
    "Green",    "Adams",    "Nelson",   "Baker",    "Hall",    "Rivera",   "Campbell", "Mitchell",
    "Carter",   "Roberts",  "Fox",      "Medina",   "Floyd",   "Hunt",     "Reed",     "Blair",
    "Fleming",  "Sheppard", "Mercer",   "Dunn",     "Pierce",  "Hayes",    "Barker",   "Lowe"};

inline constexpr std::array<std::string_view, 40> kDrugs = {
    "Amoxicillin",   "Ibuprofen",     "Acetaminophen", "Metformin",    "Lisinopril",   "Atorvastatin",
    "Omeprazole",    "Amlodipine",    "Simvastatin",   "Levothyroxine", "Azithromycin", "Ciprofloxacin",
    "Gabapentin",    "Sertraline",    "Prednisone",    "Warfarin",     "Paracetamol",  "Cetirizine",
    "Montelukast",   "Losartan",      "Furosemide",    "Clopidogrel",  "Pantoprazole", "Escitalopram",
    "Rosuvastatin",  "Tramadol",      "Doxycycline",   "Fluoxetine",   "Citalopram",   "Meloxicam",
    "Trazodone",     "Carvedilol",    "Tamsulosin",    "Bupropion",    "Duloxetine",   "Venlafaxine",
    "Clonazepam",    "Lorazepam",     "Alprazolam",    "Diclofenac"};

inline constexpr std::array<std::string_view, 4> kDrugForms = {"XR", "ER", "Forte", "Junior"};

inline constexpr std::array<std::pair<std::string_view, std::string_view>, 20> kDrugSynonyms = {{
    {"Amoxicillin", "Amoksillin"},     {"Ibuprofen", "Ibuprofin"},       {"Acetaminophen", "Acetaminofen"},
    {"Metformin", "Metformine"},       {"Lisinopril", "Lisinoprill"},    {"Atorvastatin", "Atorvastatine"},
    {"Omeprazole", "Omeprazol"},       {"Amlodipine", "Amlodipin"},      {"Simvastatin", "Simvastatine"},
    {"Levothyroxine", "Levothyroxin"}, {"Azithromycin", "Azithromycine"}, {"Ciprofloxacin", "Ciprofloxacine"},
    {"Gabapentin", "Gabapentine"},     {"Sertraline", "Sertralin"},      {"Prednisone", "Prednison"},
    {"Warfarin", "Warfarine"},         {"Paracetamol", "Paracetamole"},  {"Cetirizine", "Cetirizin"},
    {"Montelukast", "Montelucast"},    {"Losartan", "Losartin"},
}};

inline constexpr std::array<std::string_view, 12> kManufacturers = {
    "Pfizer", "Novartis", "Roche", "Merck", "Sanofi", "GSK", "AbbVie", "Bayer", "Teva", "Mylan", "Sandoz", "Lupin"};

inline constexpr std::array<std::string_view, 16> kCities = {
    "Springfield", "Riverton", "Fairview", "Lakeside", "Greenville", "Madison", "Clinton", "Georgetown",
    "Salem", "Franklin", "Arlington", "Ashland", "Dover", "Milton", "Oxford", "Bristol"};

inline constexpr std::array<std::string_view, 12> kStreets = {
    "Oak Street", "Maple Avenue", "Cedar Lane", "Pine Road", "Elm Street", "Birch Way",
    "Lake Drive", "Hill Road", "Park Avenue", "River Road", "Sunset Boulevard", "Main Street"};

inline constexpr std::array<std::string_view, 10> kSpecialties = {
    "Cardiology", "Dermatology", "Family Medicine", "Neurology", "Oncology",
    "Pediatrics", "Psychiatry", "Radiology", "Orthopedics", "Endocrinology"};

inline constexpr std::array<std::string_view, 8> kReasons = {
    "Checkup", "Follow-up", "Vaccination", "Lab results", "Consultation", "Injury", "Prescription refill", "Screening"};

inline constexpr std::array<std::string_view, 4> kTiers = {"Bronze", "Silver", "Gold", "Platinum"};
inline constexpr std::array<std::string_view, 4> kClaimStatus = {"approved", "pending", "denied", "appealed"};
inline constexpr std::array<std::string_view, 3> kRiskLevels = {"low", "medium", "high"};
inline constexpr std::array<std::string_view, 8> kBoroughs = {
    "North", "South", "East", "West", "Central", "Harbor", "Uptown", "Midtown"};
inline constexpr std::array<std::string_view, 6> kInsurerSuffixes = {
    "Mutual", "Assurance", "Health Plan", "Insurance Group", "Benefits", "Care Alliance"};

}  // namespace joinscout::words
