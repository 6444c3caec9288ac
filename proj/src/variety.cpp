#include "tiltwall/variety.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace tiltwall {

namespace {

// single source of truth for the built-ins; the files shipped under
// presets/ carry the same content for use as external interchange format
constexpr const char* kBlowupP3Json = R"({
  "name": "blowup-p3",
  "basis": ["L", "E"],
  "triple": {"LLL": "1", "LLE": "0", "LEE": "0", "EEE": "1"},
  "H": {"L": "2", "E": "-1"},
  "lattice": ["7", "1", "1/2", "1/6"]
})";

constexpr const char* kP3Json = R"({
  "name": "p3",
  "basis": ["L"],
  "triple": {"LLL": "1"},
  "H": {"L": "1"},
  "lattice": ["1", "1", "1/2", "1/6"]
})";

Rat parse_rat_or_throw(const std::string& text, const std::string& what) {
  auto r = parse_rat(text);
  if (!r) throw PresetError("preset: bad rational for " + what + ": '" + text + "'");
  return *r;
}

}  // namespace

Lattice::Lattice(std::array<Rat, 4> steps) : steps_(std::move(steps)) {
  for (const Rat& s : steps_)
    if (s <= 0) throw PresetError("lattice moduli must be positive");
}

bool Lattice::contains(const ChernVector& v) const {
  return contains(0, v.e0) && contains(1, v.e1) && contains(2, v.e2) && contains(3, v.e3);
}

VarietyPreset::VarietyPreset(std::string name, int rank, std::array<Rat, 4> table,
                             DivisorClass h, Lattice lattice)
    : name_(std::move(name)),
      rank_(rank),
      table_(std::move(table)),
      h_(std::move(h)),
      lattice_(std::move(lattice)) {
  validate();
}

void VarietyPreset::validate() const {
  Rat h3 = triple(h_, h_, h_);
  if (h3 <= 0) throw PresetError("preset '" + name_ + "': H^3 must be positive");
  if (!ample_check(h_)) throw PresetError("preset '" + name_ + "': H fails the ample check");
  if (h3 != lattice_.step(0))
    throw PresetError("preset '" + name_ + "': lattice modulus d0 must equal H^3");
}

const std::array<const char*, 2>& VarietyPreset::builtin_names() {
  static const std::array<const char*, 2> names{"blowup-p3", "p3"};
  return names;
}

VarietyPreset VarietyPreset::builtin(const std::string& name) {
  if (name == "blowup-p3") return from_json_text(kBlowupP3Json);
  if (name == "p3") return from_json_text(kP3Json);
  throw PresetError("unknown builtin preset '" + name + "'");
}

VarietyPreset VarietyPreset::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw PresetError(std::string("preset: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw PresetError("preset: top level must be an object");
  for (const char* key : {"name", "basis", "triple", "H", "lattice"})
    if (!j.contains(key)) throw PresetError(std::string("preset: missing field '") + key + "'");

  std::string name = j.at("name").get<std::string>();

  auto basis = j.at("basis");
  if (!basis.is_array() || basis.empty() || basis.size() > 2)
    throw PresetError("preset: basis must be [\"L\"] or [\"L\", \"E\"]");
  if (basis[0].get<std::string>() != "L" ||
      (basis.size() == 2 && basis[1].get<std::string>() != "E"))
    throw PresetError("preset: basis must be [\"L\"] or [\"L\", \"E\"]");
  int rank = static_cast<int>(basis.size());

  // canonicalize table keys by E-multiplicity so "LLE"/"LEL"/"ELL" agree
  std::array<Rat, 4> table{0, 0, 0, 0};
  for (auto it = j.at("triple").begin(); it != j.at("triple").end(); ++it) {
    const std::string& key = it.key();
    int n_e = 0;
    if (key.size() != 3) throw PresetError("preset: bad triple key '" + key + "'");
    for (char c : key) {
      if (c == 'E')
        ++n_e;
      else if (c != 'L')
        throw PresetError("preset: bad triple key '" + key + "'");
    }
    if (rank == 1 && n_e > 0)
      throw PresetError("preset: triple key '" + key + "' uses E on a rank-1 basis");
    table[static_cast<size_t>(n_e)] = parse_rat_or_throw(it->get<std::string>(), "triple." + key);
  }

  DivisorClass h{0, 0};
  for (auto it = j.at("H").begin(); it != j.at("H").end(); ++it) {
    if (it.key() == "L")
      h.l = parse_rat_or_throw(it->get<std::string>(), "H.L");
    else if (it.key() == "E" && rank == 2)
      h.e = parse_rat_or_throw(it->get<std::string>(), "H.E");
    else
      throw PresetError("preset: unknown basis element '" + it.key() + "' in H");
  }

  auto lat = j.at("lattice");
  if (!lat.is_array() || lat.size() != 4)
    throw PresetError("preset: lattice must list exactly four moduli");
  std::array<Rat, 4> steps;
  for (size_t i = 0; i < 4; ++i)
    steps[i] = parse_rat_or_throw(lat[i].get<std::string>(), "lattice[" + std::to_string(i) + "]");

  return VarietyPreset(std::move(name), rank, std::move(table), std::move(h),
                       Lattice(std::move(steps)));
}

VarietyPreset VarietyPreset::load(const std::string& name_or_path) {
  for (const char* name : builtin_names())
    if (name_or_path == name) return builtin(name_or_path);
  std::ifstream in(name_or_path);
  if (!in)
    throw PresetError("preset '" + name_or_path + "' is neither a builtin name nor a readable file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

Rat VarietyPreset::triple(const DivisorClass& a, const DivisorClass& b,
                          const DivisorClass& c) const {
  // symmetric trilinear expansion over the (L, E) basis
  return a.l * b.l * c.l * table_[0] +
         (a.l * b.l * c.e + a.l * b.e * c.l + a.e * b.l * c.l) * table_[1] +
         (a.l * b.e * c.e + a.e * b.l * c.e + a.e * b.e * c.l) * table_[2] +
         a.e * b.e * c.e * table_[3];
}

ChernVector VarietyPreset::chern_of_line_bundle(const DivisorClass& d) const {
  if (!is_integer(d.l) || !is_integer(d.e))
    throw NonIntegralDivisor("divisor " + divisor_str(d) + " has non-integer coordinates");
  return {
      triple(h_, h_, h_),
      triple(h_, h_, d),
      triple(h_, d, d) / 2,
      triple(d, d, d) / 6,
  };
}

bool VarietyPreset::ample_check(const DivisorClass& d) const {
  if (rank_ == 1 && d.e != 0) return false;
  // shipped presets: exact nef-cone interiors
  if (name_ == "p3" && rank_ == 1) return d.l > 0;
  if (name_ == "blowup-p3" && rank_ == 2) return d.e < 0 && d.l + d.e > 0;
  // unknown geometry: necessary positivity conditions against the declared
  // polarization (documented as a heuristic for user presets)
  if (d.l == 0 && d.e == 0) return false;
  return triple(d, d, d) > 0 && triple(d, d, h_) > 0 && triple(d, h_, h_) > 0;
}

std::optional<DivisorClass> parse_divisor(std::string_view text, int rank) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

  DivisorClass d{0, 0};
  bool seen_l = false, seen_e = false;
  size_t i = 0;
  if (s.empty()) return std::nullopt;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    }
    size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    Rat coeff = 1;
    if (i > start) {
      auto r = parse_rat(std::string_view(s).substr(start, i - start));
      if (!r) return std::nullopt;
      coeff = *r;
    }
    if (negative) coeff = -coeff;
    if (i >= s.size()) return std::nullopt;
    char letter = s[i++];
    if (letter == 'L') {
      if (seen_l) return std::nullopt;
      seen_l = true;
      d.l = coeff;
    } else if (letter == 'E') {
      if (seen_e || rank < 2) return std::nullopt;
      seen_e = true;
      d.e = coeff;
    } else {
      return std::nullopt;
    }
  }
  return d;
}

std::string divisor_str(const DivisorClass& d) {
  auto term = [](const Rat& c, const char* letter, bool leading) -> std::string {
    if (c == 0) return "";
    std::string sign = c > 0 ? (leading ? "" : "+") : "-";
    Rat mag = abs(c);
    return sign + (mag == 1 ? "" : to_string(mag)) + letter;
  };
  std::string out = term(d.l, "L", true);
  out += term(d.e, "E", out.empty());
  return out.empty() ? "0" : out;
}

std::optional<ChernVector> parse_chern(std::string_view text) {
  std::array<Rat, 4> parts;
  size_t begin = 0;
  for (int i = 0; i < 4; ++i) {
    size_t end = i == 3 ? text.size() : text.find(',', begin);
    if (end == std::string_view::npos) return std::nullopt;
    auto r = parse_rat(text.substr(begin, end - begin));
    if (!r) return std::nullopt;
    parts[static_cast<size_t>(i)] = *r;
    begin = end + 1;
  }
  if (text.find(',', begin) != std::string_view::npos) return std::nullopt;
  return ChernVector{parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace tiltwall
