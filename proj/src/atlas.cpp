#include "a1u/atlas.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "a1u/error.hpp"
#include "a1u/ffmatrix.hpp"

namespace a1u {

// Generated from data/exceptional_atlas.txt at configure time.
extern const char* const kBuiltinAtlasText;

namespace {

constexpr std::array kAllTypes = {ExceptionalType::G2, ExceptionalType::F4, ExceptionalType::E6,
                                  ExceptionalType::E7, ExceptionalType::E8};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<PrimeCondition> parse_condition(std::string_view s) {
  for (auto c : {PrimeCondition::Good, PrimeCondition::Eq5, PrimeCondition::Eq7,
                 PrimeCondition::Ge5, PrimeCondition::Ge7, PrimeCondition::Ge11}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::optional<ExceptionalType> type_from_name(std::string_view s) {
  for (auto t : kAllTypes) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

bool record_applies(const AtlasRecord& r, ExceptionalType g, int p, std::string_view label) {
  return r.group == g && r.label == label && satisfies(r.condition, p);
}

void check_prime(int p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

std::string_view to_string(ExceptionalType t) {
  switch (t) {
    case ExceptionalType::G2: return "G2";
    case ExceptionalType::F4: return "F4";
    case ExceptionalType::E6: return "E6";
    case ExceptionalType::E7: return "E7";
    case ExceptionalType::E8: return "E8";
  }
  return "?";
}

ExceptionalType exceptional_from_name(std::string_view name) {
  std::string upper;
  for (char c : trim(name)) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (auto t = type_from_name(upper)) return *t;
  throw Error(ErrorCode::InvalidGroup, "unknown exceptional group '" + std::string(name) + "'");
}

int coxeter_number(ExceptionalType t) {
  switch (t) {
    case ExceptionalType::G2: return 6;
    case ExceptionalType::F4: return 12;
    case ExceptionalType::E6: return 12;
    case ExceptionalType::E7: return 18;
    case ExceptionalType::E8: return 30;
  }
  return 0;
}

const std::vector<int>& bad_primes(ExceptionalType t) {
  static const std::vector<int> small = {2, 3};
  static const std::vector<int> e8 = {2, 3, 5};
  return t == ExceptionalType::E8 ? e8 : small;
}

bool is_good_prime(ExceptionalType t, int p) {
  return is_prime(p) && p > bad_primes(t).back();
}

std::string normalize_label(std::string_view label) {
  static constexpr std::string_view kTildeA = "\xC3\x83";  // U+00C3
  std::string out;
  const auto s = trim(label);
  for (std::size_t i = 0; i < s.size();) {
    if (s.substr(i, kTildeA.size()) == kTildeA) {
      out += "~A";
      i += kTildeA.size();
    } else if (s[i] != ' ') {
      out.push_back(s[i++]);
    } else {
      ++i;
    }
  }
  return out;
}

bool is_known_label(ExceptionalType t, std::string_view label) {
  const auto& labels = class_labels(t);
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

std::string_view to_string(PrimeCondition c) {
  switch (c) {
    case PrimeCondition::Good: return "good";
    case PrimeCondition::Eq5: return "=5";
    case PrimeCondition::Eq7: return "=7";
    case PrimeCondition::Ge5: return ">=5";
    case PrimeCondition::Ge7: return ">=7";
    case PrimeCondition::Ge11: return ">=11";
  }
  return "?";
}

// Goodness is checked separately.
bool satisfies(PrimeCondition c, int p) {
  switch (c) {
    case PrimeCondition::Good: return true;
    case PrimeCondition::Eq5: return p == 5;
    case PrimeCondition::Eq7: return p == 7;
    case PrimeCondition::Ge5: return p >= 5;
    case PrimeCondition::Ge7: return p >= 7;
    case PrimeCondition::Ge11: return p >= 11;
  }
  return false;
}

std::string_view to_string(AtlasVerdict::Kind k) {
  switch (k) {
    case AtlasVerdict::Kind::Unique: return "Unique";
    case AtlasVerdict::Kind::NonUnique: return "NonUnique";
    case AtlasVerdict::Kind::BadPrime: return "BadPrime";
    case AtlasVerdict::Kind::UnknownLabel: return "UnknownLabel";
  }
  return "?";
}

Atlas Atlas::parse(std::string_view text) {
  Atlas atlas;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    auto line = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::DataError, "atlas line " + std::to_string(line_no) + ": " + why);
    };
    const auto fields = split(line, '|');
    if (fields.size() != 4) throw fail("expected 4 fields, got " + std::to_string(fields.size()));
    AtlasRecord r{};
    r.line = line_no;
    if (auto t = type_from_name(fields[0])) r.group = *t;
    else throw fail("unknown group '" + std::string(fields[0]) + "'");
    if (auto c = parse_condition(fields[1])) r.condition = *c;
    else throw fail("unknown prime condition '" + std::string(fields[1]) + "'");
    r.label = normalize_label(fields[2]);
    if (!is_known_label(r.group, r.label)) {
      throw fail("label '" + r.label + "' is not a class of " + std::string(to_string(r.group)));
    }
    if (fields[3] == "Unique") r.unique = true;
    else if (fields[3] == "NonUnique") r.unique = false;
    else throw fail("unknown verdict '" + std::string(fields[3]) + "'");
    atlas.records_.push_back(std::move(r));
  }

  // Conditions only distinguish 5, 7 and >= 11, so primes up to 13 cover
  // every case.
  for (const auto& neg : atlas.records_) {
    if (neg.unique) continue;
    for (const auto& pos : atlas.records_) {
      if (!pos.unique || pos.group != neg.group || pos.label != neg.label) continue;
      for (int p : {5, 7, 11, 13}) {
        if (is_good_prime(neg.group, p) && satisfies(neg.condition, p) &&
            satisfies(pos.condition, p)) {
          throw Error(ErrorCode::DataError,
                      "atlas lines " + std::to_string(pos.line) + " and " +
                          std::to_string(neg.line) + " disagree on " +
                          std::string(to_string(neg.group)) + " " + neg.label + " at p = " +
                          std::to_string(p));
        }
      }
    }
  }
  return atlas;
}

Atlas Atlas::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::DataError, "cannot read atlas file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

const Atlas& Atlas::builtin() {
  static const Atlas atlas = parse(kBuiltinAtlasText);
  return atlas;
}

AtlasVerdict Atlas::verdict(ExceptionalType g, int p, std::string_view label) const {
  check_prime(p);
  AtlasVerdict v;
  if (!is_good_prime(g, p)) {
    v.kind = AtlasVerdict::Kind::BadPrime;
    v.note = std::to_string(p) + " is a bad prime for " + std::string(to_string(g));
    return v;
  }
  const std::string name = normalize_label(label);
  if (!is_known_label(g, name)) {
    v.kind = AtlasVerdict::Kind::UnknownLabel;
    v.note = "'" + std::string(label) + "' is not a unipotent class label of " +
             std::string(to_string(g));
    return v;
  }
  const bool unique = std::any_of(records_.begin(), records_.end(), [&](const AtlasRecord& r) {
    return r.unique && record_applies(r, g, p, name);
  });
  v.kind = unique ? AtlasVerdict::Kind::Unique : AtlasVerdict::Kind::NonUnique;

  const int h = coxeter_number(g);
  if (name == to_string(g)) {
    v.note = p >= h ? "regular class has order p since p >= Coxeter number " + std::to_string(h)
                    : "regular class has order p only when p >= Coxeter number " +
                          std::to_string(h) + "; not the case at p = " + std::to_string(p);
  } else {
    v.note = "assumes the class has elements of order p; not verified";
  }
  return v;
}

std::vector<std::string> Atlas::list_unique(ExceptionalType g, int p) const {
  check_prime(p);
  if (!is_good_prime(g, p)) {
    throw Error(ErrorCode::BadPrime,
                std::to_string(p) + " is a bad prime for " + std::string(to_string(g)));
  }
  std::vector<std::string> out;
  for (const auto& label : class_labels(g)) {
    if (verdict(g, p, label).kind == AtlasVerdict::Kind::Unique) out.push_back(label);
  }
  return out;
}

}  // namespace a1u
