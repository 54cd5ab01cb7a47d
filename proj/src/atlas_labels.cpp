// Unipotent class labels of the exceptional groups in good characteristic
// (Bala-Carter-Pommerening notation), identity class omitted. External data,
// ordered by increasing class dimension.

#include "a1u/atlas.hpp"

namespace a1u {

const std::vector<std::string>& class_labels(ExceptionalType t) {
  static const std::vector<std::string> g2 = {"A1", "~A1", "G2(a1)", "G2"};
  static const std::vector<std::string> f4 = {
      "A1",     "~A1",    "A1+~A1", "A2",     "~A2", "A2+~A1", "B2",     "~A2+A1",
      "C3(a1)", "F4(a3)", "B3",     "C3",     "F4(a2)", "F4(a1)", "F4"};
  static const std::vector<std::string> e6 = {
      "A1",      "2A1",    "3A1", "A2",    "A2+A1", "2A2", "A2+2A1",   "A3",  "2A2+A1", "A3+A1",
      "D4(a1)",  "A4",     "D4",  "A4+A1", "A5",    "D5(a1)", "E6(a3)", "D5", "E6(a1)", "E6"};
  static const std::vector<std::string> e7 = {
      "A1",        "2A1",       "(3A1)''",     "(3A1)'",   "A2",      "4A1",
      "A2+A1",     "A2+2A1",    "A3",          "2A2",      "A2+3A1",  "(A3+A1)''",
      "2A2+A1",    "(A3+A1)'",  "D4(a1)",      "A3+2A1",   "D4",      "D4(a1)+A1",
      "A3+A2",     "A4",        "A3+A2+A1",    "(A5)''",   "D4+A1",   "A4+A1",
      "D5(a1)",    "A4+A2",     "(A5)'",       "A5+A1",    "D5(a1)+A1", "D6(a2)",
      "E6(a3)",    "D5",        "E7(a5)",      "A6",       "D5+A1",   "D6(a1)",
      "E7(a4)",    "D6",        "E6(a1)",      "E6",       "E7(a3)",  "E7(a2)",
      "E7(a1)",    "E7"};
  static const std::vector<std::string> e8 = {
      "A1",        "2A1",       "3A1",        "A2",        "4A1",       "A2+A1",
      "A2+2A1",    "A3",        "A2+3A1",     "2A2",       "2A2+A1",    "A3+A1",
      "D4(a1)",    "D4",        "2A2+2A1",    "A3+2A1",    "D4(a1)+A1", "A3+A2",
      "A4",        "A3+A2+A1",  "D4+A1",      "D4(a1)+A2", "A4+A1",     "2A3",
      "D5(a1)",    "A4+2A1",    "A4+A2",      "A5",        "D5(a1)+A1", "A4+A2+A1",
      "D4+A2",     "E6(a3)",    "D5",         "A4+A3",     "A5+A1",     "D5(a1)+A2",
      "D6(a2)",    "E6(a3)+A1", "E7(a5)",     "D5+A1",     "E8(a7)",    "A6",
      "D6(a1)",    "A6+A1",     "E7(a4)",     "E6(a1)",    "D5+A2",     "D6",
      "E6",        "D7(a2)",    "A7",         "E6(a1)+A1", "E7(a3)",    "E8(b6)",
      "D7(a1)",    "E6+A1",     "E7(a2)",     "E8(a6)",    "D7",        "E8(b5)",
      "E7(a1)",    "E8(a5)",    "E8(b4)",     "E7",        "E8(a4)",    "E8(a3)",
      "E8(a2)",    "E8(a1)",    "E8"};
  switch (t) {
    case ExceptionalType::G2: return g2;
    case ExceptionalType::F4: return f4;
    case ExceptionalType::E6: return e6;
    case ExceptionalType::E7: return e7;
    case ExceptionalType::E8: return e8;
  }
  return g2;
}

}  // namespace a1u
