// a1u: command-line front end.
//
// Exit codes: 0 success, 1 domain error (out of scope, bad prime, unknown
// label, failed self-check, ...), 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "a1u/atlas.hpp"
#include "a1u/classical.hpp"
#include "a1u/enumerator.hpp"
#include "a1u/error.hpp"
#include "a1u/jordan_type.hpp"
#include "a1u/partition.hpp"
#include "a1u/selfcheck.hpp"
#include "a1u/sl2_module.hpp"

namespace {

using nlohmann::json;
using namespace a1u;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

// Raised while turning flag values into library objects; reported with the
// flag name and exit code 2.
struct UsageError {
  std::string flag;
  std::string message;
};

template <typename F>
auto parse_flag(const std::string& flag, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError{flag, e.what()};
  }
}

std::vector<int> parse_int_list(const std::string& flag, const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError{flag, "'" + item + "' is not an integer"};
    }
  }
  if (out.empty()) throw UsageError{flag, "empty list"};
  return out;
}

FormType parse_form(const std::string& text) {
  if (text == "none" || text == "sl") return FormType::None;
  if (text == "symplectic" || text == "sp") return FormType::Symplectic;
  if (text == "orthogonal" || text == "so") return FormType::Orthogonal;
  throw UsageError{"--form", "expected none, symplectic or orthogonal, got '" + text + "'"};
}

json module_json(const ModuleDescriptor& d) {
  const auto support = form_type(d);
  return {{"descriptor", to_string(d)},
          {"dimension", dimension(d)},
          {"blocks", jordan_type(d).blocks()},
          {"symplectic", support.symplectic},
          {"orthogonal", support.orthogonal},
          {"completely_reducible", support.completely_reducible}};
}

struct Output {
  json envelope;
  std::string text;
  int code = kOk;
};

// ---------------------------------------------------------------------------
// Subcommands. Each fills `input` as soon as its flags are known, so error
// envelopes still echo them.

struct TensorArgs {
  int p = 0;
  std::string sizes;
  bool oracle = false;
};

Output run_tensor(const TensorArgs& a, json& input) {
  input = {{"p", a.p}, {"sizes", a.sizes}, {"method", a.oracle ? "oracle" : "formula"}};
  const auto sizes = parse_int_list("SIZES", a.sizes);
  const auto t = tensor_multi(sizes, a.p, a.oracle ? TensorMethod::Oracle : TensorMethod::Formula);
  Output o;
  o.envelope["result"] = {{"blocks", t.blocks()},
                          {"dimension", t.dimension()},
                          {"notation", to_block_notation(t)}};
  o.envelope["provenance"] = {"tensor products of Jordan blocks of an element of order p",
                              a.oracle ? "Kronecker product and rank sequence over GF(p)"
                                       : "closed-form decomposition"};
  std::string name;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    name += (i ? " (x) J" : "J") + std::to_string(sizes[i]);
  }
  o.text = name + " = " + to_block_notation(t) + "   " + to_string(t) + "\n";
  return o;
}

struct ModuleArgs {
  int p = 0;
  std::string descriptor;
  bool verify = false;
};

Output run_module(const ModuleArgs& a, json& input) {
  input = {{"p", a.p}, {"descriptor", a.descriptor}, {"verify", a.verify}};
  const auto d = parse_flag("DESCRIPTOR", [&] { return parse_descriptor(a.descriptor, a.p); });
  Output o;
  auto result = module_json(d);
  const auto type = jordan_type(d);
  std::string check;
  if (a.verify) {
    if (d.has_tilting()) {
      result["realized_blocks"] = nullptr;
      check = "not realizable (tilting summand)";
    } else {
      const auto realized = jordan_type_of_unipotent(realize(d));
      result["realized_blocks"] = realized.blocks();
      check = realized == type ? "matrix agrees" : "MATRIX DISAGREES: " + to_string(realized);
    }
  }
  o.envelope["result"] = result;
  o.envelope["provenance"] = {"Jordan types of SL2-modules in characteristic p"};
  std::ostringstream text;
  text << "module      " << to_string(d) << "\n"
       << "dimension   " << dimension(d) << "\n"
       << "Jordan type " << to_block_notation(type) << "   " << to_string(type) << "\n"
       << "forms       symplectic=" << (result["symplectic"].get<bool>() ? "yes" : "no")
       << " orthogonal=" << (result["orthogonal"].get<bool>() ? "yes" : "no")
       << " completely_reducible="
       << (result["completely_reducible"].get<bool>() ? "yes" : "no") << "\n";
  if (a.verify) text << "verify      " << check << "\n";
  o.text = text.str();
  return o;
}

struct ClassicalArgs {
  std::string family;
  int dim = 0;
  int p = 0;
  std::string partition;
};

struct ClassicalQuery {
  ClassicalGroup group;
  Partition lambda;
};

ClassicalQuery parse_classical(const ClassicalArgs& a) {
  auto g = parse_flag("--family", [&] { return ClassicalGroup::from_name(a.family, a.dim); });
  auto lambda = parse_flag("--partition", [&] { return parse_partition(a.partition); });
  return {g, lambda};
}

json witness_json(const WitnessPair& w) {
  return json::array({module_json(w.first), module_json(w.second)});
}

Output run_classical(const ClassicalArgs& a, json& input) {
  input = {{"family", a.family}, {"dim", a.dim}, {"p", a.p}, {"partition", a.partition}};
  const auto q = parse_classical(a);
  const auto v = unicity_verdict(q.group, q.lambda, a.p);
  Output o;
  json result = {{"group", q.group.name()},
                 {"partition", q.lambda.parts()},
                 {"verdict", to_string(v.kind)},
                 {"reason", v.reason}};
  result["witnesses"] = v.witnesses ? witness_json(*v.witnesses) : json(nullptr);
  o.envelope["result"] = result;
  o.envelope["provenance"] = {"classical unicity table by Jordan blocks on the natural module"};
  if (v.kind == Verdict::Kind::OutOfScope) o.code = kDomainError;

  std::ostringstream text;
  text << q.group.name() << "  (" << to_string(q.lambda) << ")  p = " << a.p << "\n"
       << "verdict  " << to_string(v.kind) << "\n"
       << "reason   " << v.reason << "\n";
  if (v.witnesses) {
    text << "witness  " << to_string(v.witnesses->first) << "\n"
         << "witness  " << to_string(v.witnesses->second) << "\n";
  }
  o.text = text.str();
  return o;
}

Output run_witnesses(const ClassicalArgs& a, json& input) {
  input = {{"family", a.family}, {"dim", a.dim}, {"p", a.p}, {"partition", a.partition}};
  const auto q = parse_classical(a);
  const auto w = witnesses(q.group, q.lambda, a.p);
  Output o;
  o.envelope["result"] = {{"group", q.group.name()},
                          {"partition", q.lambda.parts()},
                          {"witnesses", witness_json(w)}};
  o.envelope["provenance"] = {"explicit pairs of non-isomorphic modules with equal Jordan blocks"};
  std::ostringstream text;
  for (const auto* d : {&w.first, &w.second}) {
    text << to_string(*d) << "   " << to_block_notation(jordan_type(*d)) << "\n";
  }
  o.text = text.str();
  return o;
}

struct ExceptionalArgs {
  std::string group;
  int p = 0;
  std::optional<std::string> label;
  std::optional<std::string> atlas_file;
};

Output run_exceptional(const ExceptionalArgs& a, json& input) {
  input = {{"group", a.group}, {"p", a.p}};
  input["label"] = a.label ? json(*a.label) : json(nullptr);
  if (a.atlas_file) input["atlas"] = *a.atlas_file;
  const auto g = parse_flag("--group", [&] { return exceptional_from_name(a.group); });
  std::optional<Atlas> custom;
  if (a.atlas_file) custom = Atlas::load(*a.atlas_file);
  const Atlas& atlas = custom ? *custom : Atlas::builtin();

  Output o;
  o.envelope["provenance"] = {"exceptional unicity table by Bala-Carter label"};
  if (a.label) {
    const auto v = atlas.verdict(g, a.p, *a.label);
    o.envelope["result"] = {{"group", to_string(g)},
                            {"label", normalize_label(*a.label)},
                            {"verdict", to_string(v.kind)},
                            {"note", v.note}};
    if (v.kind == AtlasVerdict::Kind::BadPrime || v.kind == AtlasVerdict::Kind::UnknownLabel) {
      o.code = kDomainError;
    }
    o.text = std::string(to_string(g)) + "  " + normalize_label(*a.label) + "  p = " +
             std::to_string(a.p) + "\nverdict  " + std::string(to_string(v.kind)) +
             "\nnote     " + v.note + "\n";
    return o;
  }
  const auto labels = atlas.list_unique(g, a.p);
  o.envelope["result"] = {{"group", to_string(g)}, {"unique", labels}};
  o.text = "classes with a unique A1-subgroup class, " + std::string(to_string(g)) +
           " p = " + std::to_string(a.p) + ":\n";
  for (const auto& l : labels) o.text += "  " + l + "\n";
  return o;
}

struct EnumerateArgs {
  std::string form;
  int p = 0;
  int dim = 0;
  std::string partition;
  int max_twist = 3;
  bool pairwise_distinct = false;
};

Output run_enumerate(const EnumerateArgs& a, json& input) {
  input = {{"form", a.form},           {"p", a.p},
           {"dim", a.dim},             {"partition", a.partition},
           {"max_twist", a.max_twist}, {"pairwise_distinct", a.pairwise_distinct}};
  const auto form = parse_form(a.form);
  const auto lambda = parse_flag("--partition", [&] { return parse_partition(a.partition); });
  SummandRestrictions restrictions;
  if (a.pairwise_distinct) restrictions = {false, 1};
  const auto r = enumerate(form, a.dim, lambda, a.p, a.max_twist, restrictions);

  std::vector<std::string> classes;
  for (const auto& c : r.classes) classes.push_back(to_string(c.descriptor));
  Output o;
  o.envelope["result"] = {{"classes", classes},
                          {"count", r.count},
                          {"growth_flag", r.growth_flag},
                          {"max_twist", r.max_twist}};
  o.envelope["provenance"] = {"exhaustive search over completely reducible module structures"};
  std::ostringstream text;
  text << r.count << " class(es) with twists <= " << r.max_twist
       << (r.growth_flag ? " (count grows with the twist bound)" : "") << "\n";
  for (const auto& c : classes) text << "  " << c << "\n";
  o.text = text.str();
  return o;
}

struct SelfcheckArgs {
  bool serial = false;
};

Output run_selfcheck_command(const SelfcheckArgs& a, json& input) {
  input = {{"serial", a.serial}};
  const auto results = run_selfcheck(!a.serial);
  json rows = json::array();
  std::ostringstream text;
  bool all = true;
  for (const auto& r : results) {
    rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    text << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  [" << r.detail
         << "]\n";
    all = all && r.passed;
  }
  Output o;
  o.envelope["result"] = {{"criteria", rows}, {"all_passed", all}};
  o.envelope["provenance"] = {"oracle cross-validation suites"};
  o.text = text.str();
  if (!all) o.code = kDomainError;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unipotent elements of order p and the A1-subgroups containing them"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON envelope instead of text");

  TensorArgs tensor_args;
  auto* tensor = app.add_subcommand("tensor", "Jordan type of J(m1) (x) J(m2) (x) ...");
  tensor->fallthrough();
  tensor->add_option("-p,--p", tensor_args.p, "Prime")->required();
  tensor->add_option("SIZES", tensor_args.sizes, "Comma-separated block sizes, e.g. 2,5")
      ->required();
  tensor->add_flag("--oracle", tensor_args.oracle, "Use the GF(p) matrix oracle");

  ModuleArgs module_args;
  auto* module = app.add_subcommand("module", "Dimension, Jordan type and forms of a module");
  module->fallthrough();
  module->add_option("-p,--p", module_args.p, "Prime")->required();
  module->add_option("DESCRIPTOR", module_args.descriptor,
                     "e.g. 'L(1)*L(3)@1+2*L(2)+W(6)+T(7)+3*triv'")
      ->required();
  module->add_flag("--verify", module_args.verify,
                   "Also build the matrix over GF(p) and compute its Jordan type");

  auto* classify = app.add_subcommand("classify", "Unicity verdicts");
  classify->fallthrough();
  classify->require_subcommand(1);

  ClassicalArgs classical_args;
  auto* classical = classify->add_subcommand("classical", "SL, Sp or SO by Jordan blocks");
  classical->fallthrough();
  classical->add_option("--family", classical_args.family, "A|SL, C|Sp, B|D|SO")->required();
  classical->add_option("--dim", classical_args.dim, "Natural module dimension")->required();
  classical->add_option("--p", classical_args.p, "Prime")->required();
  classical->add_option("--partition", classical_args.partition, "Descending, e.g. 6,1,1,1,1")
      ->required();

  ExceptionalArgs exceptional_args;
  auto* exceptional = classify->add_subcommand("exceptional", "G2, F4, E6, E7, E8 by class label");
  exceptional->fallthrough();
  exceptional->add_option("--group", exceptional_args.group, "G2, F4, E6, E7 or E8")->required();
  exceptional->add_option("--p", exceptional_args.p, "Prime")->required();
  exceptional->add_option("--label", exceptional_args.label,
                          "Bala-Carter label; omit to list the unique classes");
  exceptional->add_option("--atlas", exceptional_args.atlas_file,
                          "Table file to use instead of the built-in one")
      ->check(CLI::ExistingFile);

  EnumerateArgs enumerate_args;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "Completely reducible module structures with given blocks");
  enumerate_cmd->fallthrough();
  enumerate_cmd->add_option("--form", enumerate_args.form, "none, symplectic or orthogonal")
      ->required();
  enumerate_cmd->add_option("--p", enumerate_args.p, "Prime")->required();
  enumerate_cmd->add_option("--dim", enumerate_args.dim, "Dimension")->required();
  enumerate_cmd->add_option("--partition", enumerate_args.partition, "Descending Jordan blocks")
      ->required();
  enumerate_cmd->add_option("--max-twist", enumerate_args.max_twist, "Largest Frobenius twist")
      ->capture_default_str();
  enumerate_cmd->add_flag("--pairwise-distinct", enumerate_args.pairwise_distinct,
                          "Only sums of pairwise inequivalent irreducibles");

  ClassicalArgs witness_args;
  auto* witness = app.add_subcommand("witnesses", "Two non-conjugate A1-subgroups through u");
  witness->fallthrough();
  witness->add_option("--family", witness_args.family, "A|SL, C|Sp, B|D|SO")->required();
  witness->add_option("--dim", witness_args.dim, "Natural module dimension")->required();
  witness->add_option("--p", witness_args.p, "Prime")->required();
  witness->add_option("--partition", witness_args.partition, "Descending Jordan blocks")
      ->required();

  SelfcheckArgs selfcheck_args;
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the cross-validation suites");
  selfcheck->fallthrough();
  selfcheck->add_flag("--serial", selfcheck_args.serial, "Run suites one after another");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  std::string command;
  json input = json::object();
  Output out;
  try {
    if (tensor->parsed()) {
      command = "tensor";
      out = run_tensor(tensor_args, input);
    } else if (module->parsed()) {
      command = "module";
      out = run_module(module_args, input);
    } else if (classical->parsed()) {
      command = "classify classical";
      out = run_classical(classical_args, input);
    } else if (exceptional->parsed()) {
      command = "classify exceptional";
      out = run_exceptional(exceptional_args, input);
    } else if (enumerate_cmd->parsed()) {
      command = "enumerate";
      out = run_enumerate(enumerate_args, input);
    } else if (witness->parsed()) {
      command = "witnesses";
      out = run_witnesses(witness_args, input);
    } else {
      command = "selfcheck";
      out = run_selfcheck_command(selfcheck_args, input);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.flag << ": " << e.message << "\n";
    return kUsageError;
  } catch (const Error& e) {
    if (as_json) {
      json env = {{"command", command},
                  {"input", input},
                  {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
      std::cout << env.dump(2) << "\n";
    } else {
      std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    }
    return kDomainError;
  }

  if (as_json) {
    out.envelope["command"] = command;
    out.envelope["input"] = input;
    std::cout << out.envelope.dump(2) << "\n";
  } else {
    std::cout << out.text;
  }
  return out.code;
}
