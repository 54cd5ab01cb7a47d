#include "a1u/sl2_module.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <tuple>

namespace a1u {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<int> block_sizes(const IrreducibleDescriptor& m) {
  std::vector<int> sizes;
  for (const auto& f : m.factors()) sizes.push_back(f.weight + 1);
  return sizes;
}

JordanType irreducible_type(const IrreducibleDescriptor& m, int p) {
  const auto sizes = block_sizes(m);
  return tensor_multi(sizes, p);
}

void check_extended_weight(int c, int p, std::string_view what) {
  if (c < p || c > 2 * p - 2) {
    throw Error(ErrorCode::WeightOutOfRange,
                std::string(what) + "(" + std::to_string(c) + ") needs weight in [" +
                    std::to_string(p) + ", " + std::to_string(2 * p - 2) + "]");
  }
}

}  // namespace

IrreducibleDescriptor::IrreducibleDescriptor(std::vector<IrreducibleFactor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::ParseError, "irreducible with no factors");
  std::sort(factors_.begin(), factors_.end(),
            [](const auto& a, const auto& b) { return a.twist < b.twist; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].twist < 0) throw Error(ErrorCode::ParseError, "negative Frobenius twist");
    if (i > 0 && factors_[i].twist == factors_[i - 1].twist) {
      throw Error(ErrorCode::DuplicateTwist,
                  "two factors with twist " + std::to_string(factors_[i].twist));
    }
  }
}

int IrreducibleDescriptor::dimension() const noexcept {
  int d = 1;
  for (const auto& f : factors_) d *= f.weight + 1;
  return d;
}

int IrreducibleDescriptor::weight_sum() const noexcept {
  int s = 0;
  for (const auto& f : factors_) s += f.weight;
  return s;
}

int IrreducibleDescriptor::min_twist() const noexcept { return factors_.front().twist; }
int IrreducibleDescriptor::max_twist() const noexcept { return factors_.back().twist; }

std::vector<int> IrreducibleDescriptor::weights() const {
  std::vector<int> w;
  for (const auto& f : factors_) w.push_back(f.weight);
  return w;
}

IrreducibleDescriptor IrreducibleDescriptor::shifted(int delta) const {
  auto factors = factors_;
  for (auto& f : factors) f.twist += delta;
  return IrreducibleDescriptor(std::move(factors));
}

void IrreducibleDescriptor::validate(int p) const {
  for (const auto& f : factors_) {
    if (f.weight < 1 || f.weight > p - 1) {
      throw Error(ErrorCode::WeightNotRestricted,
                  "L(" + std::to_string(f.weight) + ") is not a restricted weight in 1.." +
                      std::to_string(p - 1));
    }
  }
}

int dimension(const Summand& s, int p) {
  return std::visit(overloaded{
                        [](const IrrSummand& x) { return x.module.dimension(); },
                        [](const DoubledSummand& x) { return 2 * x.module.dimension(); },
                        [](const WeylSummand& x) { return x.weight + 1; },
                        [p](const TiltingSummand&) { return 2 * p; },
                        [](const TrivialSummand& x) { return x.multiplicity; },
                    },
                    s);
}

JordanType jordan_type(const Summand& s, int p) {
  return std::visit(overloaded{
                        [p](const IrrSummand& x) { return irreducible_type(x.module, p); },
                        [p](const DoubledSummand& x) {
                          const auto t = irreducible_type(x.module, p);
                          return t + t;
                        },
                        [p](const WeylSummand& x) { return JordanType(p, {p, x.weight - p + 1}); },
                        [p](const TiltingSummand&) { return JordanType(p, {p, p}); },
                        [p](const TrivialSummand& x) {
                          return JordanType::trivial(p, x.multiplicity);
                        },
                    },
                    s);
}

std::string to_string(const IrreducibleDescriptor& m) {
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += "L(" + std::to_string(f.weight) + ")";
    if (f.twist != 0) out += "@" + std::to_string(f.twist);
  }
  return out;
}

std::string to_string(const Summand& s) {
  return std::visit(overloaded{
                        [](const IrrSummand& x) { return to_string(x.module); },
                        [](const DoubledSummand& x) { return "2*" + to_string(x.module); },
                        [](const WeylSummand& x) { return "W(" + std::to_string(x.weight) + ")"; },
                        [](const TiltingSummand& x) {
                          return "T(" + std::to_string(x.weight) + ")";
                        },
                        [](const TrivialSummand& x) {
                          return x.multiplicity == 1 ? std::string("triv")
                                                     : std::to_string(x.multiplicity) + "*triv";
                        },
                    },
                    s);
}

ModuleDescriptor::ModuleDescriptor(int p, std::vector<Summand> summands)
    : p_(p), summands_(std::move(summands)) {
  static_cast<void>(PrimeField{p});
  if (summands_.empty()) throw Error(ErrorCode::ParseError, "module with no summands");
  for (const auto& s : summands_) {
    std::visit(overloaded{
                   [p](const IrrSummand& x) { x.module.validate(p); },
                   [p](const DoubledSummand& x) { x.module.validate(p); },
                   [p](const WeylSummand& x) { check_extended_weight(x.weight, p, "W"); },
                   [p](const TiltingSummand& x) { check_extended_weight(x.weight, p, "T"); },
                   [](const TrivialSummand& x) {
                     if (x.multiplicity < 1) {
                       throw Error(ErrorCode::ParseError, "trivial multiplicity must be positive");
                     }
                   },
               },
               s);
  }
}

bool ModuleDescriptor::has_weyl_or_tilting() const noexcept {
  return std::any_of(summands_.begin(), summands_.end(), [](const Summand& s) {
    return std::holds_alternative<WeylSummand>(s) || std::holds_alternative<TiltingSummand>(s);
  });
}

bool ModuleDescriptor::has_tilting() const noexcept {
  return std::any_of(summands_.begin(), summands_.end(),
                     [](const Summand& s) { return std::holds_alternative<TiltingSummand>(s); });
}

bool summand_display_less(const Summand& a, const Summand& b, int p) {
  auto key = [p](const Summand& s) {
    const bool trivial = std::holds_alternative<TrivialSummand>(s);
    std::vector<int> weights, twists;
    std::visit(overloaded{
                   [&](const IrrSummand& x) {
                     weights = x.module.weights();
                     for (const auto& f : x.module.factors()) twists.push_back(f.twist);
                   },
                   [&](const DoubledSummand& x) {
                     weights = x.module.weights();
                     for (const auto& f : x.module.factors()) twists.push_back(f.twist);
                   },
                   [&](const WeylSummand& x) { weights = {x.weight}; },
                   [&](const TiltingSummand& x) { weights = {x.weight}; },
                   [](const TrivialSummand&) {},
               },
               s);
    return std::make_tuple(trivial, -dimension(s, p), s.index(), weights, twists);
  };
  return key(a) < key(b);
}

ModuleDescriptor ModuleDescriptor::normalized() const {
  std::vector<Summand> out;
  int trivial = 0;
  for (const auto& s : summands_) {
    if (const auto* t = std::get_if<TrivialSummand>(&s)) {
      trivial += t->multiplicity;
    } else {
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(),
            [this](const Summand& a, const Summand& b) { return summand_display_less(a, b, p_); });
  if (trivial > 0) out.push_back(TrivialSummand{trivial});
  return ModuleDescriptor(p_, std::move(out));
}

int dimension(const ModuleDescriptor& d) {
  int total = 0;
  for (const auto& s : d.summands()) total += dimension(s, d.p());
  return total;
}

JordanType jordan_type(const ModuleDescriptor& d) {
  JordanType total(d.p(), {});
  for (const auto& s : d.summands()) total = total + jordan_type(s, d.p());
  return total;
}

std::string_view to_string(FormType f) {
  switch (f) {
    case FormType::None: return "none";
    case FormType::Symplectic: return "symplectic";
    case FormType::Orthogonal: return "orthogonal";
  }
  return "none";
}

FormType intrinsic_form(const IrreducibleDescriptor& m) {
  return m.weight_sum() % 2 == 1 ? FormType::Symplectic : FormType::Orthogonal;
}

FormSupport form_type(const ModuleDescriptor& d) {
  FormSupport total{true, true, true};
  for (const auto& s : d.summands()) {
    FormSupport part = std::visit(
        overloaded{
            [](const IrrSummand& x) {
              const bool sp = intrinsic_form(x.module) == FormType::Symplectic;
              return FormSupport{sp, !sp, true};
            },
            [](const DoubledSummand&) { return FormSupport{true, true, true}; },
            [](const WeylSummand&) { return FormSupport{false, false, false}; },
            [](const TiltingSummand& x) {
              const bool sp = x.weight % 2 == 1;
              return FormSupport{sp, !sp, false};
            },
            [](const TrivialSummand& x) {
              return FormSupport{x.multiplicity % 2 == 0, true, true};
            },
        },
        s);
    total.symplectic = total.symplectic && part.symplectic;
    total.orthogonal = total.orthogonal && part.orthogonal;
    total.completely_reducible = total.completely_reducible && part.completely_reducible;
  }
  return total;
}

bool admissible_in(const ModuleDescriptor& d, FormType ambient) {
  switch (ambient) {
    case FormType::None: return true;
    case FormType::Symplectic: return form_type(d).symplectic;
    case FormType::Orthogonal: return form_type(d).orthogonal;
  }
  return false;
}

Matrix realize(const ModuleDescriptor& d) {
  if (d.has_tilting()) {
    throw Error(ErrorCode::NotRealizable, "tilting summands carry no matrix model");
  }
  const PrimeField field(d.p());
  const std::int64_t u_entries[] = {1, 1, 0, 1};
  const Matrix u(field, 2, 2, u_entries);

  // The image of u has entries in the prime field, so Frobenius twists act
  // trivially on it and every factor is realized untwisted.
  auto irreducible = [&](const IrreducibleDescriptor& m) {
    Matrix acc = Matrix::identity(field, 1);
    for (const auto& f : m.factors()) {
      acc = kronecker(acc, sym_power(u, static_cast<std::size_t>(f.weight)));
    }
    return acc;
  };

  std::vector<Matrix> blocks;
  for (const auto& s : d.summands()) {
    std::visit(overloaded{
                   [&](const IrrSummand& x) { blocks.push_back(irreducible(x.module)); },
                   [&](const DoubledSummand& x) {
                     auto m = irreducible(x.module);
                     blocks.push_back(m);
                     blocks.push_back(std::move(m));
                   },
                   [&](const WeylSummand& x) {
                     blocks.push_back(sym_power(u, static_cast<std::size_t>(x.weight)));
                   },
                   [](const TiltingSummand&) {},
                   [&](const TrivialSummand& x) {
                     blocks.push_back(
                         Matrix::identity(field, static_cast<std::size_t>(x.multiplicity)));
                   },
               },
               s);
  }
  return direct_sum(blocks);
}

namespace {

class DescriptorParser {
 public:
  DescriptorParser(std::string_view text, int p) : p_(p) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  ModuleDescriptor parse() {
    std::vector<Summand> summands;
    summands.push_back(summand());
    while (accept('+')) summands.push_back(summand());
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return ModuleDescriptor(p_, std::move(summands));
  }

 private:
  Summand summand() {
    if (accept_word("triv")) return TrivialSummand{1};
    if (accept_word("W(")) return WeylSummand{closing_int()};
    if (accept_word("T(")) return TiltingSummand{closing_int()};
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int n = integer();
      expect('*');
      if (accept_word("triv")) {
        if (n < 1) fail("trivial multiplicity must be positive");
        return TrivialSummand{n};
      }
      if (n != 2) fail("only 2*<irreducible> (a doubled summand) is allowed");
      return DoubledSummand{irreducible()};
    }
    return IrrSummand{irreducible()};
  }

  IrreducibleDescriptor irreducible() {
    std::vector<IrreducibleFactor> factors{factor()};
    while (accept('*')) factors.push_back(factor());
    return IrreducibleDescriptor(std::move(factors));
  }

  IrreducibleFactor factor() {
    if (!accept_word("L(")) fail("expected L(<weight>)");
    IrreducibleFactor f{closing_int(), 0};
    if (accept('@')) f.twist = integer();
    return f;
  }

  int closing_int() {
    const int v = integer();
    expect(')');
    return v;
  }

  int integer() {
    int value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    if (std::string_view(text_).substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError,
                "descriptor parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  int p_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

ModuleDescriptor parse_descriptor(std::string_view text, int p) {
  return DescriptorParser(text, p).parse();
}

std::string to_string(const ModuleDescriptor& d) {
  std::string out;
  for (const auto& s : d.summands()) {
    if (!out.empty()) out += '+';
    out += to_string(s);
  }
  return out;
}

}  // namespace a1u
