#include "luk/printer.hpp"

namespace luk {

namespace {

// Binding strength; larger binds tighter.
constexpr int kImplies = 1;
constexpr int kWeak = 2;
constexpr int kStrict = 3;
constexpr int kUnary = 4;
constexpr int kPrimary = 5;

const char* symbol(Connective c) {
  switch (c) {
    case Connective::Implies: return " -> ";
    case Connective::And: return " /\\ ";
    case Connective::Or: return " \\/ ";
    case Connective::StrictAnd: return " & ";
    case Connective::StrictOr: return " |+| ";
    case Connective::Not: return "~";
  }
  return "?";
}

int level(Connective c) {
  switch (c) {
    case Connective::Implies: return kImplies;
    case Connective::And:
    case Connective::Or: return kWeak;
    default: return kStrict;
  }
}

// A quantifier extends as far right as possible, so it can only be printed
// bare when nothing follows it in the enclosing context (`open_right`).
int level(const Formula& f, bool open_right) {
  switch (f.kind()) {
    case Formula::Kind::Binary: return level(f.connective());
    case Formula::Kind::Not: return kUnary;
    case Formula::Kind::Quantified: return open_right ? kPrimary : 0;
    default: return kPrimary;
  }
}

void emit(const Formula& f, bool open_right, std::string& out);

void emit_at(const Formula& f, int min_level, bool open_right, std::string& out) {
  if (level(f, open_right) < min_level) {
    out += '(';
    emit(f, true, out);
    out += ')';
  } else {
    emit(f, open_right, out);
  }
}

void emit(const Formula& f, bool open_right, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::True: out += "true"; return;
    case Formula::Kind::False: out += "false"; return;
    case Formula::Kind::Atom:
      out += f.relation();
      if (!f.args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ',';
          out += print(f.args()[i]);
        }
        out += ')';
      }
      return;
    case Formula::Kind::Not:
      out += '~';
      emit_at(f.operand(), kUnary, open_right, out);
      return;
    case Formula::Kind::Binary: {
      const int l = level(f.connective());
      if (f.connective() == Connective::Implies) {
        emit_at(f.lhs(), l + 1, false, out);
        out += symbol(f.connective());
        emit_at(f.rhs(), l, open_right, out);
      } else {
        emit_at(f.lhs(), l, false, out);
        out += symbol(f.connective());
        emit_at(f.rhs(), l + 1, open_right, out);
      }
      return;
    }
    case Formula::Kind::Quantified:
      out += f.quantifier() == Quantifier::Forall ? "forall " : "exists ";
      out += f.variable();
      out += ". ";
      emit(f.body(), true, out);
      return;
  }
}

}  // namespace

std::string print(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Variable:
    case Term::Kind::Constant: return t.name;
    case Term::Kind::Element: return "#" + std::to_string(t.element);
    case Term::Kind::Apply: {
      std::string out = t.name + "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ',';
        out += print(t.args[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

std::string print(const Formula& f) {
  std::string out;
  emit(f, true, out);
  return out;
}

}  // namespace luk
