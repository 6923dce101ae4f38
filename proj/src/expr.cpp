#include "toroidal/expr.hpp"

#include <cctype>
#include <memory>
#include <optional>

#include "toroidal/pbw.hpp"

namespace tor {

ExprError::ExprError(const std::string& msg, std::size_t position)
    : std::runtime_error("at position " + std::to_string(position) + ": " + msg), pos_(position) {}

namespace {

struct Value {
  enum Kind { Scalar, Elem, Vec };
  Kind kind = Scalar;
  ParamPoly s{1};
  TorElem x;
  ModVec v;
};

const char* kind_name(Value::Kind k) {
  switch (k) {
    case Value::Scalar: return "scalar";
    case Value::Elem: return "algebra element";
    case Value::Vec: return "module vector";
  }
  return "?";
}

class Parser {
 public:
  Parser(const Toroidal& T, const std::string& text) : T_(T), s_(text) {}

  Value parse() {
    Value v = expr();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return v;
  }

  std::string print(const Value& v) const {
    switch (v.kind) {
      case Value::Scalar: return v.s.str();
      case Value::Elem: return T_.str_dtilde(v.x);
      case Value::Vec: return v.v.is_zero() ? "0" : module().str(v.v);
    }
    return "";
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::optional<std::size_t> at = std::nullopt) const {
    throw ExprError(msg, at.value_or(p_));
  }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }

  bool accept(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip();
    const std::size_t b = p_;
    while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
    return s_.substr(b, p_ - b);
  }

  long long integer() {
    skip();
    const std::size_t b = p_;
    bool neg = false;
    if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) neg = s_[p_++] == '-';
    skip();
    const std::size_t d = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (d == p_) fail("expected an integer", b);
    if (p_ - d > 9) fail("integer too large", d);
    const long long v = std::stoll(s_.substr(d, p_ - d));
    return neg ? -v : v;
  }

  int label() {
    skip();
    if (p_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[p_])) || s_[p_] == '-')) {
      const std::size_t b = p_;
      const long long u = integer();
      if (u < 0 || u >= T_.g().dim()) fail("basis index out of range", b);
      return static_cast<int>(u);
    }
    const std::size_t b = p_;
    const std::string name = ident();
    auto u = T_.g().index_of(name);
    if (!u) fail("unknown basis label '" + name + "'", b);
    return *u;
  }

  std::vector<int> int_args(int n) {
    expect('(');
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
      if (i > 0) expect(',');
      out.push_back(static_cast<int>(integer()));
    }
    expect(')');
    return out;
  }

  Value elem(TorElem x) {
    Value v;
    v.kind = Value::Elem;
    v.x = std::move(x);
    return v;
  }

  const InducedModule& module() const {
    if (!M_) M_ = std::make_unique<InducedModule>(T_, BaseModule::vacuum());
    return *M_;
  }

  Value expr() {
    Value acc = term();
    while (true) {
      skip();
      const std::size_t at = p_;
      int sign = 0;
      if (accept('+')) sign = 1;
      else if (accept('-')) sign = -1;
      if (sign == 0) return acc;
      Value t = term();
      if (t.kind != acc.kind)
        fail(std::string("cannot add ") + kind_name(acc.kind) + " and " + kind_name(t.kind), at);
      const ParamPoly c(sign);
      switch (acc.kind) {
        case Value::Scalar: acc.s += c * t.s; break;
        case Value::Elem: acc.x += c * t.x; break;
        case Value::Vec: acc.v += c * t.v; break;
      }
    }
  }

  Value term() {
    ParamPoly scale(accept('-') ? -1 : 1);
    std::optional<Value> body;
    do {
      skip();
      const std::size_t at = p_;
      Value f = factor();
      if (f.kind == Value::Scalar) {
        scale *= f.s;
      } else if (body) {
        fail("product of two non-scalar factors", at);
      } else {
        body = std::move(f);
      }
    } while (accept('*'));
    if (!body) {
      Value v;
      v.s = scale;
      return v;
    }
    if (body->kind == Value::Elem) body->x = scale * body->x;
    else body->v = scale * body->v;
    return *body;
  }

  Value factor() {
    skip();
    if (p_ >= s_.size()) fail("unexpected end of input");
    const char ch = s_[p_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const long long num = integer();
      long long den = 1;
      if (accept('/')) {
        const std::size_t at = p_;
        den = integer();
        if (den == 0) fail("zero denominator", at);
      }
      Value v;
      v.s = ParamPoly(Rational(num, den));
      return v;
    }
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    const std::size_t at = p_;
    const std::string name = ident();
    if (name.empty()) fail("unexpected '" + std::string(1, ch) + "'");
    if (name == "bracket") {
      expect('[');
      Value a = expr();
      expect(',');
      Value b = expr();
      expect(']');
      if (a.kind != Value::Elem || b.kind != Value::Elem) fail("bracket needs two algebra elements", at);
      return elem(T_.bracket(a.x, b.x));
    }
    if (name == "act") {
      expect('(');
      Value a = expr();
      expect(',');
      Value b = expr();
      expect(')');
      if (a.kind != Value::Elem || b.kind != Value::Vec) fail("act needs an algebra element and a module vector", at);
      Value v;
      v.kind = Value::Vec;
      try {
        v.v = module().act(a.x, b.v);
      } catch (const std::invalid_argument& e) {
        fail(std::string("membership violation: ") + e.what(), at);
      }
      return v;
    }
    if (name == "vac") {
      Value v;
      v.kind = Value::Vec;
      v.v = module().base_vector();
      return v;
    }
    if (name == "k0") return elem(k0());
    if (name == "k1") return elem(k1());
    if (name == "loop") {
      expect('(');
      const int m0 = static_cast<int>(integer());
      expect(',');
      const int m1 = static_cast<int>(integer());
      expect(',');
      const int u = label();
      expect(')');
      return elem(loop(m0, m1, u));
    }
    if (name == "kmn") {
      auto a = int_args(2);
      return elem(kmn(a[0], a[1]));
    }
    if (name == "der") {
      auto a = int_args(3);
      if (a[2] != 0 && a[2] != 1) fail("derivation index must be 0 or 1", at);
      return elem(der(a[0], a[1], a[2]));
    }
    if (name == "dtilde") {
      auto a = int_args(2);
      return elem(dtilde(a[0], a[1]));
    }
    if (name == "dbar") {
      auto a = int_args(2);
      return elem(dbar(a[0], a[1]));
    }
    if (name == "dvar") {
      auto a = int_args(2);
      return elem(dvar(a[0], a[1], T_.mu()));
    }
    if (auto var = var_from_name(name)) {
      Value v;
      v.s = ParamPoly::var(*var);
      return v;
    }
    fail("unknown name '" + name + "'", at);
  }

  const Toroidal& T_;
  const std::string& s_;
  std::size_t p_ = 0;
  mutable std::unique_ptr<InducedModule> M_;
};

}  // namespace

std::string eval_expr(const Toroidal& T, const std::string& text) {
  Parser p(T, text);
  return p.print(p.parse());
}

}  // namespace tor
