#include "liesym/parse.hpp"

#include <cctype>
#include <cstdint>
#include <utility>

#include "liesym/errors.hpp"

namespace liesym {

namespace {

struct Tok {
  enum Kind { Int, Gen, LBrack, RBrack, LParen, RParen, Comma, Plus, Minus, Star, Caret,
              Slash, End } kind;
  std::string text;   // digits for Int, index digits for Gen
  int line = 1;
  int col = 1;
};

[[noreturn]] void fail_at(const std::string& msg, const Tok& t) {
  throw ParseError(msg, t.line, t.col);
}

std::vector<Tok> lex(const std::string& s) {
  std::vector<Tok> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto digits = [&]() {
    std::string d;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      d += s[i++];
      ++col;
    }
    return d;
  };
  while (i < s.size()) {
    const char ch = s[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    Tok t;
    t.line = line;
    t.col = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      t.kind = Tok::Int;
      t.text = digits();
      out.push_back(std::move(t));
      continue;
    }
    if (ch == 'x' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
      ++i;
      ++col;
      t.kind = Tok::Gen;
      t.text = digits();
      out.push_back(std::move(t));
      continue;
    }
    switch (ch) {
      case '[': t.kind = Tok::LBrack; break;
      case ']': t.kind = Tok::RBrack; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case ',': t.kind = Tok::Comma; break;
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '^': t.kind = Tok::Caret; break;
      case '/': t.kind = Tok::Slash; break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }
    t.text = ch;
    ++i;
    ++col;
    out.push_back(std::move(t));
  }
  Tok end;
  end.kind = Tok::End;
  end.line = line;
  end.col = col;
  out.push_back(std::move(end));
  return out;
}

long long small_int(const Tok& t, long long max) {
  if (t.text.size() > 18) fail_at("integer literal too large", t);
  const long long v = std::stoll(t.text);
  if (v > max) fail_at("integer literal too large here", t);
  return v;
}

class Cursor {
 public:
  explicit Cursor(const std::vector<Tok>& toks) : toks_(toks) {}
  const Tok& peek(size_t ahead = 0) const {
    const size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Tok& get() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  const Tok& expect(Tok::Kind k, const char* what) {
    if (peek().kind != k) fail_at(std::string("expected ") + what, peek());
    return get();
  }

 private:
  const std::vector<Tok>& toks_;
  size_t pos_ = 0;
};

Rational parse_rat(Cursor& cur) {
  const Tok& numtok = cur.expect(Tok::Int, "a number");
  mpz_class num(numtok.text);
  if (cur.peek().kind == Tok::Slash) {
    cur.get();
    const Tok& dentok = cur.expect(Tok::Int, "a denominator");
    mpz_class den(dentok.text);
    if (den == 0) fail_at("zero denominator", dentok);
    return Rational(mpq_class(num, den));
  }
  return Rational(std::move(num));
}

// Algebra adapters: the grammar is shared, evaluation differs per variety.
struct MetAdapter {
  using Elem = MetabelianElement;
  AlgebraSpec spec;
  int rank() const { return spec.rank; }
  Elem zero() const { return MetabelianElement::zero(spec); }
  Elem gen(int i) const { return MetabelianElement::generator(spec, i); }
  Elem bracket_op(const Elem& a, const Elem& b) const { return bracket(a, b); }
  bool has_linear(const Elem& e) const { return !e.in_commutator_ideal(); }
  Elem act_tail(const Elem& e, const std::vector<std::pair<int, int>>& powers) const {
    ExponentVector ev(static_cast<size_t>(spec.rank), 0);
    for (auto [v, p] : powers) ev[v - 1] += static_cast<uint32_t>(p);
    return module_act(e, CommPoly::monomial(spec.rank, std::move(ev), Rational(1)));
  }
};

struct FreeAdapter {
  using Elem = FreeLieElement;
  int n;
  int rank() const { return n; }
  Elem zero() const { return FreeLieElement::zero(n); }
  Elem gen(int i) const { return FreeLieElement::generator(n, i); }
  Elem bracket_op(const Elem& a, const Elem& b) const { return free_bracket(a, b); }
  bool has_linear(const Elem& e) const { return !e.degree_slice(1).is_zero(); }
  // No commutative action in the free algebra; bracket on the right in
  // written order instead.
  Elem act_tail(Elem e, const std::vector<std::pair<int, int>>& powers) const {
    for (auto [v, p] : powers)
      for (int k = 0; k < p; ++k) e = free_bracket(e, gen(v));
    return e;
  }
};

template <class A>
class LieParser {
 public:
  LieParser(const A& alg, Cursor& cur) : alg_(alg), cur_(cur) {}

  static bool starts_factor(Tok::Kind k) {
    return k == Tok::Gen || k == Tok::LBrack || k == Tok::LParen;
  }

  typename A::Elem expr() {
    typename A::Elem acc = alg_.zero();
    bool negate = false;
    if (cur_.peek().kind == Tok::Minus) {
      cur_.get();
      negate = true;
    }
    acc += scaled_term(negate);
    while (cur_.peek().kind == Tok::Plus || cur_.peek().kind == Tok::Minus) {
      const bool minus = cur_.get().kind == Tok::Minus;
      acc += scaled_term(minus);
    }
    return acc;
  }

 private:
  typename A::Elem scaled_term(bool negate) {
    Rational coeff(negate ? -1 : 1);
    if (cur_.peek().kind == Tok::Int) {
      coeff *= parse_rat(cur_);
      if (cur_.peek().kind == Tok::Star) {
        cur_.get();
      } else if (coeff.is_zero() && !starts_factor(cur_.peek().kind)) {
        // a bare "0" denotes the zero element, so printing round-trips
        return alg_.zero();
      }
    }
    typename A::Elem f = factor();
    std::vector<std::pair<int, int>> powers;
    const Tok* action_start = nullptr;
    while (cur_.peek().kind == Tok::Star || cur_.peek().kind == Tok::Gen) {
      if (cur_.peek().kind == Tok::Star) {
        const Tok& star = cur_.get();
        if (cur_.peek().kind != Tok::Gen) fail_at("expected a generator after '*'", cur_.peek());
        if (!action_start) action_start = &star;
      }
      const Tok& g = cur_.peek();
      if (!action_start) action_start = &g;
      powers.emplace_back(gen_index(), 1);
      if (cur_.peek().kind == Tok::Caret) {
        cur_.get();
        const Tok& e = cur_.expect(Tok::Int, "an exponent");
        powers.back().second = static_cast<int>(small_int(e, 1000));
      }
    }
    if (!powers.empty()) {
      if (alg_.has_linear(f))
        fail_at("module action applied to a term with nonzero linear part", *action_start);
      f = alg_.act_tail(f, powers);
    }
    f *= coeff;
    return f;
  }

  typename A::Elem factor() {
    const Tok& t = cur_.peek();
    switch (t.kind) {
      case Tok::Gen:
        return alg_.gen(gen_index());
      case Tok::LBrack: {
        cur_.get();
        typename A::Elem a = expr();
        cur_.expect(Tok::Comma, "','");
        typename A::Elem b = expr();
        cur_.expect(Tok::RBrack, "']'");
        return alg_.bracket_op(a, b);
      }
      case Tok::LParen: {
        cur_.get();
        typename A::Elem a = expr();
        cur_.expect(Tok::RParen, "')'");
        return a;
      }
      default:
        fail_at("expected a generator, '[' or '('", t);
    }
  }

  int gen_index() {
    const Tok& g = cur_.expect(Tok::Gen, "a generator");
    const long long idx = small_int(g, 1000000);
    if (idx < 1 || idx > alg_.rank())
      fail_at("generator index x" + g.text + " exceeds rank " + std::to_string(alg_.rank()), g);
    return static_cast<int>(idx);
  }

  const A& alg_;
  Cursor& cur_;
};

template <class A>
typename A::Elem run_parser(const A& alg, const std::string& text) {
  const std::vector<Tok> toks = lex(text);
  Cursor cur(toks);
  if (cur.peek().kind == Tok::End) fail_at("empty expression", cur.peek());
  LieParser<A> parser(alg, cur);
  typename A::Elem e = parser.expr();
  if (cur.peek().kind != Tok::End) fail_at("unexpected trailing input", cur.peek());
  return e;
}

}  // namespace

Element parse_lie(const std::string& text, const AlgebraSpec& spec) {
  if (spec.variety == Variety::Free) return run_parser(FreeAdapter{spec.rank}, text);
  return run_parser(MetAdapter{spec}, text);
}

CommPoly parse_poly(const std::string& text, int rank) {
  const std::vector<Tok> toks = lex(text);
  Cursor cur(toks);
  if (cur.peek().kind == Tok::End) fail_at("empty polynomial", cur.peek());
  CommPoly p = CommPoly::zero(rank);
  bool first = true;
  while (true) {
    bool negate = false;
    if (first) {
      if (cur.peek().kind == Tok::Minus) {
        cur.get();
        negate = true;
      }
    } else {
      if (cur.peek().kind == Tok::End) break;
      const Tok& sep = cur.peek();
      if (sep.kind == Tok::Plus)
        cur.get();
      else if (sep.kind == Tok::Minus) {
        cur.get();
        negate = true;
      } else
        fail_at("expected '+', '-' or end of polynomial", sep);
    }
    first = false;

    Rational coeff(negate ? -1 : 1);
    bool saw_anything = false;
    if (cur.peek().kind == Tok::Int) {
      coeff *= parse_rat(cur);
      saw_anything = true;
      if (cur.peek().kind == Tok::Star) {
        const Tok& star = cur.get();
        if (cur.peek().kind != Tok::Gen) fail_at("expected a variable after '*'", star);
      }
    }
    ExponentVector ev(static_cast<size_t>(rank), 0);
    while (cur.peek().kind == Tok::Gen) {
      saw_anything = true;
      const Tok& g = cur.get();
      const long long idx = small_int(g, 1000000);
      if (idx < 1 || idx > rank)
        fail_at("variable index x" + g.text + " exceeds rank " + std::to_string(rank), g);
      uint32_t exp = 1;
      if (cur.peek().kind == Tok::Caret) {
        cur.get();
        exp = static_cast<uint32_t>(small_int(cur.expect(Tok::Int, "an exponent"), 1000));
      }
      ev[static_cast<size_t>(idx) - 1] += exp;
      if (cur.peek().kind == Tok::Star) {
        const Tok& star = cur.get();
        if (cur.peek().kind != Tok::Gen) fail_at("expected a variable after '*'", star);
      }
    }
    if (!saw_anything) fail_at("expected a polynomial term", cur.peek());
    p.add_term(ev, coeff);
  }
  return p;
}

Permutation parse_permutation(const std::string& text, int n) {
  std::vector<int> img;
  std::string digits;
  auto flush = [&]() {
    if (digits.empty()) return;
    if (digits.size() > 6) throw ParseError("permutation entry too large", 1, 1);
    img.push_back(std::stoi(digits));
    digits.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
    } else if (ch == ',' || ch == ' ' || ch == '(' || ch == ')' || ch == '\t') {
      flush();
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "' in permutation", 1, 1);
    }
  }
  flush();
  if (static_cast<int>(img.size()) != n)
    throw ParseError("permutation needs exactly " + std::to_string(n) + " entries", 1, 1);
  try {
    return Permutation(std::move(img));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

}  // namespace liesym
