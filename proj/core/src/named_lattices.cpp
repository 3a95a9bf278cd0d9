#include "latkit/named_lattices.hpp"

#include <cctype>
#include <string>

#include "latkit/error.hpp"
#include "latkit/exact_linalg.hpp"

namespace latkit {

IntMatrix e8_gram() {
  IntMatrix g = IntMatrix::scalar(8, Int(2));
  // Bourbaki labels 1..8: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
  const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (const auto& e : edges) {
    g(e[0] - 1, e[1] - 1) = -1;
    g(e[1] - 1, e[0] - 1) = -1;
  }
  return g;
}

Lattice e8(long sign) { return Lattice(Int(sign) * e8_gram()); }

Lattice hyperbolic_plane() { return Lattice(IntMatrix{{0, 1}, {1, 0}}); }

Lattice rank_one(const Int& n) {
  IntMatrix g(1, 1);
  g(0, 0) = n;
  return Lattice(g);
}

Lattice diagonal_lattice(const std::vector<Int>& entries) {
  return Lattice(IntMatrix::diagonal(entries));
}

Lattice orthogonal_sum(const Lattice& a, const Lattice& b) {
  return Lattice(direct_sum(a.gram(), b.gram()));
}

Lattice twist(const Lattice& l, const Int& n) { return Lattice(n * l.gram()); }

Lattice power(const Lattice& l, unsigned k) {
  if (k == 0) throw InvalidInput("zero-fold orthogonal sum");
  IntMatrix g = l.gram();
  for (unsigned i = 1; i < k; ++i) g = direct_sum(g, l.gram());
  return Lattice(g);
}

Lattice k3_lattice() {
  return orthogonal_sum(power(e8(-1), 2), power(hyperbolic_plane(), 3));
}

Lattice lambda_2d(const Int& d) {
  if (d < 1) throw InvalidInput("lambda_2d needs d >= 1");
  return orthogonal_sum(orthogonal_sum(power(e8(-1), 2), power(hyperbolic_plane(), 2)),
                        rank_one(-2 * d));
}

Lattice lambda_sharp() {
  return orthogonal_sum(orthogonal_sum(power(e8(-1), 2), power(hyperbolic_plane(), 2)),
                        power(rank_one(-1), 5));
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  Lattice parse() {
    Lattice l = term();
    while (accept('+')) l = orthogonal_sum(l, term());
    if (pos_ != text_.size()) fail("unexpected character");
    return l;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("cannot parse lattice name '" + text_ + "': " + why);
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    if (text_.size() - pos_ < w.size()) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (std::tolower(static_cast<unsigned char>(text_[pos_ + i])) != w[i]) return false;
    pos_ += w.size();
    return true;
  }

  Int integer() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits = text_.substr(start, pos_ - start);
    if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer");
    if (digits[0] == '+') digits.erase(0, 1);
    return Int(digits);
  }

  Lattice term() {
    Lattice l = atom();
    if (accept('^')) {
      Int k = integer();
      if (k < 1 || k > 1000) fail("exponent out of range");
      l = power(l, static_cast<unsigned>(k.get_ui()));
    }
    return l;
  }

  Lattice atom() {
    if (accept('(')) {
      std::size_t depth = 1, start = pos_;
      while (pos_ < text_.size() && depth) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      }
      if (depth) fail("unbalanced parentheses");
      return Parser(text_.substr(start, pos_ - start - 1)).parse();
    }
    if (accept('<')) {
      Int n = integer();
      expect('>');
      return rank_one(n);
    }
    if (accept_word("lambda-sharp") || accept_word("lambda#")) return lambda_sharp();
    if (accept_word("lambda2d")) {
      expect('(');
      Int d = integer();
      expect(')');
      return lambda_2d(d);
    }
    if (accept_word("k3")) return k3_lattice();
    if (accept_word("diag")) {
      expect('(');
      std::vector<Int> entries{integer()};
      while (accept(',')) entries.push_back(integer());
      expect(')');
      return diagonal_lattice(entries);
    }
    if (accept_word("e8")) return maybe_twist(e8(1));
    if (accept_word("u")) return maybe_twist(hyperbolic_plane());
    fail("unknown lattice");
  }

  Lattice maybe_twist(const Lattice& l) {
    if (!accept('(')) return l;
    Int n = integer();
    expect(')');
    return twist(l, n);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

Lattice named_lattice(std::string_view expr) { return Parser(expr).parse(); }

std::array<Int, 4> four_squares(const Int& n) {
  if (n < 0) throw InvalidInput("four_squares of a negative number");
  for (Int x1 = isqrt(n); x1 >= 0; --x1) {
    const Int r1 = n - x1 * x1;
    if (4 * x1 * x1 < n) break;
    for (Int x2 = std::min(x1, Int(isqrt(r1))); x2 >= 0; --x2) {
      const Int r2 = r1 - x2 * x2;
      if (3 * x2 * x2 < r1) break;
      for (Int x3 = std::min(x2, Int(isqrt(r2))); x3 >= 0; --x3) {
        const Int r3 = r2 - x3 * x3;
        if (2 * x3 * x3 < r2) break;
        Int x4 = isqrt(r3);
        if (x4 <= x3 && x4 * x4 == r3) return {x1, x2, x3, x4};
      }
    }
  }
  throw Error("four_squares: no decomposition found");
}

PolarizationEmbedding embed_polarization(const Int& d) {
  if (d < 1) throw InvalidInput("embed_polarization needs d >= 1");
  const auto xs = four_squares(2 * d - 1);
  IntVector v{xs[0], xs[1], xs[2], xs[3], Int(1)};

  constexpr std::size_t kShared = 20;
  IntMatrix e(25, 21);
  for (std::size_t i = 0; i < kShared; ++i) e(i, i) = 1;
  for (std::size_t i = 0; i < 5; ++i) e(kShared + i, kShared) = v[i];

  // The map is the identity on E8(-1)^2 + U^2 and sends <-2d> into <-1>^5, so
  // both the pullback and the cokernel split along the two summands. The
  // shared summand contributes the identity; only the last block varies.
  static const Lattice minus_one_5 = power(rank_one(-1), 5);
  Sublattice block(minus_one_5, IntMatrix::from_columns({v}, 5));
  PolarizationEmbedding out{d, std::move(v), std::move(e), false, false};
  out.isometric = block.restricted_gram()(0, 0) == -2 * d;
  out.primitive = saturate(block).basis == hermite_normal_form(block.basis);
  return out;
}

bool verify_embedding_fully(const PolarizationEmbedding& e) {
  static const Lattice target = lambda_sharp();
  Sublattice image(target, e.embedding);
  return image.restricted_gram() == lambda_2d(e.d).gram() &&
         saturate(image).basis == hermite_normal_form(e.embedding);
}

}  // namespace latkit
