#include "latkit/lattice.hpp"

#include <deque>
#include <map>

#include "latkit/error.hpp"
#include "latkit/exact_linalg.hpp"

namespace latkit {

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() == 0) throw InvalidInput("Gram matrix must be square and nonempty");
  if (!gram_.is_symmetric()) throw InvalidInput("Gram matrix is not symmetric");
  if (sgn(det(gram_)) == 0) throw InvalidInput("Gram matrix is degenerate");
}

Int Lattice::discriminant() const { return det(gram_); }

std::vector<Int> Lattice::discriminant_group() const {
  std::vector<Int> out;
  for (auto& d : elementary_divisors(gram_))
    if (d > 1) out.push_back(d);
  return out;
}

Sublattice::Sublattice(Lattice amb, IntMatrix b) : ambient(std::move(amb)), basis(std::move(b)) {
  if (basis.rows() != ambient.rank()) throw InvalidInput("sublattice basis has the wrong length");
  if (latkit::rank(basis) != basis.cols()) throw InvalidInput("sublattice basis is not independent");
}

IntMatrix Sublattice::restricted_gram() const {
  return basis.transpose() * ambient.gram() * basis;
}

Int Sublattice::discriminant() const { return det(restricted_gram()); }

Sublattice orthogonal_complement(const Sublattice& s) {
  IntMatrix pairing = s.basis.transpose() * s.ambient.gram();
  return Sublattice(s.ambient, kernel_basis(pairing));
}

Sublattice saturate(const Sublattice& s) {
  IntMatrix annihilator = kernel_basis(s.basis.transpose());
  return Sublattice(s.ambient, kernel_basis(annihilator.transpose()));
}

bool is_primitive(const Sublattice& s) {
  for (const auto& d : elementary_divisors(s.basis))
    if (d != 1) return false;
  return true;
}

IsometryGroup close_group(const Lattice& l, std::vector<IntMatrix> generators, std::size_t cap) {
  const std::size_t n = l.rank();
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw InvalidInput("group generator has the wrong size");
    if (!(g.transpose() * l.gram() * g == l.gram()))
      throw InvalidInput("group generator is not an isometry of the lattice");
  }
  auto key = [](const IntMatrix& m) { return to_string(m); };
  std::map<std::string, std::size_t> seen;
  IsometryGroup out{generators, {}};
  std::deque<IntMatrix> queue;
  IntMatrix one = IntMatrix::identity(n);
  seen.emplace(key(one), 0);
  out.elements.push_back(one);
  queue.push_back(one);
  while (!queue.empty()) {
    IntMatrix x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      IntMatrix y = x * g;
      if (seen.emplace(key(y), out.elements.size()).second) {
        if (out.elements.size() >= cap) throw CapExceeded("group closure exceeds the element cap");
        out.elements.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  return out;
}

FixedSublatticeReport fixed_sublattice(const Lattice& l, const IsometryGroup& g) {
  const std::size_t n = l.rank();
  IntMatrix stacked(0, n);
  for (const auto& x : g.generators) stacked = vstack(stacked, x - IntMatrix::identity(n));
  IntMatrix basis = stacked.rows() == 0 ? IntMatrix::identity(n) : kernel_basis(stacked);
  Sublattice fixed(l, basis);
  Int d = fixed.rank() == 0 ? Int(1) : fixed.discriminant();
  Int base = abs(l.discriminant()) * Int(static_cast<unsigned long>(g.order()));
  Int bound = ipow(base, fixed.rank());
  bool divides = fixed.rank() == 0 || mpz_divisible_p(bound.get_mpz_t(), d.get_mpz_t());
  return FixedSublatticeReport{std::move(fixed), g.order(), d, bound, divides};
}

}  // namespace latkit
