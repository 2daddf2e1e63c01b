#include "hkdd/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "hkdd/errors.hpp"
#include "hkdd/intlinalg.hpp"

namespace hkdd {

std::string GramLattice::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "v" + std::to_string(i + 1);
}

std::optional<std::size_t> GramLattice::find_label(const std::string& name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Integer GramLattice::pairing(const IntVector& a, const IntVector& b) const {
  if (a.size() != rank() || b.size() != rank()) throw DimensionMismatch("pairing: vector length differs from rank");
  return dot(a, gram_ * b);
}

GramLattice make_lattice(IntMatrix gram, std::vector<std::string> labels) {
  if (!gram.is_square()) throw NonSquare("gram matrix must be square");
  if (gram.rows() == 0) throw NonSquare("gram matrix must have rank at least 1");
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = i + 1; j < gram.cols(); ++j)
      if (gram(i, j) != gram(j, i)) throw NonSymmetric(i, j);
  if (!labels.empty() && labels.size() != gram.rows())
    throw DimensionMismatch("expected " + std::to_string(gram.rows()) + " labels, got " +
                            std::to_string(labels.size()));
  return GramLattice(std::move(gram), std::move(labels));
}

bool is_even(const GramLattice& lattice) {
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    if (lattice.gram()(i, i) % 2 != 0) return false;
  return true;
}

Signature signature(const GramLattice& lattice) {
  const std::size_t n = lattice.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(lattice.gram()(i, j));

  Signature sig;
  // Active block is [k, n). Each step either splits off a nonzero diagonal pivot,
  // creates one by the congruence e_i -> e_i + e_j, or finds the block is zero.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = k; i < n && !off; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            off = std::pair{i, j};
            break;
          }
      if (!off) {
        sig.zero += n - k;
        break;
      }
      auto [i, j] = *off;
      // Row and column i += row and column j; new a[i][i] = 2 a[i][j] since both diagonals vanish.
      for (std::size_t c = k; c < n; ++c) a[i][c] += a[j][c];
      for (std::size_t r = k; r < n; ++r) a[r][i] += a[r][j];
      p = i;
    }
    if (p != k) {
      std::swap(a[p], a[k]);
      for (auto& row : a) std::swap(row[p], row[k]);
    }
    const Rational pivot = a[k][k];
    (pivot > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t i = k + 1; i < n; ++i) a[k][i] = 0;
  }
  return sig;
}

Integer norm_of(const GramLattice& lattice, const IntVector& v) {
  if (v.size() != lattice.rank())
    throw DimensionMismatch("vector has length " + std::to_string(v.size()) + ", lattice rank is " +
                            std::to_string(lattice.rank()));
  return lattice.pairing(v, v);
}

LatticeIsometry verify_isometry(const GramLattice& lattice, const IntMatrix& m) {
  if (m.rows() != lattice.rank() || m.cols() != lattice.rank())
    throw DimensionMismatch("isometry matrix must be " + std::to_string(lattice.rank()) + "x" +
                            std::to_string(lattice.rank()));
  const IntMatrix pulled = m.transpose() * lattice.gram() * m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (pulled(i, j) != lattice.gram()(i, j)) throw NotIsometry(i, j, pulled(i, j), lattice.gram()(i, j));
  // Form preservation forces det(M)^2 = 1 on nondegenerate lattices; degenerate ones need the check.
  const Integer det = determinant(m);
  if (det != 1 && det != -1) throw NotIsometry(0, 0, det, Integer(1));
  return LatticeIsometry(lattice, m);
}

std::vector<IntVector> invariant_sublattice(const LatticeIsometry& isometry) {
  return integer_kernel(isometry.matrix() - IntMatrix::identity(isometry.rank()));
}

GramLattice restrict_to(const GramLattice& lattice, const std::vector<IntVector>& basis) {
  IntMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = lattice.pairing(basis[i], basis[j]);
  return make_lattice(std::move(g));
}

namespace {

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

// Set of residues of the quadratic form modulo m, or nullopt when enumeration is too large.
std::optional<std::set<Integer>> residues_mod(const GramLattice& lattice, unsigned m) {
  const std::size_t r = lattice.rank();
  double count = 1;
  for (std::size_t i = 0; i < r; ++i) count *= m;
  if (count > 2.0e5) return std::nullopt;

  std::vector<long long> g(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      g[i * r + j] = floor_mod(lattice.gram()(i, j), Integer(m)).convert_to<long long>();

  std::set<Integer> out;
  std::vector<long long> v(r, 0);
  for (;;) {
    long long q = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (v[i] == 0) continue;
      long long row = 0;
      for (std::size_t j = 0; j < r; ++j) row = (row + g[i * r + j] * v[j]) % m;
      q = (q + v[i] * row) % m;
    }
    out.insert(Integer(q));
    std::size_t i = 0;
    while (i < r && ++v[i] == static_cast<long long>(m)) v[i++] = 0;
    if (i == r) break;
  }
  return out;
}

}  // namespace

RepresentResult represents(const GramLattice& lattice, const Integer& value, unsigned bound) {
  RepresentResult result;
  const Signature sig = signature(lattice);

  if (sig.zero == 0 && sig.negative == 0 && value <= 0) {
    result.verdict = RepresentVerdict::CertifiedNo;
    result.certificate = "form is positive definite";
    return result;
  }
  if (sig.zero == 0 && sig.positive == 0 && value >= 0) {
    result.verdict = RepresentVerdict::CertifiedNo;
    result.certificate = "form is negative definite";
    return result;
  }
  if (sig.negative == 0 && value < 0) {
    result.verdict = RepresentVerdict::CertifiedNo;
    result.certificate = "form is positive semidefinite";
    return result;
  }
  if (sig.positive == 0 && value > 0) {
    result.verdict = RepresentVerdict::CertifiedNo;
    result.certificate = "form is negative semidefinite";
    return result;
  }

  if (value != 0) {
    for (unsigned m = 2; m <= 16; ++m) {
      auto res = residues_mod(lattice, m);
      if (!res) break;
      const Integer target = floor_mod(value, Integer(m));
      if (!res->count(target)) {
        std::ostringstream os;
        os << "form values modulo " << m << " lie in {";
        bool first = true;
        for (const auto& x : *res) {
          os << (first ? "" : ", ") << x;
          first = false;
        }
        os << "}, which excludes " << target;
        result.verdict = RepresentVerdict::CertifiedNo;
        result.certificate = os.str();
        result.modulus = Integer(m);
        return result;
      }
    }
  }

  if (value == 0 && lattice.rank() == 2) {
    const IntMatrix& g = lattice.gram();
    // Q = a x² + 2b xy + c y² has discriminant (2b)² - 4ac; it is isotropic iff that is a square.
    const Integer disc = 4 * (g(0, 1) * g(0, 1) - g(0, 0) * g(1, 1));
    if (!is_perfect_square(disc)) {
      result.verdict = RepresentVerdict::CertifiedNo;
      result.certificate = "binary form discriminant " + disc.str() + " is not a perfect square";
      result.discriminant = disc;
      return result;
    }
  }

  const std::size_t r = lattice.rank();
  IntVector v(r);
  for (unsigned shell = 1; shell <= bound; ++shell) {
    std::vector<long long> order{0};
    for (long long x = 1; x <= static_cast<long long>(shell); ++x) {
      order.push_back(x);
      order.push_back(-x);
    }
    const std::vector<long long> edge{static_cast<long long>(shell), -static_cast<long long>(shell)};
    std::function<bool(std::size_t, bool)> walk = [&](std::size_t i, bool hit) -> bool {
      if (i == r) return lattice.pairing(v, v) == value;
      const bool must_hit = !hit && i + 1 == r;
      for (long long x : must_hit ? edge : order) {
        v[i] = x;
        const bool h = hit || x == static_cast<long long>(shell) || x == -static_cast<long long>(shell);
        if (walk(i + 1, h)) return true;
      }
      return false;
    };
    if (walk(0, false)) {
      result.verdict = RepresentVerdict::FoundVector;
      result.vector = v;
      return result;
    }
  }
  result.verdict = RepresentVerdict::NotFoundWithinBound;
  return result;
}

std::string to_string(RepresentVerdict v) {
  switch (v) {
    case RepresentVerdict::FoundVector:
      return "FoundVector";
    case RepresentVerdict::CertifiedNo:
      return "CertifiedNo";
    case RepresentVerdict::NotFoundWithinBound:
      return "NotFoundWithinBound";
  }
  return "?";
}

std::string render_combination(const GramLattice& lattice, const IntVector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Integer c = v[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Integer mag = abs(c);
    if (mag != 1) os << mag;
    os << lattice.label(i);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace hkdd
