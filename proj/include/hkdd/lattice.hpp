#pragma once

// Integral lattices given by a Gram matrix, and their isometries.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hkdd/integer.hpp"

namespace hkdd {

/// A free ℤ-module of finite rank with an integral symmetric bilinear form.
/// Degenerate forms are allowed.
class GramLattice {
 public:
  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  /// Label of basis vector i, falling back to "v<i+1>".
  std::string label(std::size_t i) const;

  /// Index of the basis vector with this label.
  std::optional<std::size_t> find_label(const std::string& name) const;

  Integer pairing(const IntVector& a, const IntVector& b) const;

  friend bool operator==(const GramLattice& a, const GramLattice& b) { return a.gram_ == b.gram_; }

 private:
  friend GramLattice make_lattice(IntMatrix gram, std::vector<std::string> labels);
  GramLattice(IntMatrix gram, std::vector<std::string> labels)
      : gram_(std::move(gram)), labels_(std::move(labels)) {}

  IntMatrix gram_;
  std::vector<std::string> labels_;
};

/// Throws NonSquare, NonSymmetric, or DimensionMismatch (label count).
GramLattice make_lattice(IntMatrix gram, std::vector<std::string> labels = {});

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

bool is_even(const GramLattice& lattice);

/// Exact inertia by congruence diagonalisation over ℚ.
Signature signature(const GramLattice& lattice);

/// vᵀ G v. Throws DimensionMismatch.
Integer norm_of(const GramLattice& lattice, const IntVector& v);

/// An integer matrix M, acting on coordinate columns, with MᵀGM = G.
/// Column j of the matrix is the image of basis vector j.
class LatticeIsometry {
 public:
  const IntMatrix& matrix() const { return matrix_; }
  const GramLattice& lattice() const { return lattice_; }
  std::size_t rank() const { return matrix_.rows(); }

 private:
  friend LatticeIsometry verify_isometry(const GramLattice& lattice, const IntMatrix& m);
  LatticeIsometry(GramLattice lattice, IntMatrix m) : matrix_(std::move(m)), lattice_(std::move(lattice)) {}

  IntMatrix matrix_;
  GramLattice lattice_;
};

/// Exact check of MᵀGM = G; throws NotIsometry naming the first mismatching entry,
/// or DimensionMismatch when M has the wrong size.
LatticeIsometry verify_isometry(const GramLattice& lattice, const IntMatrix& m);

/// Primitive basis (row Hermite form) of {v : Mv = v}; empty when trivial.
std::vector<IntVector> invariant_sublattice(const LatticeIsometry& isometry);

/// The sublattice spanned by `basis`, with the restricted form.
GramLattice restrict_to(const GramLattice& lattice, const std::vector<IntVector>& basis);

enum class RepresentVerdict { FoundVector, CertifiedNo, NotFoundWithinBound };

struct RepresentResult {
  RepresentVerdict verdict = RepresentVerdict::NotFoundWithinBound;
  IntVector vector;         // set when FoundVector
  std::string certificate;  // human-readable reason when CertifiedNo
  std::optional<Integer> modulus;       // congruence certificate modulus
  std::optional<Integer> discriminant;  // binary-form discriminant certificate
};

/// Does some nonzero v satisfy vᵀGv = value? Certificates are tried first
/// (sign of a definite form, congruences modulo small m, binary discriminant
/// for value 0), then a search over coordinates in [-bound, bound].
/// The witness is the first vector in the order (max |coordinate|, then
/// coordinates compared with 0 < 1 < -1 < 2 < -2 < ...).
RepresentResult represents(const GramLattice& lattice, const Integer& value, unsigned bound);

std::string to_string(RepresentVerdict v);

/// Render v in the lattice basis, e.g. "H1 - 6e + H2".
std::string render_combination(const GramLattice& lattice, const IntVector& v);

}  // namespace hkdd
