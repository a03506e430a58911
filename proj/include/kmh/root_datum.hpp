#ifndef KMH_ROOT_DATUM_HPP
#define KMH_ROOT_DATUM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kmh {

/// Element of the character lattice X (or of its dual), in integer
/// coordinates.
using Weight = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Symmetrizable generalized Cartan matrix.
class Gcm {
public:
  /// Validates `entries` and computes a symmetrizer. Throws NotGCM or
  /// NotSymmetrizable.
  static Gcm validate(IntMatrix entries);

  int size() const { return static_cast<int>(entries_.size()); }
  std::int64_t operator()(int i, int j) const { return entries_[i][j]; }
  const IntMatrix& entries() const { return entries_; }

  /// Positive integers d_i with d_i a_ij = d_j a_ji, primitive overall.
  const std::vector<std::int64_t>& symmetrizer() const { return symmetrizer_; }

  /// Rank of the matrix over Q.
  int matrix_rank() const;

  /// Corank exactly one with a strictly positive kernel vector.
  bool is_affine() const;

  friend bool operator==(const Gcm& a, const Gcm& b) { return a.entries_ == b.entries_; }

private:
  Gcm(IntMatrix e, std::vector<std::int64_t> d)
      : entries_(std::move(e)), symmetrizer_(std::move(d)) {}

  IntMatrix entries_;
  std::vector<std::int64_t> symmetrizer_;
};

/// Primitive positive integer vector a with A a = 0, so that
/// delta = sum a_i alpha_i pairs to zero with every coroot.
std::vector<std::int64_t> null_marks(const Gcm& gcm);

/// Primitive positive integer vector c with c^T A = 0 (the linear relation
/// among coroots in a realization without the center).
std::vector<std::int64_t> dual_null_marks(const Gcm& gcm);

enum class Realization { standard, affine_l1, affine_l2, custom };

std::string to_string(Realization r);
Realization realization_from_string(const std::string& s);

/// A GCM together with a lattice X carrying simple roots and coroots.
/// The pairing between X and its dual is the coordinate dot product, and
/// <alpha_j, coroot_i> = a_ij.
class RootDatum {
public:
  /// Minimal realization of rank 2n - rank(A): coroots are the coordinate
  /// vectors e_i, roots are the columns of A completed by unit vectors.
  static RootDatum standard(const Gcm& gcm);

  /// Affine realization of rank l+1 (degree direction, no center) or l+2
  /// (degree and center). Throws NotAffineType.
  static RootDatum affine(const Gcm& gcm, bool include_center);

  /// Caller-supplied lattice. Validates the pairing and independence.
  static RootDatum from_vectors(const Gcm& gcm, std::vector<Weight> roots,
                                std::vector<Weight> coroots,
                                bool require_independent_coroots = true);

  static RootDatum realize(const Gcm& gcm, Realization kind);

  const Gcm& gcm() const { return gcm_; }
  int size() const { return gcm_.size(); }
  int lattice_rank() const { return rank_; }
  Realization kind() const { return kind_; }

  const Weight& root(int i) const { return roots_[i]; }
  const Weight& coroot(int i) const { return coroots_[i]; }
  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Weight>& coroots() const { return coroots_; }

  /// <lambda, coroot_i>.
  std::int64_t pairing(const Weight& lambda, int i) const;

  /// lambda - <lambda, coroot_i> alpha_i.
  Weight reflect(int i, const Weight& lambda) const;

  /// sum null_marks_i alpha_i, present iff the GCM is affine.
  const std::optional<Weight>& delta() const { return delta_; }

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.gcm_ == b.gcm_ && a.roots_ == b.roots_ && a.coroots_ == b.coroots_;
  }

private:
  RootDatum(Gcm gcm, int rank, std::vector<Weight> roots, std::vector<Weight> coroots,
            Realization kind);

  Gcm gcm_;
  int rank_;
  std::vector<Weight> roots_;
  std::vector<Weight> coroots_;
  Realization kind_;
  std::optional<Weight> delta_;
};

using Datum = std::shared_ptr<const RootDatum>;

inline Datum make_datum(RootDatum d) { return std::make_shared<const RootDatum>(std::move(d)); }

inline bool same_datum(const Datum& a, const Datum& b) {
  return a == b || (a && b && *a == *b);
}

/// Throws MixedData unless the two data coincide.
void require_same_datum(const Datum& a, const Datum& b);

// Weight arithmetic.
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight scaled(const Weight& a, std::int64_t k);

} // namespace kmh

#endif // KMH_ROOT_DATUM_HPP
