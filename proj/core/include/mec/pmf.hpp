#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "mec/error.hpp"

namespace mec {

/// Tolerances shared across modules. Construction-time noise is kept one
/// decade below what verification accepts.
inline constexpr double kNegativeClamp = 1e-12;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kBuildTolerance = 1e-12;
inline constexpr double kVerifyTolerance = 1e-9;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A validated probability mass function over labels 0..n-1.
///
/// Masses are nonnegative and sum to one. Zero masses are kept so label
/// positions stay stable; support() lists the labels with positive mass.
class Pmf {
 public:
  enum class Rescale { kYes, kNo };

  /// Validates and renormalizes. Entries in [-1e-12, 0) are clamped to zero.
  /// Rescale::kNo keeps the validated masses bit-for-bit (used when reading
  /// back a pmf this library already normalized).
  /// Throws Error{kEmpty, kNegativeMass, kNotNormalized}.
  explicit Pmf(std::vector<double> masses, Rescale rescale = Rescale::kYes);

  [[nodiscard]] std::size_t size() const noexcept { return masses_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return masses_[i]; }
  [[nodiscard]] std::span<const double> masses() const noexcept { return masses_; }
  [[nodiscard]] std::vector<std::size_t> support() const;
  [[nodiscard]] std::size_t support_size() const noexcept;

  /// Copy padded with trailing zeros to length n (n >= size()).
  [[nodiscard]] Pmf padded(std::size_t n) const;

  friend bool operator==(const Pmf&, const Pmf&) = default;

 private:
  std::vector<double> masses_;
};

Pmf make_pmf(std::span<const double> masses);

/// Descending view of a Pmf. perm[k] is the original label of the k-th
/// largest mass; ties keep ascending original label order.
struct SortedPmf {
  std::vector<double> masses;
  std::vector<std::size_t> perm;

  [[nodiscard]] std::size_t size() const noexcept { return masses.size(); }
  /// Maps masses back to original label positions.
  [[nodiscard]] std::vector<double> unsorted() const;
};

SortedPmf sort_descending(const Pmf& p);

/// Wraps an already descending vector with the identity permutation.
/// Throws kNotSorted if an entry exceeds its predecessor by more than tol.
SortedPmf as_sorted(std::span<const double> descending, double tol = kBuildTolerance);

/// Order of a Rényi entropy: finite alpha >= 0, or infinity.
class RenyiOrder {
 public:
  constexpr RenyiOrder() = default;
  /// Throws kBadParameter for negative or NaN alpha.
  explicit RenyiOrder(double alpha);

  static constexpr RenyiOrder shannon() { return RenyiOrder{}; }
  static RenyiOrder infinity() { return RenyiOrder(kInfinity); }

  [[nodiscard]] constexpr double alpha() const noexcept { return alpha_; }
  [[nodiscard]] bool is_shannon() const noexcept;
  [[nodiscard]] bool is_infinite() const noexcept;

 private:
  double alpha_ = 1.0;
};

/// Rényi entropy in bits. Zero masses are excluded from every sum.
/// alpha within 1e-6 of 1 uses the Shannon formula.
double entropy(std::span<const double> masses, RenyiOrder order = {});
double entropy(const Pmf& p, RenyiOrder order = {});

/// Capped geometric pmf over k atoms: gamma (1-gamma)^(x-1) for x < k and the
/// tail (1-gamma)^(k-1) at x = k. Throws kBadParameter.
Pmf capped_geometric(double gamma, std::size_t k);

/// Closed-form Rényi entropy (bits) of the geometric(1/2) law on 1, 2, ....
/// Returns +infinity at alpha = 0.
double geometric_entropy(RenyiOrder order);

/// Half the L1 distance; the shorter vector is zero-padded.
double total_variation(std::span<const double> a, std::span<const double> b);

/// Neumaier-compensated sum.
double compensated_sum(std::span<const double> values);

}  // namespace mec
