#pragma once

// Multi-modular exact determinants for the subset-enumeration hot loops.
// Each determinant is computed modulo a handful of 62-bit primes in
// Montgomery form; sums are accumulated per prime and the exact integer is
// rebuilt by CRT once at the end. Correct whenever the true value lies in
// [0, product of primes), which callers guarantee with an a priori bound.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace subtree::detail {

__extension__ typedef unsigned __int128 u128;

class Montgomery {
 public:
  explicit Montgomery(std::uint64_t modulus);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t one() const { return one_; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    const u128 t = static_cast<u128>(a) * b;
    const std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
    const u128 u = (t + static_cast<u128>(m) * p_) >> 64;
    const auto r = static_cast<std::uint64_t>(u);
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  /// Montgomery form of x (any residue class representative).
  std::uint64_t to_mont(std::uint64_t x) const { return mul(x % p_, r2_); }
  std::uint64_t from_signed(std::int64_t x) const;
  std::uint64_t from_mont(std::uint64_t a) const { return mul(a, 1); }

  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
  /// Inverse of a nonzero element (Fermat).
  std::uint64_t inverse(std::uint64_t a) const { return pow(a, p_ - 2); }

 private:
  std::uint64_t p_;
  std::uint64_t neg_inv_;  // -p^{-1} mod 2^64
  std::uint64_t r2_;       // 2^128 mod p
  std::uint64_t one_;      // 2^64 mod p
};

/// The first `count` primes of a fixed table whose product exceeds a bound.
class ResidueSystem {
 public:
  /// Throws std::overflow_error if the table cannot cover `bound`.
  explicit ResidueSystem(const mpz_class& bound);

  static bool covers(const mpz_class& bound);

  int size() const { return static_cast<int>(primes_.size()); }
  const Montgomery& prime(int i) const { return primes_[static_cast<std::size_t>(i)]; }

  /// CRT from residues in Montgomery form to the integer in [0, product).
  mpz_class reconstruct(std::span<const std::uint64_t> residues) const;

 private:
  std::vector<Montgomery> primes_;
};

/// Determinants of Laplacian-like minors: rows/columns are the vertices in
/// `rows`, the diagonal entry of vertex v is diag[v], and the off-diagonal
/// entry is -1 for adjacent vertices. Vertices are bits of 64-bit masks.
class MinorDeterminant {
 public:
  explicit MinorDeterminant(const ResidueSystem& system);

  /// Writes one residue (Montgomery form) per prime into out.
  void compute(std::span<const std::uint64_t> adjacency, std::uint64_t rows, std::span<const int> diag,
               std::span<std::uint64_t> out);

 private:
  const ResidueSystem* system_;
  std::vector<std::vector<std::uint64_t>> small_;  // per prime: Montgomery form of 0..64
  std::vector<std::uint64_t> minus_one_;
  std::vector<std::uint64_t> work_;
  std::vector<int> verts_;
};

/// Per-prime running sums, in Montgomery form.
class ResidueSum {
 public:
  ResidueSum() = default;
  explicit ResidueSum(const ResidueSystem& system) : system_(&system), sums_(static_cast<std::size_t>(system.size()), 0) {}

  void add(std::span<const std::uint64_t> residues);
  void add_product(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
  void merge(const ResidueSum& other) { add(other.sums_); }
  mpz_class value() const { return system_->reconstruct(sums_); }

 private:
  const ResidueSystem* system_ = nullptr;
  std::vector<std::uint64_t> sums_;
};

/// log2 of a positive integer, for sizing bounds.
double log2_of(const mpz_class& x);

}  // namespace subtree::detail
