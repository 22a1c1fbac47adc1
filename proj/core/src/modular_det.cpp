#include "subtree/detail/modular.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace subtree::detail {

namespace {

// Largest primes below 2^62.
constexpr std::uint64_t kPrimes[] = {
    0x3fffffffffffffc7ULL, 0x3fffffffffffffa9ULL, 0x3fffffffffffff8bULL, 0x3fffffffffffff71ULL,
    0x3fffffffffffff67ULL, 0x3fffffffffffff59ULL, 0x3fffffffffffff55ULL, 0x3fffffffffffff3dULL,
    0x3fffffffffffff35ULL, 0x3ffffffffffffeefULL, 0x3ffffffffffffee1ULL, 0x3ffffffffffffec3ULL,
    0x3ffffffffffffe45ULL, 0x3ffffffffffffe1dULL, 0x3ffffffffffffe11ULL, 0x3ffffffffffffdc1ULL,
    0x3ffffffffffffdbbULL, 0x3ffffffffffffda5ULL, 0x3ffffffffffffd87ULL, 0x3ffffffffffffd69ULL,
    0x3ffffffffffffd03ULL, 0x3ffffffffffffcfbULL, 0x3ffffffffffffcf7ULL, 0x3ffffffffffffce9ULL,
};

mpz_class mpz_from_u64(std::uint64_t x) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof(x), 0, 0, &x);
  return z;
}

std::uint64_t mod_u64(const mpz_class& x, std::uint64_t p) {
  mpz_class r;
  const mpz_class pz = mpz_from_u64(p);
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace

Montgomery::Montgomery(std::uint64_t modulus) : p_(modulus) {
  if (modulus % 2 == 0 || modulus >= (std::uint64_t{1} << 62)) {
    throw std::invalid_argument("Montgomery modulus must be odd and below 2^62");
  }
  // Newton iteration for p^{-1} mod 2^64.
  std::uint64_t inv = modulus;
  for (int i = 0; i < 6; ++i) inv *= 2 - modulus * inv;
  neg_inv_ = ~inv + 1;
  one_ = static_cast<std::uint64_t>((static_cast<u128>(1) << 64) % modulus);
  r2_ = static_cast<std::uint64_t>(static_cast<u128>(one_) * one_ % modulus);
}

std::uint64_t Montgomery::from_signed(std::int64_t x) const {
  if (x >= 0) return to_mont(static_cast<std::uint64_t>(x));
  return neg(to_mont(static_cast<std::uint64_t>(-(x + 1)) + 1));
}

std::uint64_t Montgomery::pow(std::uint64_t base, std::uint64_t exp) const {
  std::uint64_t result = one_;
  while (exp != 0) {
    if (exp & 1U) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

ResidueSystem::ResidueSystem(const mpz_class& bound) {
  mpz_class product = 1;
  for (auto p : kPrimes) {
    if (product > bound) break;
    primes_.emplace_back(p);
    product *= mpz_from_u64(p);
  }
  if (product <= bound) throw std::overflow_error("bound exceeds the modular prime table");
}

bool ResidueSystem::covers(const mpz_class& bound) {
  mpz_class product = 1;
  for (auto p : kPrimes) product *= mpz_from_u64(p);
  return product > bound;
}

mpz_class ResidueSystem::reconstruct(std::span<const std::uint64_t> residues) const {
  // Garner-style incremental CRT.
  mpz_class x = 0;
  mpz_class modulus = 1;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const auto& mp = primes_[i];
    const std::uint64_t p = mp.modulus();
    const std::uint64_t r = mp.from_mont(residues[i]);
    const std::uint64_t x_mod = mod_u64(x, p);
    const std::uint64_t m_mod = mod_u64(modulus, p);
    // t = (r - x) / modulus  (mod p)
    const std::uint64_t diff = mp.sub(mp.to_mont(r), mp.to_mont(x_mod));
    const std::uint64_t t = mp.from_mont(mp.mul(diff, mp.inverse(mp.to_mont(m_mod))));
    x += modulus * mpz_from_u64(t);
    modulus *= mpz_from_u64(p);
  }
  return x;
}

MinorDeterminant::MinorDeterminant(const ResidueSystem& system) : system_(&system) {
  for (int i = 0; i < system.size(); ++i) {
    const auto& mp = system.prime(i);
    std::vector<std::uint64_t> table(65);
    for (int v = 0; v <= 64; ++v) table[static_cast<std::size_t>(v)] = mp.to_mont(static_cast<std::uint64_t>(v));
    small_.push_back(std::move(table));
    minus_one_.push_back(mp.neg(mp.one()));
  }
  work_.resize(64 * 64);
  verts_.resize(64);
}

void MinorDeterminant::compute(std::span<const std::uint64_t> adjacency, std::uint64_t rows,
                               std::span<const int> diag, std::span<std::uint64_t> out) {
  int m = 0;
  for (std::uint64_t r = rows; r != 0; r &= r - 1) verts_[static_cast<std::size_t>(m++)] = std::countr_zero(r);

  const auto mm = static_cast<std::size_t>(m);
  for (int pi = 0; pi < system_->size(); ++pi) {
    const auto& mp = system_->prime(pi);
    if (m == 0) {
      out[static_cast<std::size_t>(pi)] = mp.one();
      continue;
    }
    const auto& small = small_[static_cast<std::size_t>(pi)];
    const std::uint64_t minus_one = minus_one_[static_cast<std::size_t>(pi)];
    std::uint64_t* a = work_.data();
    for (std::size_t r = 0; r < mm; ++r) {
      const int v = verts_[r];
      const std::uint64_t nb = adjacency[static_cast<std::size_t>(v)];
      std::uint64_t* row = a + r * mm;
      for (std::size_t c = 0; c < mm; ++c) row[c] = (nb >> verts_[c]) & 1U ? minus_one : 0;
      row[r] = small[static_cast<std::size_t>(diag[static_cast<std::size_t>(v)])];
    }

    // Division-free elimination: row_r <- pivot*row_r - a_ri*row_i scales the
    // determinant by the pivot, which is tracked in `scale` and divided out once.
    std::uint64_t det = mp.one();
    std::uint64_t scale = mp.one();
    bool singular = false;
    for (std::size_t i = 0; i < mm; ++i) {
      std::size_t piv_row = i;
      while (piv_row < mm && a[piv_row * mm + i] == 0) ++piv_row;
      if (piv_row == mm) {
        singular = true;
        break;
      }
      if (piv_row != i) {
        for (std::size_t c = i; c < mm; ++c) std::swap(a[i * mm + c], a[piv_row * mm + c]);
        det = mp.neg(det);
      }
      const std::uint64_t pivot = a[i * mm + i];
      det = mp.mul(det, pivot);
      const std::uint64_t* prow = a + i * mm;
      for (std::size_t r = i + 1; r < mm; ++r) {
        std::uint64_t* row = a + r * mm;
        const std::uint64_t f = row[i];
        if (f == 0) continue;
        for (std::size_t c = i + 1; c < mm; ++c) row[c] = mp.sub(mp.mul(pivot, row[c]), mp.mul(f, prow[c]));
        scale = mp.mul(scale, pivot);
      }
    }
    out[static_cast<std::size_t>(pi)] = singular ? 0 : mp.mul(det, mp.inverse(scale));
  }
}

void ResidueSum::add(std::span<const std::uint64_t> residues) {
  for (std::size_t i = 0; i < sums_.size(); ++i) sums_[i] = system_->prime(static_cast<int>(i)).add(sums_[i], residues[i]);
}

void ResidueSum::add_product(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < sums_.size(); ++i) {
    const auto& mp = system_->prime(static_cast<int>(i));
    sums_[i] = mp.add(sums_[i], mp.mul(a[i], b[i]));
  }
}

double log2_of(const mpz_class& x) {
  if (x <= 0) return -INFINITY;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

}  // namespace subtree::detail
