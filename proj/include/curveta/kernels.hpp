#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace curveta::kernels {

enum class Exec { Serial, Parallel };

/// Structure-of-arrays batch of monomials: row i has nvars exponents and
/// npts values.
struct MonomialBlock {
  std::size_t nvars = 0;
  std::size_t npts = 0;
  std::vector<std::uint32_t> exps;
  std::vector<std::int64_t> vals;

  std::size_t size() const { return nvars ? exps.size() / nvars : 0; }
  const std::uint32_t* exp_row(std::size_t i) const { return exps.data() + i * nvars; }
  const std::int64_t* val_row(std::size_t i) const { return vals.data() + i * npts; }
};

/// All a_i * b_j, row-major in (i, j).
MonomialBlock pairwise_products(const MonomialBlock& a, const MonomialBlock& b, Exec exec);
/// mask[i] = 1 iff every value of row i is >= threshold.
std::vector<std::uint8_t> membership_mask(const MonomialBlock& m, const std::vector<std::int64_t>& threshold,
                                          Exec exec);
/// mask[i] = 1 iff no other row divides row i (of equal rows the first survives).
std::vector<std::uint8_t> minimal_mask(const MonomialBlock& m, Exec exec);

namespace serial {
MonomialBlock pairwise_products(const MonomialBlock& a, const MonomialBlock& b);
std::vector<std::uint8_t> membership_mask(const MonomialBlock& m, const std::vector<std::int64_t>& threshold);
std::vector<std::uint8_t> minimal_mask(const MonomialBlock& m);
}  // namespace serial

namespace parallel {
MonomialBlock pairwise_products(const MonomialBlock& a, const MonomialBlock& b);
std::vector<std::uint8_t> membership_mask(const MonomialBlock& m, const std::vector<std::int64_t>& threshold);
std::vector<std::uint8_t> minimal_mask(const MonomialBlock& m);
}  // namespace parallel

/// Execution mode used by library calls that do not take one explicitly.
Exec default_exec();
void set_default_exec(Exec exec);
/// Caps OpenMP threads; 0 keeps the runtime default.
void set_thread_count(int threads);

}  // namespace curveta::kernels
