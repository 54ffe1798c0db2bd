#include <omp.h>

#include <cstdint>

#include "curveta/kernels.hpp"

namespace curveta::kernels {

namespace {

constexpr std::int64_t kMinParallelRows = 512;

bool divides(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

}  // namespace

namespace parallel {

MonomialBlock pairwise_products(const MonomialBlock& a, const MonomialBlock& b) {
  MonomialBlock out;
  out.nvars = a.nvars;
  out.npts = a.npts;
  const std::int64_t na = static_cast<std::int64_t>(a.size()), nb = static_cast<std::int64_t>(b.size());
  out.exps.resize(static_cast<std::size_t>(na * nb) * a.nvars);
  out.vals.resize(static_cast<std::size_t>(na * nb) * a.npts);
#pragma omp parallel for schedule(static) if (na * nb >= kMinParallelRows)
  for (std::int64_t row = 0; row < na * nb; ++row) {
    const std::size_t i = static_cast<std::size_t>(row / nb), j = static_cast<std::size_t>(row % nb);
    std::uint32_t* e = out.exps.data() + static_cast<std::size_t>(row) * a.nvars;
    std::int64_t* v = out.vals.data() + static_cast<std::size_t>(row) * a.npts;
    for (std::size_t k = 0; k < a.nvars; ++k) e[k] = a.exp_row(i)[k] + b.exp_row(j)[k];
    for (std::size_t k = 0; k < a.npts; ++k) v[k] = a.val_row(i)[k] + b.val_row(j)[k];
  }
  return out;
}

std::vector<std::uint8_t> membership_mask(const MonomialBlock& m, const std::vector<std::int64_t>& threshold) {
  const std::int64_t n = static_cast<std::int64_t>(m.size());
  std::vector<std::uint8_t> mask(m.size(), 0);
#pragma omp parallel for schedule(static) if (n >= kMinParallelRows)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t* v = m.val_row(static_cast<std::size_t>(i));
    std::uint8_t ok = 1;
    for (std::size_t k = 0; k < m.npts; ++k)
      if (v[k] < threshold[k]) {
        ok = 0;
        break;
      }
    mask[static_cast<std::size_t>(i)] = ok;
  }
  return mask;
}

std::vector<std::uint8_t> minimal_mask(const MonomialBlock& m) {
  const std::int64_t n = static_cast<std::int64_t>(m.size());
  std::vector<std::uint8_t> keep(m.size(), 1);
#pragma omp parallel for schedule(dynamic, 16) if (n >= kMinParallelRows / 8)
  for (std::int64_t si = 0; si < n; ++si) {
    const std::size_t i = static_cast<std::size_t>(si);
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j || !divides(m.exp_row(j), m.exp_row(i), m.nvars)) continue;
      if (!divides(m.exp_row(i), m.exp_row(j), m.nvars) || j < i) {
        keep[i] = 0;
        break;
      }
    }
  }
  return keep;
}

}  // namespace parallel

void set_thread_count(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

}  // namespace curveta::kernels
