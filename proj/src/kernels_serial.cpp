#include <algorithm>
#include <atomic>
#include <functional>

#include "curveta/kernels.hpp"

namespace curveta::kernels {

namespace {

std::atomic<Exec> g_exec{Exec::Parallel};

bool divides(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

}  // namespace

namespace serial {

MonomialBlock pairwise_products(const MonomialBlock& a, const MonomialBlock& b) {
  MonomialBlock out;
  out.nvars = a.nvars;
  out.npts = a.npts;
  const std::size_t na = a.size(), nb = b.size();
  out.exps.resize(na * nb * a.nvars);
  out.vals.resize(na * nb * a.npts);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const std::size_t row = i * nb + j;
      for (std::size_t k = 0; k < a.nvars; ++k) out.exps[row * a.nvars + k] = a.exp_row(i)[k] + b.exp_row(j)[k];
      for (std::size_t k = 0; k < a.npts; ++k) out.vals[row * a.npts + k] = a.val_row(i)[k] + b.val_row(j)[k];
    }
  return out;
}

std::vector<std::uint8_t> membership_mask(const MonomialBlock& m, const std::vector<std::int64_t>& threshold) {
  std::vector<std::uint8_t> mask(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::int64_t* v = m.val_row(i);
    mask[i] = std::equal(v, v + m.npts, threshold.begin(), std::greater_equal<>()) ? 1 : 0;
  }
  return mask;
}

std::vector<std::uint8_t> minimal_mask(const MonomialBlock& m) {
  const std::size_t n = m.size();
  std::vector<std::uint8_t> keep(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !divides(m.exp_row(j), m.exp_row(i), m.nvars)) continue;
      // j | i; equal rows are resolved by index.
      if (!divides(m.exp_row(i), m.exp_row(j), m.nvars) || j < i) {
        keep[i] = 0;
        break;
      }
    }
  return keep;
}

}  // namespace serial

MonomialBlock pairwise_products(const MonomialBlock& a, const MonomialBlock& b, Exec exec) {
  return exec == Exec::Serial ? serial::pairwise_products(a, b) : parallel::pairwise_products(a, b);
}

std::vector<std::uint8_t> membership_mask(const MonomialBlock& m, const std::vector<std::int64_t>& threshold,
                                          Exec exec) {
  return exec == Exec::Serial ? serial::membership_mask(m, threshold) : parallel::membership_mask(m, threshold);
}

std::vector<std::uint8_t> minimal_mask(const MonomialBlock& m, Exec exec) {
  return exec == Exec::Serial ? serial::minimal_mask(m) : parallel::minimal_mask(m);
}

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec exec) { g_exec.store(exec); }

}  // namespace curveta::kernels
