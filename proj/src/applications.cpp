#include "curveta/applications.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <sstream>

#include "curveta/error.hpp"

namespace curveta {

MonomialIdeal integral_closure(const Divisor& f, const MaximalContactSet& contacts) {
  return compute_generators(unload(f), contacts).ideal;
}

Divisor relative_canonical(ClusterPtr cluster) {
  const std::size_t n = cluster->size();
  return Divisor::from_mults(std::move(cluster), IntVec(n, 1));
}

Divisor multiplier_divisor(const Divisor& f, const mpq_class& lambda) {
  const Divisor k = relative_canonical(f.cluster_ptr());
  IntVec w(f.size());
  for (std::size_t p = 0; p < w.size(); ++p) {
    mpz_class fl;
    mpq_class prod = lambda * f.value(p);
    mpz_fdiv_q(fl.get_mpz_t(), prod.get_num_mpz_t(), prod.get_den_mpz_t());
    w[p] = std::max<std::int64_t>(0, fl.get_si() - k.value(p));
  }
  return unload(Divisor::from_values(f.cluster_ptr(), std::move(w)));
}

MultiplierIdeal multiplier_ideal(const Divisor& f, const mpq_class& lambda, const MaximalContactSet& contacts) {
  if (lambda < 0) throw Error(ErrorCode::PreconditionViolated, "lambda must be nonnegative");
  Divisor d = multiplier_divisor(unload(f), lambda);
  MonomialIdeal ideal = compute_generators(d, contacts).ideal;
  return {std::move(d), std::move(ideal)};
}

std::vector<mpq_class> jump_candidates(const Divisor& input, const mpq_class& lambda_max) {
  const Divisor f = unload(input);
  const Divisor k = relative_canonical(f.cluster_ptr());
  std::vector<mpq_class> out;
  for (std::size_t p = 0; p < f.size(); ++p) {
    if (f.value(p) <= 0) continue;
    for (std::int64_t num = k.value(p) + 1;; ++num) {
      mpq_class c(num, f.value(p));
      c.canonicalize();
      if (c >= lambda_max) break;
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

JumpingTable jumping_numbers(const Divisor& input, const mpq_class& lambda_max, const MaximalContactSet& contacts,
                             kernels::Exec exec) {
  const Divisor f = unload(input);
  const std::vector<mpq_class> cands = jump_candidates(f, lambda_max);
  std::vector<std::optional<Divisor>> divisors(cands.size());
  const std::int64_t n = static_cast<std::int64_t>(cands.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (exec == kernels::Exec::Parallel && n > 8)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      divisors[static_cast<std::size_t>(i)] = multiplier_divisor(f, cands[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  GeneratorEngine engine(contacts, exec);
  JumpingTable table;
  Divisor previous = zero_divisor(f.cluster_ptr());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const Divisor& d = *divisors[i];
    if (d == previous) continue;
    table.entries.push_back({cands[i], d, engine.generators(d)});
    previous = d;
  }
  return table;
}

Divisor filtration_divisor(ClusterPtr cluster, PointId q, std::int64_t i) {
  IntVec v(cluster->size(), 0);
  v.at(q) = i;
  return unload(Divisor::from_values(std::move(cluster), std::move(v)));
}

std::vector<FiltrationRow> valuation_filtration(ClusterPtr cluster, PointId q, std::int64_t i_max,
                                                const MaximalContactSet& contacts) {
  const Divisor bq = branch_divisor(cluster, q);
  const std::int64_t limit = intersect(bq, bq);
  if (i_max > limit) {
    std::ostringstream os;
    os << "index " << i_max << " exceeds B_" << q << "^2 = " << limit;
    throw Error(ErrorCode::IndexBeyondDomination, os.str());
  }
  GeneratorEngine engine(contacts);
  std::vector<FiltrationRow> rows;
  for (std::int64_t i = 1; i <= i_max; ++i) {
    Divisor d = filtration_divisor(cluster, q, i);
    MonomialIdeal ideal = engine.generators(d);
    rows.push_back({i, std::move(d), std::move(ideal)});
  }
  return rows;
}

}  // namespace curveta
