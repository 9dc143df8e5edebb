#include "schubert/census.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "schubert/errors.hpp"

namespace schubert {

std::string to_string(CensusMode mode) {
  return mode == CensusMode::AllManifolds ? "all" : "favorable";
}

CensusMode parse_census_mode(const std::string& text) {
  if (text == "all") return CensusMode::AllManifolds;
  if (text == "favorable") return CensusMode::FavorableOfDualPair;
  throw InputError("unknown census mode '" + text + "' (expected all or favorable)");
}

int beta_size(std::span<const int> w, const DescentType& t) {
  const int n = t.n();
  int total = 0;
  int block_end = 0;
  std::size_t j = 0;
  for (int k = 1; k <= t.last(); ++k) {
    while (block_end < k) block_end = t.a()[j++];
    const int wk = w[static_cast<std::size_t>(k - 1)];
    int next_above = n + 1;
    for (int q = block_end; q < n; ++q) {
      const int v = w[static_cast<std::size_t>(q)];
      if (v > wk && v < next_above) next_above = v;
    }
    for (int i = 0; i < block_end; ++i)
      if (w[static_cast<std::size_t>(i)] > next_above) ++total;
  }
  return total;
}

int primal_dual_variables(std::span<const int> w, const DescentType& t, bool reduced) {
  const int n = t.n();
  int ell = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)]) ++ell;
  if (!reduced) return ell;
  // Merging consecutive blocks preserves codimension iff every earlier block
  // lies entirely above every later one; merge each maximal such run.
  const int parts = t.s() + 1;
  std::vector<int> lo(static_cast<std::size_t>(parts), n + 1), hi(static_cast<std::size_t>(parts), 0),
      size(static_cast<std::size_t>(parts), 0);
  for (int p = 0; p < parts; ++p)
    for (int k = t.at(p); k < t.at(p + 1); ++k) {
      const int v = w[static_cast<std::size_t>(k)];
      lo[static_cast<std::size_t>(p)] = std::min(lo[static_cast<std::size_t>(p)], v);
      hi[static_cast<std::size_t>(p)] = std::max(hi[static_cast<std::size_t>(p)], v);
      ++size[static_cast<std::size_t>(p)];
    }
  // Inversions removed by merging the blocks run_start..p-1 into one.
  auto merged = [&](int first, int past) {
    int saved = 0, seen = 0;
    for (int q = first; q < past; ++q) {
      saved += seen * size[static_cast<std::size_t>(q)];
      seen += size[static_cast<std::size_t>(q)];
    }
    return saved;
  };
  int saved = 0;
  int run_start = 0;
  int cuts = 0;
  for (int p = 1; p <= parts; ++p) {
    if (p < parts && lo[static_cast<std::size_t>(p - 1)] > hi[static_cast<std::size_t>(p)]) continue;
    if (p < parts) ++cuts;
    saved += merged(run_start, p);
    run_start = p;
  }
  // The coarser type must stay nonempty: a w decreasing across every block
  // keeps its single cheapest boundary.
  if (cuts == 0 && parts > 1) {
    saved = 0;
    for (int cut = 1; cut < parts; ++cut) saved = std::max(saved, merged(0, cut) + merged(cut, parts));
  }
  return ell - saved;
}

ManifoldCounts manifold_census(const DescentType& t, bool reduced_pd) {
  ManifoldCounts out{t};
  const int dim = t.dim();
  const int n = t.n();
  for_each_permutation(t, [&](std::span<const int> w) {
    int ell = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)]) ++ell;
    const int c = dim - ell;
    if (c <= 1 || 2 * c >= dim) return;
    ++out.relevant;
    const int lifted = beta_size(w, t);
    const int pd = primal_dual_variables(w, t, reduced_pd);
    if (pd < lifted) {
      ++out.pd_wins;
    } else if (lifted < pd) {
      ++out.lifted_wins;
    } else {
      ++out.ties;
    }
  });
  return out;
}

CensusReport run_census(int n, CensusMode mode, bool reduced_pd, int jobs) {
  if (n < 2 || n > kMaxCensusN)
    throw CapacityError("census: n must lie in 2.." + std::to_string(kMaxCensusN));
  const auto types = all_descent_types(n);
  std::vector<ManifoldCounts> counts(types.size(), ManifoldCounts{types.front()});
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(types.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < types.size(); i = next++) counts[i] = manifold_census(types[i], reduced_pd);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  CensusReport r;
  r.n = n;
  r.mode = mode;
  r.reduced_pd = reduced_pd;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (mode == CensusMode::FavorableOfDualPair) {
      const auto dual = types[i].dual();
      const auto it = std::find(types.begin(), types.end(), dual);
      const std::size_t d = static_cast<std::size_t>(it - types.begin());
      // Keep the member where primal-dual wins less often; keep both on a tie.
      if (d != i && counts[i].pd_wins > counts[d].pd_wins) continue;
    }
    const auto& m = counts[i];
    r.total_varieties += m.relevant;
    r.wins_primal_dual += m.pd_wins;
    r.wins_lifted += m.lifted_wins;
    r.ties += m.ties;
    r.manifolds.push_back(m);
  }
  return r;
}

namespace {

std::string condition_string(std::span<const int> w, const DescentType& t) {
  return SchubertCondition(std::vector<int>(w.begin(), w.end()), t).to_string();
}

}  // namespace

LemmaCheck grassmannian_lemma_check(int n_max) {
  if (n_max > kMaxCensusN) throw CapacityError("lemma check: n_max too large");
  LemmaCheck out;
  for (int n = 2; n <= n_max; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      const auto t = DescentType::grassmannian(k, n);
      const int dim = t.dim();
      for_each_permutation(t, [&](std::span<const int> w) {
        int ell = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)]) ++ell;
        const int b = beta_size(w, t);
        if (b > k * (k - 1)) {
          out.ok = false;
          out.counterexamples.push_back(condition_string(w, t) + ": |beta| exceeds k(k-1)");
        }
        if (2 * (dim - ell) >= dim) return;
        ++out.conditions_checked;
        if (b >= ell) {
          out.ok = false;
          out.counterexamples.push_back(condition_string(w, t) + ": |beta| = " + std::to_string(b) +
                                        " >= ell = " + std::to_string(ell));
        }
      });
      if (3 * k >= n + 2) continue;
      for (int c1 = 0; 2 * c1 < dim; ++c1)
        for (int c2 = 0; 2 * (c1 + c2) < dim; ++c2) {
          ++out.remark_cases_checked;
          if (dim - c1 - c2 <= k * (k - 1)) {
            out.ok = false;
            out.counterexamples.push_back("Gr(" + std::to_string(k) + "," + std::to_string(n) + ") codims " +
                                          std::to_string(c1) + "+" + std::to_string(c2) +
                                          ": pair count not above k(k-1)");
          }
        }
    }
  return out;
}

std::string census_text(const CensusReport& r) {
  std::ostringstream os;
  auto pct = [&](std::uint64_t x) {
    std::ostringstream p;
    p.setf(std::ios::fixed);
    p.precision(3);
    p << (r.total_varieties ? 100.0 * static_cast<double>(x) / static_cast<double>(r.total_varieties) : 0.0) << "%";
    return p.str();
  };
  os << "census n=" << r.n << " mode=" << to_string(r.mode) << " primal-dual=" << (r.reduced_pd ? "reduced" : "plain")
     << "\n";
  os << "manifolds: " << r.manifolds.size() << "\n";
  os << "relevant Schubert varieties: " << r.total_varieties << "\n";
  os << "primal-dual fewer variables: " << r.wins_primal_dual << " (" << pct(r.wins_primal_dual) << ")\n";
  os << "reduced lifted fewer variables: " << r.wins_lifted << " (" << pct(r.wins_lifted) << ")\n";
  os << "ties: " << r.ties << " (" << pct(r.ties) << ")\n";
  return os.str();
}

std::string census_csv(const CensusReport& r) {
  std::ostringstream os;
  os << "manifold,relevant,pd_wins,lifted_wins,ties\n";
  for (const auto& m : r.manifolds)
    os << '"' << m.type.to_string() << "\"," << m.relevant << ',' << m.pd_wins << ',' << m.lifted_wins << ','
       << m.ties << "\n";
  return os.str();
}

}  // namespace schubert
