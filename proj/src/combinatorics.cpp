#include "schubert/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

DescentType::DescentType(int n, std::vector<int> a) : n_(n), a_(std::move(a)), dim_(0) {
  if (n_ < 1) throw InputError("descent type needs n >= 1");
  if (a_.empty()) throw InputError("descent type must be nonempty");
  int prev = 0;
  for (int v : a_) {
    if (v <= prev || v >= n_)
      throw InputError("descent type must satisfy 1 <= a_1 < ... < a_s <= n-1");
    prev = v;
  }
  prev = 0;
  for (int v : a_) {
    dim_ += (n_ - v) * (v - prev);
    prev = v;
  }
}

int DescentType::at(int j) const {
  if (j == 0) return 0;
  if (j == s() + 1) return n_;
  if (j < 0 || j > s() + 1) throw InputError("descent type index out of range");
  return a_[static_cast<std::size_t>(j - 1)];
}

bool DescentType::contains(int v) const { return std::binary_search(a_.begin(), a_.end(), v); }

DescentType DescentType::dual() const {
  std::vector<int> b;
  b.reserve(a_.size());
  for (auto it = a_.rbegin(); it != a_.rend(); ++it) b.push_back(n_ - *it);
  return DescentType(n_, std::move(b));
}

std::string DescentType::to_string() const {
  std::ostringstream os;
  os << (is_grassmannian() ? "Gr(" : "Fl(");
  for (std::size_t j = 0; j < a_.size(); ++j) os << (j ? "," : "") << a_[j];
  os << ";" << n_ << ")";
  return os.str();
}

SchubertCondition::SchubertCondition(std::vector<int> w, DescentType type)
    : w_(std::move(w)), type_(std::move(type)) {
  const int n = type_.n();
  if (static_cast<int>(w_.size()) != n) throw InputError("permutation length does not match n");
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int v : w_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw InputError("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 1; i < n; ++i)
    if ((*this)(i) > (*this)(i + 1) && !type_.contains(i))
      throw InputError("permutation " + to_string() + " has a descent at " + std::to_string(i) +
                       " outside the descent type");
}

std::string SchubertCondition::to_string() const {
  std::ostringstream os;
  const bool compact = type_.n() <= 9;
  for (int k = 1; k <= type_.n(); ++k) {
    if (k > 1) {
      if (type_.contains(k - 1)) {
        os << '|';
      } else if (!compact) {
        os << ' ';
      }
    }
    os << (*this)(k);
  }
  return os.str();
}

SchubertCondition parse_condition(std::string_view text, const std::optional<DescentType>& type) {
  std::vector<int> values;
  std::vector<int> bars;
  const bool delimited = text.find_first_of(" ,\t") != std::string_view::npos;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    values.push_back(std::stoi(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == '|') {
      flush();
      bars.push_back(static_cast<int>(values.size()));
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (delimited) {
        token.push_back(ch);
      } else {
        values.push_back(ch - '0');
      }
    } else if (ch == ' ' || ch == ',' || ch == '\t') {
      flush();
    } else {
      throw InputError("unexpected character in permutation: " + std::string(text));
    }
  }
  flush();
  if (values.empty()) throw InputError("empty permutation");
  const int n = static_cast<int>(values.size());
  if (!bars.empty()) {
    DescentType from_bars(n, bars);
    if (type && !(from_bars == *type))
      throw InputError("bars in " + std::string(text) + " disagree with the descent type " + type->to_string());
    return SchubertCondition(std::move(values), from_bars);
  }
  if (type) return SchubertCondition(std::move(values), *type);
  std::vector<int> descents;
  for (int i = 1; i < n; ++i)
    if (values[static_cast<std::size_t>(i - 1)] > values[static_cast<std::size_t>(i)]) descents.push_back(i);
  if (descents.empty()) throw InputError("cannot infer a descent type for " + std::string(text));
  return SchubertCondition(std::move(values), DescentType(n, descents));
}

std::size_t LiftingIndexSet::size() const {
  std::size_t total = 0;
  for (const auto& e : entries) total += e.size();
  return total;
}

int ceil_a(int k, const DescentType& t) {
  if (k < 1 || k > t.last()) throw InputError("ceil_a: k out of range");
  return *std::lower_bound(t.a().begin(), t.a().end(), k);
}

int length(const SchubertCondition& c) {
  const auto& w = c.w();
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

int codim(const SchubertCondition& c) { return c.type().dim() - length(c); }

int rank_function(const SchubertCondition& c, int i, int j) {
  if (i < 0 || i > c.n()) throw InputError("rank_function: i out of range");
  if (j < 1 || j > c.type().s()) throw InputError("rank_function: j out of range");
  const int aj = c.type().at(j);
  int r = 0;
  for (int k = 1; k <= aj; ++k)
    if (c(k) <= i) ++r;
  return r;
}

LiftingIndexSet alpha_set(const SchubertCondition& c) {
  LiftingIndexSet out;
  out.kind = LiftingIndexSet::Kind::FullAlpha;
  const int as = c.type().last();
  out.entries.resize(static_cast<std::size_t>(as));
  out.offsets.assign(static_cast<std::size_t>(as), 0);
  for (int k = 1; k <= as; ++k) {
    const int ck = ceil_a(k, c.type());
    for (int i = 1; i <= ck; ++i)
      if (c(i) > c(k)) out.entries[static_cast<std::size_t>(k - 1)].push_back(i);
  }
  return out;
}

LiftingIndexSet beta_set(const SchubertCondition& c) {
  LiftingIndexSet out;
  out.kind = LiftingIndexSet::Kind::ReducedBeta;
  const int n = c.n();
  const int as = c.type().last();
  out.entries.resize(static_cast<std::size_t>(as));
  out.offsets.assign(static_cast<std::size_t>(as), 0);
  std::vector<int> pos(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) pos[static_cast<std::size_t>(c(k))] = k;
  for (int k = 1; k <= as; ++k) {
    const int ck = ceil_a(k, c.type());
    const int wk = c(k);
    // Smallest value above w(k) sitting at a position after ceil(k).
    int next_outside = n + 1;
    for (int j = ck + 1; j <= n; ++j)
      if (c(j) > wk) next_outside = std::min(next_outside, c(j));
    for (int i = 1; i <= ck; ++i)
      if (c(i) > next_outside) out.entries[static_cast<std::size_t>(k - 1)].push_back(i);
    int m = 0;
    while (wk + m + 1 <= n && pos[static_cast<std::size_t>(wk + m + 1)] <= ck) ++m;
    out.offsets[static_cast<std::size_t>(k - 1)] = m;
  }
  return out;
}

int lifted_equation_count(const SchubertCondition& c, const LiftingIndexSet& lift) {
  int total = 0;
  for (int k = 1; k <= c.type().last(); ++k) total += c.n() - c(k) - lift.offsets[static_cast<std::size_t>(k - 1)];
  return total;
}

SchubertCondition dual_condition(const SchubertCondition& c) {
  const int n = c.n();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = n + 1 - c(n + 1 - i);
  return SchubertCondition(std::move(v), c.type().dual());
}

Projection block_sort_projection(const SchubertCondition& c, const DescentType& b) {
  if (b.n() != c.n()) throw InputError("block_sort_projection: dimension mismatch");
  for (int v : b.a())
    if (!c.type().contains(v)) throw InputError("block_sort_projection: b is not a subset of a");
  std::vector<int> v = c.w();
  int start = 0;
  for (int j = 1; j <= b.s() + 1; ++j) {
    const int end = b.at(j);
    std::sort(v.begin() + start, v.begin() + end);
    start = end;
  }
  SchubertCondition proj(std::move(v), b);
  const bool preserved = codim(c) == codim(proj);
  return {std::move(proj), preserved};
}

namespace {

struct PermutationWalker {
  int n;
  std::vector<int> block_end;  // block_end[p] = last position (exclusive) of p's block
  std::vector<int> w;
  std::vector<bool> used;
  const std::function<void(std::span<const int>)>* visit;

  void run(int p) {
    if (p == n) {
      (*visit)(std::span<const int>(w));
      return;
    }
    const bool block_start = p == 0 || block_end[static_cast<std::size_t>(p - 1)] == p;
    const int floor = block_start ? 0 : w[static_cast<std::size_t>(p - 1)];
    const int remaining_in_block = block_end[static_cast<std::size_t>(p)] - p - 1;
    for (int v = floor + 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      int larger_free = 0;
      for (int u = v + 1; u <= n && larger_free < remaining_in_block; ++u)
        if (!used[static_cast<std::size_t>(u)]) ++larger_free;
      if (larger_free < remaining_in_block) break;
      used[static_cast<std::size_t>(v)] = true;
      w[static_cast<std::size_t>(p)] = v;
      run(p + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  }
};

}  // namespace

void for_each_permutation(const DescentType& t, const std::function<void(std::span<const int>)>& visit) {
  PermutationWalker walker;
  walker.n = t.n();
  walker.block_end.resize(static_cast<std::size_t>(t.n()));
  int start = 0;
  for (int j = 1; j <= t.s() + 1; ++j) {
    const int end = t.at(j);
    for (int p = start; p < end; ++p) walker.block_end[static_cast<std::size_t>(p)] = end;
    start = end;
  }
  walker.w.assign(static_cast<std::size_t>(t.n()), 0);
  walker.used.assign(static_cast<std::size_t>(t.n() + 1), false);
  walker.visit = &visit;
  walker.run(0);
}

void enumerate_conditions(const DescentType& t, const CodimFilter& filter,
                          const std::function<void(const SchubertCondition&)>& visit) {
  const int dim = t.dim();
  for_each_permutation(t, [&](std::span<const int> w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (w[i] > w[j]) ++inv;
    if (!filter.accepts(dim - inv, dim)) return;
    visit(SchubertCondition(std::vector<int>(w.begin(), w.end()), t));
  });
}

std::vector<DescentType> all_descent_types(int n) {
  if (n < 2) throw InputError("all_descent_types needs n >= 2");
  std::vector<DescentType> out;
  for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> a;
    for (int i = 1; i <= n - 1; ++i)
      if (mask & (1u << (i - 1))) a.push_back(i);
    out.emplace_back(n, std::move(a));
  }
  return out;
}

std::uint64_t multinomial_count(const DescentType& t) {
  std::uint64_t total = 1;
  int placed = 0;
  for (int j = 1; j <= t.s() + 1; ++j) {
    const int block = t.at(j) - t.at(j - 1);
    for (int i = 1; i <= block; ++i) {
      ++placed;
      total = total * static_cast<std::uint64_t>(placed) / static_cast<std::uint64_t>(i);
    }
  }
  return total;
}

}  // namespace schubert
