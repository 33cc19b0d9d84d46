#include "cvxlat/verify/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <iterator>
#include <set>

#include "cvxlat/errors.hpp"

namespace cvxlat::verify {

namespace {

using Row = std::vector<Rat>;

// Gauss-Jordan on [a | b]; nothing unless the system has exactly one solution.
std::optional<Row> solve(std::vector<Row> a, Row b) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t r = 0; r < rows; ++r) a[r].push_back(b[r]);
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const Rat inv = 1 / a[rank][c];
    for (auto& v : a[rank]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(a[r][c]) == 0) continue;
      const Rat f = a[r][c];
      for (std::size_t k = c; k <= cols; ++k) a[r][k] -= f * a[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (sgn(a[r][cols]) != 0) return std::nullopt;
  }
  if (rank < cols) return std::nullopt;
  Row x(cols);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = a[r][cols];
  return x;
}

// One nonzero vector orthogonal to the rows, when they have corank one.
std::optional<Row> normal_vector(const std::vector<Row>& rows, std::size_t dim) {
  for (std::size_t fix = 0; fix < dim; ++fix) {
    // Set coordinate `fix` to 1 and solve for the rest.
    std::vector<Row> a;
    Row b;
    for (const auto& r : rows) {
      Row eq;
      for (std::size_t c = 0; c < dim; ++c) {
        if (c != fix) eq.push_back(r[c]);
      }
      a.push_back(eq);
      b.push_back(-r[fix]);
    }
    if (dim == 1) return Row{1};
    Row n(dim);
    // Square system of size dim - 1.
    if (auto sol = solve(a, b)) {
      std::size_t k = 0;
      for (std::size_t c = 0; c < dim; ++c) n[c] = c == fix ? Rat(1) : (*sol)[k++];
      return n;
    }
  }
  return std::nullopt;
}

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  const std::function<bool(const std::vector<std::size_t>&)>& visit, bool& stop) {
  if (stop) return;
  if (cur.size() == k) {
    stop = visit(cur);
    return;
  }
  for (std::size_t i = start; i < n && !stop; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, visit, stop);
    cur.pop_back();
  }
}

void for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> cur;
  bool stop = false;
  combinations(n, k, 0, cur, visit, stop);
}

// Barycentric weights of q over pts, when pts are affinely independent and q is on their hull's span.
std::optional<Row> weights(const QPoint& q, const std::vector<QPoint>& pts) {
  const std::size_t dim = q.dim();
  std::vector<Row> a(dim + 1, Row(pts.size()));
  Row b(dim + 1);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t k = 0; k < pts.size(); ++k) a[c][k] = pts[k][c];
    b[c] = q[c];
  }
  for (std::size_t k = 0; k < pts.size(); ++k) a[dim][k] = 1;
  b[dim] = 1;
  return solve(a, b);
}

}  // namespace

std::optional<HullChain> hull_chain(const QPoint& q, const std::vector<QPoint>& y) {
  const std::size_t max_k = std::min(q.dim() + 1, y.size());
  std::optional<HullChain> found;
  for (std::size_t k = 1; k <= max_k && !found; ++k) {
    for_each_combination(y.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<QPoint> s;
      for (const auto i : idx) s.push_back(y[i]);
      const auto w = weights(q, s);
      if (!w || std::any_of(w->begin(), w->end(), [](const Rat& v) { return sgn(v) < 0; })) return false;
      HullChain h{s, {s[0]}};
      Rat mass = (*w)[0];
      for (std::size_t j = 1; j < s.size(); ++j) {
        if (sgn((*w)[j]) == 0) continue;
        const Rat t = (*w)[j] / (mass + (*w)[j]);
        const QPoint& z = h.chain.back();
        h.chain.push_back(z + t * (s[j] - z));
        mass += (*w)[j];
      }
      if (h.chain.back() != q) throw ConstructionError("hull chain does not end at the query point");
      found = std::move(h);
      return true;
    });
  }
  return found;
}

bool hull_oracle(const QPoint& q, const std::vector<QPoint>& y) { return hull_chain(q, y).has_value(); }

std::vector<Mask> brute_closed_sets(const std::vector<QPoint>& x) {
  const std::size_t n = x.size();
  if (n == 0 || n > 16) throw InputError("brute force scan needs 1..16 points");
  const std::size_t dim = x[0].dim();
  std::vector<std::vector<Mask>> witness(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) others.push_back(j);
    }
    for (std::size_t k = 1; k <= std::min(dim + 1, others.size()); ++k) {
      for_each_combination(others.size(), k, [&](const std::vector<std::size_t>& idx) {
        Mask m = 0;
        std::vector<QPoint> s;
        for (const auto c : idx) {
          m |= Mask{1} << others[c];
          s.push_back(x[others[c]]);
        }
        const bool dominated = std::any_of(witness[i].begin(), witness[i].end(), [&](Mask w) { return (w & m) == w; });
        if (!dominated && hull_oracle(x[i], s)) witness[i].push_back(m);
        return false;
      });
    }
  }
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if ((m >> i) & 1U) continue;
      for (const auto w : witness[i]) {
        if ((w & m) == w) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(m);
  }
  return out;
}

std::size_t brute_subm_count(std::size_t n) {
  if (n > 3) throw InputError("brute force Sub∧ count supports n <= 3");
  const std::size_t m = std::size_t{1} << (n + 1);
  std::size_t count = 0;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << m); ++f) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      if (!((f >> a) & 1U)) continue;
      for (std::size_t b = a + 1; b < m; ++b) {
        if (((f >> b) & 1U) && !((f >> (a & b)) & 1U)) {
          ok = false;
          break;
        }
      }
    }
    count += ok;
  }
  return count;
}

std::vector<std::pair<std::size_t, std::size_t>> literal_d_relation(const FiniteLattice& l) {
  std::vector<std::size_t> ji;
  for (std::size_t a = 0; a < l.size(); ++a) {
    std::size_t lower = 0;
    for (std::size_t c = 0; c < l.size(); ++c) {
      if (l.less(c, a)) {
        bool cover = true;
        for (std::size_t d = 0; d < l.size() && cover; ++d) cover = !(l.less(c, d) && l.less(d, a));
        lower += cover;
      }
    }
    if (lower == 1) ji.push_back(a);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto a : ji) {
    for (const auto b : ji) {
      if (a == b) continue;
      for (std::size_t p = 0; p < l.size(); ++p) {
        if (!l.leq(a, l.join(b, p))) continue;
        bool minimal = true;
        for (std::size_t c = 0; c < l.size() && minimal; ++c) {
          if (l.less(c, b) && l.leq(a, l.join(c, p))) minimal = false;
        }
        if (minimal) {
          out.emplace_back(a, b);
          break;
        }
      }
    }
  }
  return out;
}

bool literal_d_cycle(const FiniteLattice& l) {
  const auto edges = literal_d_relation(l);
  const std::size_t n = l.size();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : edges) r[a][b] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] || r[k][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i][i]) return true;
  }
  return false;
}

std::size_t brute_face_count(const std::vector<QPoint>& v) {
  if (v.empty()) throw InputError("no vertices");
  const std::size_t dim = v[0].dim();
  if (v.size() == 1) return 1;
  std::set<std::vector<std::size_t>> facets;
  for_each_combination(v.size(), dim, [&](const std::vector<std::size_t>& idx) {
    std::vector<Row> rows;
    for (std::size_t k = 1; k < idx.size(); ++k) {
      Row r(dim);
      for (std::size_t c = 0; c < dim; ++c) r[c] = v[idx[k]][c] - v[idx[0]][c];
      rows.push_back(r);
    }
    const auto nrm = normal_vector(rows, dim);
    if (!nrm) return false;
    bool pos = false, neg = false;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rat s = 0;
      for (std::size_t c = 0; c < dim; ++c) s += (*nrm)[c] * (v[i][c] - v[idx[0]][c]);
      if (sgn(s) > 0) pos = true;
      if (sgn(s) < 0) neg = true;
      if (sgn(s) == 0) on.push_back(i);
    }
    if (!(pos && neg) && (pos || neg)) facets.insert(on);
    return false;
  });
  std::set<std::vector<std::size_t>> faces(facets.begin(), facets.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::vector<std::size_t>> cur(faces.begin(), faces.end());
    for (const auto& f : cur) {
      for (const auto& g : facets) {
        std::vector<std::size_t> h;
        std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(h));
        if (!h.empty() && faces.insert(h).second) grew = true;
      }
    }
  }
  return faces.size() + 1;
}

}  // namespace cvxlat::verify
