#include "cvxlat/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cvxlat/errors.hpp"
#include "cvxlat/parallel.hpp"

namespace cvxlat {

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::sdv_violation: return "sdv-violation";
    case WitnessKind::anti_exchange_violation: return "anti-exchange-violation";
    case WitnessKind::d_cycle: return "d-cycle";
    case WitnessKind::biatomicity_violation: return "biatomicity-violation";
    case WitnessKind::weak_atom_violation: return "weak-atom-violation";
    case WitnessKind::m3_sublattice: return "m3-sublattice";
    case WitnessKind::embedding_defect: return "embedding-defect";
  }
  return "unknown";
}

std::size_t Witness::at(const std::string& role) const {
  for (const auto& [r, i] : elements) {
    if (r == role) return i;
  }
  throw std::out_of_range("witness has no role " + role);
}

namespace {

using Index = FiniteLattice::Index;

CheckResult violated(Witness w) { return {false, std::move(w)}; }

Witness sdv_witness(Index x, Index y, Index z) {
  return {WitnessKind::sdv_violation, {{"x", x}, {"y", y}, {"z", z}}, "x∨y = x∨z but x∨(y∧z) differs"};
}

bool sdv_fails(const FiniteLattice& l, Index x, Index y, Index z) {
  const auto u = l.join(x, y);
  return l.join(x, z) == u && l.join(x, l.meet(y, z)) != u;
}

// First violation for a fixed x, scanning y in index order.
std::optional<Witness> jsd_at(const FiniteLattice& l, Index x) {
  const std::size_t n = l.size();
  std::vector<Index> running(n, n);  // running meet per value of x ∨ y; n = none yet
  for (Index y = 0; y < n; ++y) {
    const auto u = l.join(x, y);
    if (running[u] == n) {
      running[u] = y;
      continue;
    }
    const auto m = l.meet(running[u], y);
    if (l.join(x, m) != u) return sdv_witness(x, running[u], y);
    running[u] = m;
  }
  return std::nullopt;
}

template <class PerItem>
std::optional<Witness> first_witness_parallel(std::size_t count, PerItem per_item) {
  std::vector<std::optional<Witness>> found(count);
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count()) if (n > 32)
  for (long long i = 0; i < n; ++i) found[i] = per_item(static_cast<std::size_t>(i));
  for (auto& w : found) {
    if (w) return std::move(w);
  }
  return std::nullopt;
}

}  // namespace

CheckResult check_jsd(const FiniteLattice& l) {
  auto w = first_witness_parallel(l.size(), [&](std::size_t x) { return jsd_at(l, x); });
  return w ? violated(std::move(*w)) : CheckResult{};
}

CheckResult check_jsd_reference(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = y + 1; z < n; ++z) {
        if (sdv_fails(l, x, y, z)) return violated(sdv_witness(x, y, z));
      }
    }
  }
  return {};
}

CheckResult check_weak_atom_property(const FiniteLattice& l) {
  const auto atoms = l.atoms();
  for (Index x = 0; x < l.size(); ++x) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      for (std::size_t j = i + 1; j < atoms.size(); ++j) {
        const auto y = atoms[i], z = atoms[j];
        if (l.join(x, y) == l.join(x, z) && !(l.leq(y, x) && l.leq(z, x))) {
          return violated({WitnessKind::weak_atom_violation, {{"x", x}, {"y", y}, {"z", z}}, "x∨y = x∨z with y ≠ z atoms not both below x"});
        }
      }
    }
  }
  return {};
}

namespace {

// Least closed set containing ground element e.
std::vector<Index> principal_closures(const FiniteLattice& l) {
  if (!l.has_sets()) throw InputError("anti-exchange needs a lattice of closed sets");
  std::vector<Index> out(l.universe());
  for (std::size_t e = 0; e < l.universe(); ++e) {
    const Mask bit = Mask{1} << e;
    Mask acc = ~Mask{0};
    bool any = false;
    for (const Mask s : l.sets()) {
      if (s & bit) {
        acc &= s;
        any = true;
      }
    }
    if (!any) throw InputError("no closed set contains element " + std::to_string(e));
    out[e] = *l.index_of(acc);
  }
  return out;
}

bool anti_exchange_fails(const FiniteLattice& l, const std::vector<Index>& principal, Index a, std::size_t x,
                         std::size_t y) {
  const Mask bx = Mask{1} << x, by = Mask{1} << y;
  const Mask sa = l.set(a);
  if (x == y || (sa & bx) || (sa & by)) return false;
  return (l.set(l.join(a, principal[y])) & bx) && (l.set(l.join(a, principal[x])) & by);
}

}  // namespace

CheckResult check_anti_exchange(const FiniteLattice& l) {
  const auto principal = principal_closures(l);
  const std::size_t u = l.universe();
  auto w = first_witness_parallel(l.size(), [&](std::size_t a) -> std::optional<Witness> {
    for (std::size_t x = 0; x < u; ++x) {
      for (std::size_t y = x + 1; y < u; ++y) {
        if (anti_exchange_fails(l, principal, a, x, y)) {
          return Witness{WitnessKind::anti_exchange_violation, {{"A", a}, {"x", x}, {"y", y}},
                         "x ∈ cl(A∪{y}) and y ∈ cl(A∪{x})"};
        }
      }
    }
    return std::nullopt;
  });
  return w ? violated(std::move(*w)) : CheckResult{};
}

CheckResult check_anti_exchange(const FiniteGround& x, std::size_t max_ground) {
  return check_anti_exchange(enumerate_closed_sets(x, max_ground));
}

CheckResult check_anti_exchange(const ClosureOperator& op) { return check_anti_exchange(closure_lattice(op)); }

std::vector<std::pair<std::size_t, std::size_t>> d_relation(const FiniteLattice& l) {
  const auto ji = l.join_irreducibles();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rows(ji.size());
  const long long count = static_cast<long long>(ji.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_count()) if (count > 16)
  for (long long ia = 0; ia < count; ++ia) {
    const auto a = ji[ia];
    for (const auto b : ji) {
      if (a == b) continue;
      // Every c < b lies below the unique lower cover of b.
      const auto b_low = l.lower_covers(b)[0];
      for (Index p = 0; p < l.size(); ++p) {
        if (l.leq(a, l.join(b, p)) && !l.leq(a, l.join(b_low, p))) {
          rows[ia].emplace_back(a, b);
          break;
        }
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto& r : rows) edges.insert(edges.end(), r.begin(), r.end());
  return edges;
}

namespace {

bool d_holds(const FiniteLattice& l, Index a, Index b) {
  if (a == b || !l.is_join_irreducible(a) || !l.is_join_irreducible(b)) return false;
  const auto b_low = l.lower_covers(b)[0];
  for (Index p = 0; p < l.size(); ++p) {
    if (l.leq(a, l.join(b, p)) && !l.leq(a, l.join(b_low, p))) return true;
  }
  return false;
}

}  // namespace

CheckResult check_lower_bounded(const FiniteLattice& l) {
  const auto edges = d_relation(l);
  std::map<Index, std::vector<Index>> adj;
  for (const auto& [a, b] : edges) adj[a].push_back(b);
  // Iterative DFS with colors; a back edge closes a cycle.
  std::map<Index, int> color;
  std::map<Index, Index> parent;
  for (const auto& [start, _] : adj) {
    if (color[start] != 0) continue;
    std::vector<std::pair<Index, std::size_t>> stack{{start, 0}};
    color[start] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto& out = adj[node];
      if (next == out.size()) {
        color[node] = 2;
        stack.pop_back();
        continue;
      }
      const Index succ = out[next++];
      if (color[succ] == 1) {
        std::vector<Index> cycle{succ};
        for (Index cur = node; cur != succ; cur = parent[cur]) cycle.push_back(cur);
        std::reverse(cycle.begin() + 1, cycle.end());
        Witness w{WitnessKind::d_cycle, {}, "each element is D-related to the next, cyclically"};
        for (std::size_t k = 0; k < cycle.size(); ++k) w.elements.emplace_back("d" + std::to_string(k), cycle[k]);
        return violated(std::move(w));
      }
      if (color[succ] == 0) {
        color[succ] = 1;
        parent[succ] = node;
        stack.emplace_back(succ, 0);
      }
    }
  }
  return {};
}

CheckResult check_biatomic(const FiniteLattice& l) {
  const auto atoms = l.atoms();
  const std::size_t n = l.size();
  std::vector<std::vector<Index>> atoms_below(n);
  for (Index y = 0; y < n; ++y) {
    for (const auto a : atoms) {
      if (l.leq(a, y)) atoms_below[y].push_back(a);
    }
  }
  auto w = first_witness_parallel(atoms.size(), [&](std::size_t ix) -> std::optional<Witness> {
    const auto x = atoms[ix];
    for (Index y = 0; y < n; ++y) {
      if (y == l.bottom()) continue;
      for (Index z = y; z < n; ++z) {
        if (z == l.bottom() || !l.leq(x, l.join(y, z))) continue;
        bool ok = false;
        for (const auto y1 : atoms_below[y]) {
          for (const auto z1 : atoms_below[z]) {
            if (l.leq(x, l.join(y1, z1))) {
              ok = true;
              break;
            }
          }
          if (ok) break;
        }
        if (!ok) {
          return Witness{WitnessKind::biatomicity_violation, {{"x", x}, {"y", y}, {"z", z}},
                         "x <= y∨z but no atoms y' <= y, z' <= z with x <= y'∨z'"};
        }
      }
    }
    return std::nullopt;
  });
  return w ? violated(std::move(*w)) : CheckResult{};
}

namespace {

bool is_m3(const FiniteLattice& l, Index a, Index b, Index c) {
  if (l.leq(a, b) || l.leq(b, a) || l.leq(a, c) || l.leq(c, a) || l.leq(b, c) || l.leq(c, b)) return false;
  const auto m = l.meet(a, b), j = l.join(a, b);
  return l.meet(a, c) == m && l.meet(b, c) == m && l.join(a, c) == j && l.join(b, c) == j;
}

}  // namespace

std::optional<Witness> find_m3(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (l.leq(a, b) || l.leq(b, a)) continue;
      for (Index c = b + 1; c < n; ++c) {
        if (is_m3(l, a, b, c)) {
          return Witness{WitnessKind::m3_sublattice,
                         {{"bottom", l.meet(a, b)}, {"a", a}, {"b", b}, {"c", c}, {"top", l.join(a, b)}},
                         "a, b, c pairwise have the same meet and the same join"};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
      }
    }
  }
  return true;
}

namespace {

void check_map(const LatticeMap& f) {
  if (!f.source || !f.target) throw InputError("lattice map without source or target");
  if (f.image.size() != f.source->size()) throw InputError("lattice map is not total");
  for (const auto i : f.image) {
    if (i >= f.target->size()) throw InputError("lattice map points outside its target");
  }
}

std::optional<Witness> homomorphism_defect(const LatticeMap& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  for (Index a = 0; a < s.size(); ++a) {
    for (Index b = a + 1; b < s.size(); ++b) {
      if (f.image[s.meet(a, b)] != t.meet(f.image[a], f.image[b])) {
        return Witness{WitnessKind::embedding_defect, {{"a", a}, {"b", b}}, "meet not preserved"};
      }
      if (f.image[s.join(a, b)] != t.join(f.image[a], f.image[b])) {
        return Witness{WitnessKind::embedding_defect, {{"a", a}, {"b", b}}, "join not preserved"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CheckResult verify_homomorphism(const LatticeMap& f) {
  check_map(f);
  auto w = homomorphism_defect(f);
  return w ? violated(std::move(*w)) : CheckResult{};
}

CheckResult verify_embedding(const LatticeMap& f) {
  check_map(f);
  std::map<std::size_t, Index> seen;
  for (Index a = 0; a < f.image.size(); ++a) {
    const auto [it, fresh] = seen.emplace(f.image[a], a);
    if (!fresh) return violated({WitnessKind::embedding_defect, {{"a", it->second}, {"b", a}}, "not injective"});
  }
  return verify_homomorphism(f);
}

bool revalidate(const FiniteLattice& l, const Witness& w) {
  switch (w.kind) {
    case WitnessKind::sdv_violation:
      return sdv_fails(l, w.at("x"), w.at("y"), w.at("z"));
    case WitnessKind::weak_atom_violation: {
      const auto x = w.at("x"), y = w.at("y"), z = w.at("z");
      return y != z && l.lower_covers(y) == std::vector<Index>{l.bottom()} &&
             l.lower_covers(z) == std::vector<Index>{l.bottom()} && l.join(x, y) == l.join(x, z) &&
             !(l.leq(y, x) && l.leq(z, x));
    }
    case WitnessKind::anti_exchange_violation:
      return anti_exchange_fails(l, principal_closures(l), w.at("A"), w.at("x"), w.at("y"));
    case WitnessKind::d_cycle: {
      const auto k = w.elements.size();
      if (k < 2) return false;
      for (std::size_t i = 0; i < k; ++i) {
        if (!d_holds(l, w.elements[i].second, w.elements[(i + 1) % k].second)) return false;
      }
      return true;
    }
    case WitnessKind::biatomicity_violation: {
      const auto x = w.at("x"), y = w.at("y"), z = w.at("z");
      if (y == l.bottom() || z == l.bottom() || !l.leq(x, l.join(y, z))) return false;
      for (const auto y1 : l.atoms()) {
        for (const auto z1 : l.atoms()) {
          if (l.leq(y1, y) && l.leq(z1, z) && l.leq(x, l.join(y1, z1))) return false;
        }
      }
      return true;
    }
    case WitnessKind::m3_sublattice: {
      const auto a = w.at("a"), b = w.at("b"), c = w.at("c");
      return is_m3(l, a, b, c) && w.at("bottom") == l.meet(a, b) && w.at("top") == l.join(a, b);
    }
    case WitnessKind::embedding_defect:
      return false;
  }
  return false;
}

bool revalidate(const LatticeMap& f, const Witness& w) {
  if (w.kind != WitnessKind::embedding_defect) return false;
  check_map(f);
  const auto a = w.at("a"), b = w.at("b");
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (w.detail == "not injective") return a != b && f.image[a] == f.image[b];
  if (w.detail == "meet not preserved") return f.image[s.meet(a, b)] != t.meet(f.image[a], f.image[b]);
  if (w.detail == "join not preserved") return f.image[s.join(a, b)] != t.join(f.image[a], f.image[b]);
  return false;
}

}  // namespace cvxlat
