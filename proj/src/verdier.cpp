#include "sck/verdier.hpp"

#include <algorithm>
#include <random>

#include "sck/error.hpp"

namespace sck {

ComplexSheaf ComplexSheaf::make(
    SpaceDescriptor space, std::vector<RationalComplex> values,
    std::map<std::pair<std::size_t, std::size_t>, std::map<int, Matrix>>
        restrictions) {
  if (!space.is_tier1())
    fail("TierUnsupported", "complex sheaves live on Tier-1 spaces");
  const auto& l = space.frame().lattice();
  if (values.size() != l.size())
    fail("ParseError", "need one complex per open");
  ComplexSheaf f;
  f.space_ = std::move(space);
  f.values_ = std::move(values);
  f.res_ = std::move(restrictions);
  for (std::size_t u = 0; u < l.size(); ++u)
    for (std::size_t v = 0; v < l.size(); ++v) {
      if (u == v || !l.le(v, u)) continue;
      if (!f.res_.count({u, v}))
        fail("ParseError", "missing restriction " + l.id(u) + " > " + l.id(v));
      f.restriction(u, v);  // validates the chain map
    }
  for (std::size_t u = 0; u < l.size(); ++u)
    for (std::size_t v = 0; v < l.size(); ++v)
      for (std::size_t w = 0; w < l.size(); ++w) {
        if (!(l.le(w, v) && l.le(v, u)) || u == v || v == w) continue;
        auto composite =
            compose(f.restriction(v, w), f.restriction(u, v));
        auto direct = f.restriction(u, w);
        const int lo = f.values_[u].min_degree();
        const int hi = f.values_[u].max_degree();
        for (int deg = lo; deg <= hi; ++deg)
          if (composite.mat(deg) != direct.mat(deg))
            fail("ParseError", "restrictions do not compose at " + l.id(u) +
                                   " > " + l.id(v) + " > " + l.id(w));
      }
  return f;
}

ChainMap ComplexSheaf::restriction(std::size_t open_u,
                                   std::size_t open_v) const {
  if (open_u == open_v) return identity_chain_map(values_[open_u]);
  return ChainMap::make(values_[open_u], values_[open_v],
                        res_.at({open_u, open_v}));
}

StableExcisionReport is_stable_excisive(const ComplexSheaf& sheaf) {
  const auto& l = sheaf.space().frame().lattice();
  StableExcisionReport rep;
  if (!sheaf.at(l.bottom()).is_acyclic()) {
    rep.counterexample = "the empty open does not carry an acyclic complex";
    return rep;
  }
  for (std::size_t u = 0; u < l.size(); ++u)
    for (std::size_t v = u; v < l.size(); ++v) {
      const std::size_t uv = l.join(u, v), iv = l.meet(u, v);
      RationalComplex tf = total_fiber(
          sheaf.restriction(uv, u), sheaf.restriction(v, iv),
          sheaf.restriction(uv, v), sheaf.restriction(u, iv));
      if (!tf.is_acyclic()) {
        rep.counterexample =
            "total fiber at (" + l.id(u) + ", " + l.id(v) + ") is not acyclic";
        return rep;
      }
    }
  rep.ok = true;
  return rep;
}

ChainMap ComplexCosheaf::extension(std::size_t open_w,
                                   std::size_t open_w2) const {
  if (open_w == open_w2) return identity_chain_map(values[open_w]);
  return ChainMap::make(values[open_w], values[open_w2],
                        extensions.at({open_w, open_w2}));
}

namespace {

std::map<int, Matrix> chain_map_tables(const ChainMap& f) {
  std::map<int, Matrix> out;
  const int lo = std::min(f.source.min_degree(), f.target.min_degree());
  const int hi = std::max(f.source.max_degree(), f.target.max_degree());
  for (int deg = lo; deg <= hi; ++deg) {
    if (f.target.dim(deg) == 0 || f.source.dim(deg) == 0) continue;
    out[deg] = f.mat(deg);
  }
  return out;
}

}  // namespace

ComplexCosheaf verdier_dual(const ComplexSheaf& sheaf) {
  auto exc = is_stable_excisive(sheaf);
  if (!exc.ok) fail("NotStableExcisive", exc.counterexample);
  const auto& space = sheaf.space();
  const auto& l = space.frame().lattice();
  const auto& points = *space.points();
  const std::uint64_t full = points.full_mask();

  ComplexCosheaf out;
  out.dual_space = de_groot_dual(space);
  const auto& dl = out.dual_space.frame().lattice();
  const std::size_t top = l.top();

  // VD(W) = fib(F(X) -> F(K)) for K the complementary compact saturated set
  // of the dual open W; K is an upset of the original order, hence an open.
  std::vector<std::size_t> complement_open(dl.size());
  for (std::size_t w = 0; w < dl.size(); ++w) {
    const std::uint64_t k_mask = full & ~dl.mask(w);
    complement_open[w] = space.open_index_of_mask(k_mask);
    out.values.push_back(
        mapping_fiber(sheaf.restriction(top, complement_open[w])));
  }
  for (std::size_t w = 0; w < dl.size(); ++w)
    for (std::size_t w2 = 0; w2 < dl.size(); ++w2) {
      if (w == w2 || !dl.le(w, w2)) continue;
      const std::size_t k = complement_open[w], k2 = complement_open[w2];
      ChainMap ext = fiber_functor_map(
          sheaf.restriction(top, k), sheaf.restriction(top, k2),
          identity_chain_map(sheaf.at(top)), sheaf.restriction(k, k2));
      out.extensions[{w, w2}] = chain_map_tables(ext);
    }
  return out;
}

StableExcisionReport cosheaf_stable_excisive(const ComplexCosheaf& cosheaf) {
  const auto& dl = cosheaf.dual_space.frame().lattice();
  StableExcisionReport rep;
  if (!cosheaf.values[dl.bottom()].is_acyclic()) {
    rep.counterexample = "the empty dual open does not carry an acyclic value";
    return rep;
  }
  for (std::size_t w = 0; w < dl.size(); ++w)
    for (std::size_t w2 = w; w2 < dl.size(); ++w2) {
      const std::size_t cup = dl.join(w, w2), cap = dl.meet(w, w2);
      RationalComplex tf = total_fiber(
          cosheaf.extension(cap, w), cosheaf.extension(w2, cup),
          cosheaf.extension(cap, w2), cosheaf.extension(w, cup));
      if (!tf.is_acyclic()) {
        rep.counterexample = "total complex at (" + dl.id(w) + ", " +
                             dl.id(w2) + ") is not acyclic";
        return rep;
      }
    }
  rep.ok = true;
  return rep;
}

DoubleDualReport verdier_double_dual_check(const ComplexSheaf& sheaf) {
  auto exc = is_stable_excisive(sheaf);
  if (!exc.ok) fail("NotStableExcisive", exc.counterexample);
  const auto& l = sheaf.space().frame().lattice();
  const std::size_t top = l.top(), bottom = l.bottom();
  DoubleDualReport rep;
  rep.ok = true;
  // G'(K) = fib(F(X) -> F(K)); the inverse leg takes the cofiber against
  // G'(∅) = fib(F(X) -> F(∅)).
  RationalComplex g_empty = mapping_fiber(sheaf.restriction(top, bottom));
  for (std::size_t u = 0; u < l.size(); ++u) {
    ChainMap to_empty = fiber_functor_map(
        sheaf.restriction(top, u), sheaf.restriction(top, bottom),
        identity_chain_map(sheaf.at(top)), sheaf.restriction(u, bottom));
    RationalComplex round_trip = mapping_cofiber(to_empty);
    auto h_orig = sheaf.at(u).homology();
    auto h_twice = round_trip.homology();
    if (h_orig != h_twice) rep.ok = false;
    rep.per_open.emplace_back(l.id(u), std::make_pair(h_orig, h_twice));
  }
  return rep;
}

namespace {

/// Deterministic bounded integers from a seeded engine; avoids the
/// distribution classes so runs are reproducible across platforms.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(engine() % n);
  }
};

struct PointDiagram {
  std::vector<RationalComplex> complexes;  // per point
  // transitions are truncation inclusions or zero maps
  bool zero_maps = false;
  std::vector<int> level;  // truncation level per point (inclusion mode)
  RationalComplex ambient;

  ChainMap transition(std::size_t x, std::size_t y) const {
    if (x == y) return identity_chain_map(complexes[x]);
    if (zero_maps) return zero_chain_map(complexes[x], complexes[y]);
    std::map<int, Matrix> mats;
    for (int deg = ambient.min_degree(); deg <= ambient.max_degree(); ++deg) {
      if (deg < level[x] || ambient.dim(deg) == 0) continue;
      // inclusion of truncations: level[y] <= level[x]
      mats[deg] = identity_matrix(ambient.dim(deg));
    }
    return ChainMap::make(complexes[x], complexes[y], std::move(mats));
  }
};

RationalComplex truncate_above(const RationalComplex& a, int level) {
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  for (int deg = a.min_degree(); deg <= a.max_degree(); ++deg) {
    if (deg < level) continue;
    if (a.dim(deg)) dims[deg] = a.dim(deg);
    if (deg >= level && a.dim(deg) && a.dim(deg + 1))
      diffs[deg] = a.differential(deg);
  }
  return RationalComplex::from_parts(std::move(dims), std::move(diffs));
}

/// Chains (strictly increasing vertex sequences) of the subposet on `mask`,
/// lexicographic. Each chain is a vector of point indices.
std::vector<std::vector<std::size_t>> chains_of(const FinitePoset& p,
                                                std::uint64_t mask) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> stack;
  for (std::size_t x = 0; x < p.size(); ++x)
    if ((mask >> x) & 1u) stack.push_back({x});
  // breadth-first growth keeps lexicographic-by-length order deterministic
  for (std::size_t i = 0; i < stack.size(); ++i) {
    out.push_back(stack[i]);
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!((mask >> y) & 1u)) continue;
      if (y != stack[i].back() && p.le(stack[i].back(), y)) {
        auto longer = stack[i];
        longer.push_back(y);
        stack.push_back(std::move(longer));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Ordered-chain (Roos) homotopy limit of the diagram over the points of an
/// open, as one cochain complex. Basis: (chain, ambient basis vector of the
/// last vertex), chains in lexicographic order.
struct RoosBuilder {
  const FinitePoset& points;
  const PointDiagram& diagram;

  struct Layout {
    std::vector<std::vector<std::size_t>> chains;
    // per degree: list of (chain index, internal degree, offset, dim)
    std::map<int, std::vector<std::array<std::size_t, 2>>> slots;  // unused
  };

  std::vector<std::vector<std::size_t>> chains;
  // slot: (chain index, internal degree q); basis offset per (n, slot)
  struct Slot {
    std::size_t chain;
    int q;
    std::size_t offset;
    std::size_t dim;
  };
  std::map<int, std::vector<Slot>> per_degree;

  RoosBuilder(const FinitePoset& p, const PointDiagram& d, std::uint64_t mask)
      : points(p), diagram(d) {
    chains = chains_of(p, mask);
    for (std::size_t c = 0; c < chains.size(); ++c) {
      const int pdeg = static_cast<int>(chains[c].size()) - 1;
      const auto& cx = diagram.complexes[chains[c].back()];
      for (int q = cx.min_degree(); q <= cx.max_degree(); ++q) {
        if (cx.dim(q) == 0) continue;
        auto& slots = per_degree[pdeg + q];
        slots.push_back({c, q, 0, cx.dim(q)});
      }
    }
    for (auto& [n, slots] : per_degree) {
      std::size_t off = 0;
      for (auto& s : slots) {
        s.offset = off;
        off += s.dim;
      }
    }
  }

  std::size_t dim(int n) const {
    auto it = per_degree.find(n);
    if (it == per_degree.end()) return 0;
    return it->second.back().offset + it->second.back().dim;
  }

  const Slot* find_slot(int n, std::size_t chain) const {
    auto it = per_degree.find(n);
    if (it == per_degree.end()) return nullptr;
    for (const auto& s : it->second)
      if (s.chain == chain) return &s;
    return nullptr;
  }

  RationalComplex build() const {
    std::map<int, std::size_t> dims;
    for (const auto& [n, slots] : per_degree) dims[n] = dim(n);
    std::map<int, Matrix> diffs;
    for (const auto& [n, slots] : per_degree) {
      const std::size_t rows = dim(n + 1);
      if (rows == 0) continue;
      Matrix m = zero_matrix(rows, dim(n));
      for (const auto& src : slots) {
        const auto& chain = chains[src.chain];
        const int p = static_cast<int>(chain.size()) - 1;
        const auto& cx = diagram.complexes[chain.back()];
        // internal differential with the (-1)^p twist
        if (cx.dim(src.q + 1)) {
          if (const Slot* dst = find_slot(n + 1, src.chain)) {
            const Matrix& d = cx.differential(src.q);
            const Rat sign((p % 2 == 0) ? 1 : -1);
            for (std::size_t i = 0; i < dst->dim; ++i)
              for (std::size_t j = 0; j < src.dim; ++j)
                m[dst->offset + i][src.offset + j] += sign * d[i][j];
          }
        }
        // cofaces: chains with one more vertex whose i-th face is `chain`
        for (std::size_t c2 = 0; c2 < chains.size(); ++c2) {
          if (chains[c2].size() != chain.size() + 1) continue;
          for (std::size_t drop = 0; drop < chains[c2].size(); ++drop) {
            std::vector<std::size_t> face;
            for (std::size_t i = 0; i < chains[c2].size(); ++i)
              if (i != drop) face.push_back(chains[c2][i]);
            if (face != chain) continue;
            const Slot* dst = find_slot(n + 1, c2);
            if (!dst) continue;
            const Rat sign((drop % 2 == 0) ? 1 : -1);
            if (drop + 1 < chains[c2].size()) {
              // dropped a non-final vertex; identity on the coefficients
              for (std::size_t i = 0; i < src.dim; ++i)
                m[dst->offset + i][src.offset + i] += sign;
            } else {
              // dropped the final vertex: transport along the diagram
              ChainMap t = diagram.transition(chain.back(), chains[c2].back());
              Matrix tm = t.mat(src.q);
              for (std::size_t i = 0; i < dst->dim; ++i)
                for (std::size_t j = 0; j < src.dim; ++j)
                  m[dst->offset + i][src.offset + j] += sign * tm[i][j];
            }
          }
        }
      }
      diffs[n] = std::move(m);
    }
    return RationalComplex::from_parts(std::move(dims), std::move(diffs));
  }

  /// Projection to the Roos complex of a smaller open.
  std::map<int, Matrix> projection_to(const RoosBuilder& smaller) const {
    std::map<int, Matrix> mats;
    for (const auto& [n, slots] : smaller.per_degree) {
      Matrix m = zero_matrix(smaller.dim(n), dim(n));
      for (const auto& dst : slots) {
        // locate the same chain here
        for (const auto& src :
             per_degree.count(n) ? per_degree.at(n) : std::vector<Slot>{}) {
          if (chains[src.chain] != smaller.chains[dst.chain]) continue;
          for (std::size_t i = 0; i < dst.dim; ++i)
            m[dst.offset + i][src.offset + i] = 1;
        }
      }
      mats[n] = std::move(m);
    }
    return mats;
  }
};

}  // namespace

ComplexSheaf random_stable_excisive_sheaf(PosetPtr points,
                                          std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = points->size();
  PointDiagram diagram;
  // small ambient complex: an elementary [Q -> Q] pair plus at most one
  // extra summand, placed in degrees 0..2
  {
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> diffs;
    const int base = static_cast<int>(rng.below(2));
    dims[base] = 1;
    dims[base + 1] = 1;
    const long long scale = 1 + static_cast<long long>(rng.below(3));
    diffs[base] = Matrix{{Rat(scale)}};
    if (rng.below(2) == 0) {
      const int extra = static_cast<int>(rng.below(3));
      dims[extra] += 1;
      // keep the differential supported on the first coordinates only
      if (diffs.count(base)) {
        Matrix d = zero_matrix(dims[base + 1], dims[base]);
        d[0][0] = Rat(scale);
        diffs[base] = std::move(d);
      }
    }
    diagram.ambient = RationalComplex::from_parts(dims, diffs);
  }
  diagram.zero_maps = rng.below(3) == 0;
  diagram.level.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    diagram.level[x] = static_cast<int>(rng.below(3));
  // truncation levels must not grow along the order
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (points->lt(x, y) && diagram.level[y] > diagram.level[x]) {
          diagram.level[y] = diagram.level[x];
          changed = true;
        }
  }
  for (std::size_t x = 0; x < n; ++x)
    diagram.complexes.push_back(
        truncate_above(diagram.ambient, diagram.level[x]));

  SpaceDescriptor space = SpaceDescriptor::finite(points);
  const auto& l = space.frame().lattice();
  std::vector<RoosBuilder> builders;
  builders.reserve(l.size());
  for (std::size_t u = 0; u < l.size(); ++u)
    builders.emplace_back(*points, diagram, l.mask(u));
  std::vector<RationalComplex> values;
  for (std::size_t u = 0; u < l.size(); ++u)
    values.push_back(builders[u].build());
  std::map<std::pair<std::size_t, std::size_t>, std::map<int, Matrix>> res;
  for (std::size_t u = 0; u < l.size(); ++u)
    for (std::size_t v = 0; v < l.size(); ++v) {
      if (u == v || !l.le(v, u)) continue;
      res[{u, v}] = builders[u].projection_to(builders[v]);
    }
  return ComplexSheaf::make(std::move(space), std::move(values),
                            std::move(res));
}

}  // namespace sck
