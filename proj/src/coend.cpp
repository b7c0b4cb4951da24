#include "dlab/coend.hpp"

#include <map>

namespace dlab {

CatPtr two_sided_shape(const CatPtr& j, const CatPtr& k, const CatPtr& l) {
  return product(std::vector<CatPtr>{j, opposite(k), k, l});
}

CoendShape coend_shape(const CatPtr& j, const CatPtr& k, const CatPtr& l) {
  CoendShape s{j, k, l, two_sided_shape(j, k, l), product(std::vector<CatPtr>{j, l}), twisted_arrow(k), {}, {}, {}};
  s.indexing = product(std::vector<CatPtr>{j, s.ar.category, l});
  auto p0 = projection(s.indexing, 0), p1 = projection(s.indexing, 1), p2 = projection(s.indexing, 2);
  s.restriction = pairing(s.full, s.indexing, {p0, compose(s.ar.target, p1), compose(s.ar.source, p1), p2});
  s.projection = pairing(s.jl, s.indexing, {p0, p2});
  return s;
}

CoendShape end_shape(const CatPtr& j, const CatPtr& k, const CatPtr& l) {
  CoendShape s{j, k, l, two_sided_shape(j, k, l), product(std::vector<CatPtr>{j, l}), twisted_arrow(k), {}, {}, {}};
  const auto& K = *k;
  auto arop = opposite(s.ar.category);
  // f ↦ (k0, k1); a morphism of Ar(K)^op over (a, b) goes to (a in K^op, b in K).
  Functor src{arop, s.ar.opposite_k, {}, {}}, tgt{arop, k, {}, {}};
  for (std::size_t f = 0; f < K.num_morphisms(); ++f) {
    src.on_objects.push_back(K.source(f));
    tgt.on_objects.push_back(K.target(f));
  }
  for (const auto& [a, b] : s.ar.legs) {
    src.on_morphisms.push_back(a);
    tgt.on_morphisms.push_back(b);
  }
  s.indexing = product(std::vector<CatPtr>{j, arop, l});
  auto p0 = projection(s.indexing, 0), p1 = projection(s.indexing, 1), p2 = projection(s.indexing, 2);
  s.restriction = pairing(s.full, s.indexing, {p0, compose(src, p1), compose(tgt, p1), p2});
  s.projection = pairing(s.jl, s.indexing, {p0, p2});
  return s;
}

Diagram<FinSetBase> hom_diagram(const CatPtr& kp) {
  const auto& K = *kp;
  auto e = terminal_category();
  auto shape = two_sided_shape(e, kp, e);
  std::vector<std::size_t> pos(K.num_morphisms());
  for (std::size_t a = 0; a < K.num_objects(); ++a)
    for (std::size_t b = 0; b < K.num_objects(); ++b) {
      const auto& h = K.hom(a, b);
      for (std::size_t i = 0; i < h.size(); ++i) pos[h[i]] = i;
    }
  Diagram<FinSetBase> d{shape, {}, {}};
  for (std::size_t o = 0; o < shape->num_objects(); ++o) {
    auto c = shape->object_coords(o);
    d.objects.push_back({K.hom(c[1], c[2]).size()});
  }
  for (std::size_t m = 0; m < shape->num_morphisms(); ++m) {
    auto c = shape->morphism_coords(m);
    auto f = c[1], g = c[2];  // f: a' → a in K, read in K^op; g: b → b'
    auto a = K.target(f), b = K.source(g);
    const auto& dom = K.hom(a, b);
    const auto& cod = K.hom(K.source(f), K.target(g));
    FinMap mp{dom.size(), cod.size(), {}};
    for (auto h : dom) mp.table.push_back(pos[K.compose(g, K.compose(h, f))]);
    d.morphisms.push_back(std::move(mp));
  }
  return d;
}

Square pointwise_coend_square(const CoendShape& s, std::size_t j, std::size_t l) {
  auto e = terminal_category();
  auto d = product(std::vector<CatPtr>{e, s.ar.category, e});
  auto ee = product(std::vector<CatPtr>{e, e});
  auto pj = point(s.j, j), pl = point(s.l, l);
  auto v = product_functor(d, s.indexing, {pj, identity_functor(s.ar.category), pl});
  auto p = pairing(ee, d, {projection(d, 0), projection(d, 2)});
  auto u = product_functor(ee, s.jl, {pj, pl});
  Square sq{p, v, s.projection, u, {compose(s.projection, v), compose(u, p), {}}, {}};
  auto id = s.jl->identity(s.jl->object_from_coords({j, l}));
  sq.alpha.components.assign(d->num_objects(), id);
  sq.label = "pointwise coend at (" + s.j->object_id(j) + "," + s.l->object_id(l) + ")";
  return sq;
}

namespace {

// Leaf permutation from `src` block order to `dst` block order.
std::vector<std::size_t> block_perm(const std::vector<std::size_t>& sizes, const std::vector<std::size_t>& dst_order) {
  std::vector<std::size_t> offset(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) offset[i + 1] = offset[i] + sizes[i];
  std::vector<std::size_t> perm;
  for (auto blk : dst_order)
    for (std::size_t i = 0; i < sizes[blk]; ++i) perm.push_back(offset[blk] + i);
  return perm;
}

}  // namespace

FubiniShapes fubini_shapes(const CatPtr& j, const CatPtr& k, const CatPtr& l, const CatPtr& m) {
  FubiniShapes f;
  f.j = j;
  f.k = k;
  f.l = l;
  f.m = m;
  f.kl = product(std::vector<CatPtr>{k, l});
  f.single = coend_shape(j, f.kl, m);
  const std::size_t nj = leaves(j).size(), nk = leaves(k).size(), nl = leaves(l).size(), nm = leaves(m).size();

  auto j3 = product(std::vector<CatPtr>{j, opposite(k), k});
  f.inner_l = coend_shape(j3, l, m);
  f.outer_k = coend_shape(j, k, m);
  // inner_l.full blocks: J, K^op, K, L^op, L, M; single.full: J, K^op, L^op, K, L, M
  f.to_inner_l = permute_leaves(f.inner_l.full, f.single.full, block_perm({nj, nk, nk, nl, nl, nm}, {0, 1, 3, 2, 4, 5}));
  f.regroup_k = regroup(f.outer_k.full, f.inner_l.jl);

  auto j3b = product(std::vector<CatPtr>{j, opposite(l), l});
  f.inner_k = coend_shape(j3b, k, m);
  f.outer_l = coend_shape(j, l, m);
  // inner_k.full blocks: J, L^op, L, K^op, K, M
  f.to_inner_k = permute_leaves(f.inner_k.full, f.single.full, block_perm({nj, nl, nl, nk, nk, nm}, {0, 3, 1, 4, 2, 5}));
  f.regroup_l = regroup(f.outer_l.full, f.inner_k.jl);
  return f;
}

}  // namespace dlab
