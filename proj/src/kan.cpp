#include "dlab/kan.hpp"

namespace dlab {

Square comma_square(const Functor& u, std::size_t k) {
  auto cc = comma(u, k);
  auto pt = point(u.target, k);
  auto col = collapse(cc.category);
  Square s{col, cc.projection, u, pt, {compose(u, cc.projection), compose(pt, col), {}}, {}};
  for (const auto& e : cc.entries) s.alpha.components.push_back(e.second);
  s.label = "(" + u.source->name() + "/" + u.target->object_id(k) + ") over " + u.target->name();
  return s;
}

Square coslice_square(const Functor& u, std::size_t k) {
  auto cc = coslice(u, k);
  auto pt = point(u.target, k);
  auto col = collapse(cc.category);
  Square s{col, cc.projection, u, pt, {compose(pt, col), compose(u, cc.projection), {}}, {}};
  for (const auto& e : cc.entries) s.alpha.components.push_back(e.second);
  s.label = "(" + u.target->object_id(k) + "/" + u.source->name() + ") over " + u.target->name();
  return s;
}

void check_square(const Square& s, bool left) {
  if (!same_category(s.p.source, s.v.source) || !same_category(s.v.target, s.q.source) ||
      !same_category(s.p.target, s.u.source) || !same_category(s.q.target, s.u.target))
    throw CategoryError("malformed square: boundary functors do not compose");
  auto qv = compose(s.q, s.v), up = compose(s.u, s.p);
  const auto& want_src = left ? qv : up;
  const auto& want_tgt = left ? up : qv;
  if (!(s.alpha.source == want_src) || !(s.alpha.target == want_tgt))
    throw CategoryError("malformed square: 2-cell has the wrong boundary");
  auto vs = validate(s.alpha);
  if (!vs.empty()) throw CategoryError("malformed square: " + to_string(vs));
}

}  // namespace dlab
