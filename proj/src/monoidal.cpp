#include "dlab/monoidal.hpp"

#include <algorithm>

namespace dlab {

std::string EvaluationGap::describe() const {
  return "nat(X, Z) has " + std::to_string(nat) + " elements, hom(X(k), Z(k)) has " + std::to_string(hom) +
         (injective ? "; injective" : "; not injective") + (surjective ? ", surjective" : ", not surjective") +
         (iso() ? ": iso" : ": not iso");
}

EvaluationGap evaluation_gap_witness(const Diagram<FinSetBase>& x, const Diagram<FinSetBase>& z, std::size_t k) {
  FinSetBase b;
  detail::require_same_shape(x.shape, z.shape);
  auto nats = enumerate_maps(b, x, z);
  auto homs = b.hom(x.at(k), z.at(k));
  EvaluationGap g;
  g.nat = nats.size();
  g.hom = homs.size();
  std::vector<bool> hit(homs.size(), false);
  g.injective = true;
  for (const auto& t : nats) {
    auto it = std::find(homs.begin(), homs.end(), t.at(k));
    auto i = static_cast<std::size_t>(it - homs.begin());
    if (hit[i]) g.injective = false;
    hit[i] = true;
  }
  g.surjective = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  return g;
}

EvaluationGapPreset evaluation_gap_preset() {
  auto one = poset_chain(1);
  FinSetBase b;
  auto arrow = [&](std::size_t s, std::size_t t, std::vector<std::size_t> f) {
    Diagram<FinSetBase> d{one, {{s}, {t}}, std::vector<FinMap>(one->num_morphisms())};
    d.morphisms[one->find_morphism("id0")] = b.identity({s});
    d.morphisms[one->find_morphism("id1")] = b.identity({t});
    d.morphisms[one->find_morphism("a")] = FinMap{s, t, std::move(f)};
    return d;
  };
  return {arrow(1, 1, {0}), arrow(2, 1, {0, 0}), 1};
}

}  // namespace dlab

namespace dlab {

Report eval_gap_report(const EvaluationGapPreset& in, bool preset) {
  FinSetBase b;
  Report rep;
  rep.command = "eval-gap";
  if (preset) rep.parameters.emplace_back("preset", "paper");
  rep.parameters.emplace_back("X", describe(b, in.x));
  rep.parameters.emplace_back("Z", describe(b, in.z));
  rep.parameters.emplace_back("k", in.x.shape->object_id(in.k));
  auto g = evaluation_gap_witness(in.x, in.z, in.k);
  rep.notes.push_back(g.describe());
  if (preset) {
    auto c = make_check("evaluation gap", "nat(X, Z) -> hom(X(k), Z(k)) is not injective (2 elements vs 1)");
    c.expect_with(g.nat == 2 && g.hom == 1 && !g.injective && !g.iso(), [&] { return g.describe(); });
    rep.checks.push_back(std::move(c));
  } else {
    auto c = make_check("evaluation bijective", "nat(X, Z) -> hom(X(k), Z(k)) is a bijection");
    c.expect_with(g.iso(), [&] { return g.describe(); });
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace dlab
