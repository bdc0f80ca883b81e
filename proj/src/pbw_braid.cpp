#include "kpq/pbw_braid.hpp"

namespace kpq {

Coord simple_part_multiplicity(const KostantPartition& lambda, const ConvexOrder& order, Vertex i) {
  auto pos = order.position(RootVector::simple(order.datum.rank(), i));
  if (!pos) throw InternalError("simple root missing from the order");
  return lambda.mult[*pos];
}

KostantPartition reflect_kp(Vertex i, const KostantPartition& lambda, const ConvexOrder& source,
                            const ConvexOrder& target) {
  if (simple_part_multiplicity(lambda, source, i) != 0)
    throw Error("cannot reflect a partition with an alpha_" + std::to_string(i + 1) + " part");
  std::vector<Coord> mult(target.size(), 0);
  for (std::size_t t = 0; t < source.size(); ++t) {
    if (!lambda.mult[t]) continue;
    auto image = reflect_root(source.datum, i, source.beta[t]);
    auto pos = target.position(image);
    if (!pos) throw InternalError("reflected part is not a positive root");
    mult[*pos] += lambda.mult[t];
  }
  auto out = make_kp(target, std::move(mult));
  if (out.nu != reflect_root(source.datum, i, lambda.nu)) throw InternalError("reflected partition has the wrong weight");
  return out;
}

bool order_compat(Vertex i, const RootVector& nu, const ConvexOrder& order, const ConvexOrder& reflected_order,
                  const OrientationLedger& ledger) {
  std::vector<KostantPartition> locus;
  for (auto& lambda : enumerate_kp(order, nu))
    if (simple_part_multiplicity(lambda, order, i) == 0) locus.push_back(std::move(lambda));
  std::vector<KostantPartition> images;
  for (const auto& lambda : locus) images.push_back(reflect_kp(i, lambda, order, reflected_order));
  for (std::size_t a = 0; a < locus.size(); ++a)
    for (std::size_t b = 0; b < locus.size(); ++b)
      if (kp_leq(locus[a], locus[b], order, ledger) != kp_leq(images[a], images[b], reflected_order, ledger))
        return false;
  return true;
}

}  // namespace kpq
