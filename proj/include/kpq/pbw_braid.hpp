#pragma once

// Kostant partitions under a simple reflection: the bijection induced by s_i
// on partitions without an alpha_i part, its realisation by BGP reflection
// functors, and compatibility with the order.

#include "kpq/kostant.hpp"
#include "kpq/ledger.hpp"
#include "kpq/quiver_rep.hpp"

namespace kpq {

/// Multiplicity of the part alpha_i.
Coord simple_part_multiplicity(const KostantPartition& lambda, const ConvexOrder& order, Vertex i);

/// For a sink i: lambda has no alpha_i part. Cross-checked against
/// surjectivity of (+)_{j->i} M_j -> M_i on M(lambda); disagreement throws
/// InternalError. Throws kpq::Error if i is not a sink.
template <class F>
bool in_ker_locus(const RepContext<F>& ctx, const KostantPartition& lambda, Vertex i) {
  if (!ctx.quiver().is_sink(i)) throw Error("vertex " + std::to_string(i + 1) + " is not a sink");
  bool combinatorial = simple_part_multiplicity(lambda, ctx.order(), i) == 0;
  auto m = ctx.rep_of_kp(lambda);
  bool surjective = rank(ctx.field(), sink_map(m, i)) == static_cast<std::size_t>(m.dims[static_cast<std::size_t>(i)]);
  if (combinatorial != surjective) throw InternalError("S_i summand and surjectivity disagree");
  return combinatorial;
}

/// For a source i: lambda has no alpha_i part, cross-checked against
/// injectivity of M_i -> (+)_{i->j} M_j.
template <class F>
bool in_coker_locus(const RepContext<F>& ctx, const KostantPartition& lambda, Vertex i) {
  if (!ctx.quiver().is_source(i)) throw Error("vertex " + std::to_string(i + 1) + " is not a source");
  bool combinatorial = simple_part_multiplicity(lambda, ctx.order(), i) == 0;
  auto m = ctx.rep_of_kp(lambda);
  bool injective = rank(ctx.field(), source_map(m, i)) == static_cast<std::size_t>(m.dims[static_cast<std::size_t>(i)]);
  if (combinatorial != injective) throw InternalError("S_i summand and injectivity disagree");
  return combinatorial;
}

/// Replaces every part beta by s_i(beta), keeping multiplicities, and indexes
/// the result by `target`. Throws kpq::Error if lambda has an alpha_i part.
KostantPartition reflect_kp(Vertex i, const KostantPartition& lambda, const ConvexOrder& source,
                            const ConvexOrder& target);

/// iso_class(T_i M(lambda)) == reflect_kp(i, lambda). `reflected` must be the
/// context of reflect_quiver(i, ctx.quiver()) over the same field.
template <class F>
bool verify_reflection(const RepContext<F>& ctx, const RepContext<F>& reflected, Vertex i,
                       const KostantPartition& lambda) {
  if (!in_ker_locus(ctx, lambda, i)) throw Error("partition has an S_i summand");
  if (!(reflected.quiver() == reflect_quiver(i, ctx.quiver()))) throw Error("reflected context has the wrong quiver");
  auto image = bgp_reflect_rep(i, ctx.rep_of_kp(lambda));
  return reflected.iso_class(image) == reflect_kp(i, lambda, ctx.order(), reflected.order());
}

/// kp_leq is preserved and reflected by reflect_kp on the locus of KP(nu)
/// without alpha_i parts.
bool order_compat(Vertex i, const RootVector& nu, const ConvexOrder& order, const ConvexOrder& reflected_order,
                  const OrientationLedger& ledger);

}  // namespace kpq
