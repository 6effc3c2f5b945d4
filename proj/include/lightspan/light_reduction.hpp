#pragma once

#include <functional>
#include <string>

#include "lightspan/graph.hpp"

namespace lightspan {

/// A spanner construction usable under any weight function. The reduction
/// measures its lightness on the reweighted instance rather than trusting a
/// declared bound.
struct SpannerBuilder {
  std::string name;
  std::function<Subgraph(const Graph&)> build;
};

/// New graph with non-tree edge weights multiplied by 1/delta; `tree` must be
/// the MST of g (verified). The MST of the result has the same edge ids.
Graph reweight(const Graph& g, const Subgraph& tree, double delta);

struct ReduceResult {
  Subgraph spanner;  // builder output united with the MST, original weights
  double delta = 1.0;
  double base_lightness = 1.0;     // builder lightness on the reweighted graph
  double lightness = 1.0;          // measured on the original graph
  double excess_weight = 0.0;      // w(H) - w(T)
  double reweighted_excess = 0.0;  // w'(E_H' \ T)
};

/// Lightness-for-distortion trade: run the builder on the reweighted graph
/// and return its output united with the MST. Lightness becomes
/// 1 + delta * base_lightness while every distortion bound of the builder
/// weakens by the factor 1/delta.
ReduceResult reduce(const SpannerBuilder& builder, const Graph& g,
                    double delta);

}  // namespace lightspan
