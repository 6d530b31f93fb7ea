#include "tristrip/partition.hpp"

namespace tristrip {

std::array<Rational, 4> PartitionVector::evaluate(const Rational& x) const {
  return {p[0].evaluate(x), p[1].evaluate(x), p[2].evaluate(x), p[3].evaluate(x)};
}

PartitionVector partitioned_chromatic(const FramedGraph& fg, ChromaticEngine& engine) {
  fg.validate();
  PartitionVector q;
  for (int t = 1; t <= 4; ++t) {
    auto aux = type_auxiliary_graph(fg, static_cast<ColouringType>(t));
    q.p[t - 1] = aux ? engine(*aux) : IntPolynomial{};
  }
  return q;
}

PartitionVector partitioned_chromatic(const FramedGraph& fg, const EngineOptions& options) {
  ChromaticEngine engine(options);
  return partitioned_chromatic(fg, engine);
}

FramedGraph reverse_frame(const FramedGraph& fg) {
  return FramedGraph{fg.graph, {fg.frame[0], fg.frame[3], fg.frame[2], fg.frame[1]}};
}

}  // namespace tristrip
