#pragma once

#include <stdexcept>

namespace lightspan {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DisconnectedGraph : Error { using Error::Error; };
struct InvalidVertex : Error { using Error::Error; };
struct NegativeWeight : Error { using Error::Error; };
struct EmptySourceSet : Error { using Error::Error; };
struct IdenticalPoints : Error { using Error::Error; };
struct AlphaOutOfRange : Error { using Error::Error; };
struct DeltaOutOfRange : Error { using Error::Error; };
struct NotTheMst : Error { using Error::Error; };
struct NotATree : Error { using Error::Error; };
struct NotSpanning : Error { using Error::Error; };
struct ContractiveEmbedding : Error { using Error::Error; };
struct RankingMismatch : Error { using Error::Error; };
struct DegenerateMetric : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace lightspan
