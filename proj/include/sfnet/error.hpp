#pragma once

#include <stdexcept>
#include <string>

namespace sfnet {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph mutations
struct SelfLoop : Error {
  explicit SelfLoop(int node) : Error("self-loop at node " + std::to_string(node)) {}
};
struct EdgeExists : Error {
  EdgeExists(int u, int v)
      : Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present") {}
};
struct EdgeMissing : Error {
  EdgeMissing(int u, int v)
      : Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present") {}
};
struct NodeOutOfRange : Error {
  NodeOutOfRange(int node, int n)
      : Error("node " + std::to_string(node) + " outside [0," + std::to_string(n) + ")") {}
};
struct GraphComplete : Error {
  GraphComplete() : Error("graph is complete, no edge can be added") {}
};
struct NoEdges : Error {
  NoEdges() : Error("graph has no edges") {}
};
struct NoConnectedPairs : Error {
  NoConnectedPairs() : Error("no connected node pairs, average distance undefined") {}
};

// parsing / io
struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : Error("parse error at line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error("io error: " + msg) {}
};

// fitting
struct DegenerateSequence : Error {
  DegenerateSequence() : Error("sequence has fewer than 2 distinct positive values") {}
};
struct TailTooSmall : Error {
  TailTooSmall() : Error("no tail candidate with at least 2 observations") {}
};
struct AlternativeFitFailed : Error {
  explicit AlternativeFitFailed(const std::string& which)
      : Error("alternative model fit failed: " + which) {}
};
struct EmptySequenceSet : Error {
  EmptySequenceSet() : Error("no degree sequences to classify") {}
};

// generators
struct NotGraphical : Error {
  NotGraphical() : Error("degree sequence is not graphical") {}
};
struct RetriesExhausted : Error {
  explicit RetriesExhausted(int attempts)
      : Error("no simple realization found after " + std::to_string(attempts) + " attempts") {}
};

// attacks
struct NoMediumNonEdge : Error {
  NoMediumNonEdge() : Error("medium-degree node set has no unconnected pair") {}
};
struct NoHubEdge : Error {
  NoHubEdge() : Error("no large-degree node has a neighbor") {}
};
struct NotStrongInitially : Error {
  NotStrongInitially() : Error("input network is not in the strong category") {}
};

// metrics / harness
struct ZeroEdges : Error {
  ZeroEdges() : Error("effectiveness undefined for a network with zero links") {}
};
struct EmptyInput : Error {
  explicit EmptyInput(const std::string& what_is_empty) : Error("empty input: " + what_is_empty) {}
};
struct ConfigInvalid : Error {
  explicit ConfigInvalid(const std::string& msg) : Error("invalid configuration: " + msg) {}
};
struct NoStrongNetworks : Error {
  NoStrongNetworks() : Error("dataset contains no strong networks to attack") {}
};

}  // namespace sfnet
