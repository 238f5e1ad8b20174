#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddjoin/multigraph.hpp"

namespace oddjoin {

/// A signed graft (G, Sigma, T): a multigraph, a signature Sigma of edges and
/// an even-sized set T of terminals.
class SignedGraft {
 public:
  SignedGraft() = default;
  /// Throws InputError when Sigma or T reference unknown ids or |T| is odd.
  SignedGraft(Multigraph g, EdgeSet sigma, VertexSet terminals);

  const Multigraph& graph() const { return g_; }
  EdgeSet sigma() const { return sigma_; }
  VertexSet terminals() const { return terminals_; }
  int num_vertices() const { return g_.num_vertices(); }
  int num_edges() const { return g_.num_edges(); }

  /// |s & Sigma| is odd.
  bool is_odd(EdgeSet s) const { return (s & sigma_).size() % 2 == 1; }

  bool operator==(const SignedGraft&) const = default;

 private:
  Multigraph g_;
  EdgeSet sigma_;
  VertexSet terminals_;
};

enum class CoverClass { kNeither, kSignature, kTCut, kBoth };

std::string to_string(CoverClass c);

/// An edge set together with the reason it meets every odd T-join oddly.
struct Cover {
  EdgeSet edges;
  CoverClass kind = CoverClass::kNeither;
};

bool is_odd_tjoin(const SignedGraft& sg, EdgeSet s);
/// True iff some odd T-join exists.
bool has_odd_tjoin(const SignedGraft& sg);
/// Every odd T-join, ordered by bitmask value.
std::vector<EdgeSet> odd_tjoins(const SignedGraft& sg);
/// An odd T-join is inclusion-wise minimal exactly when every circuit it
/// contains is odd, i.e. its cycle space has rank 0, or rank 1 with an odd
/// circuit.
bool is_minimal_odd_tjoin(const SignedGraft& sg, EdgeSet s);
/// Inclusion-wise minimal odd T-joins, sorted by lex_less.
std::vector<EdgeSet> minimal_odd_tjoins(const SignedGraft& sg);

/// Split of a minimal odd T-join with |T| <= 2 into an st-path P and a
/// circuit C sharing at most one vertex. For T empty, P is empty; for an
/// odd st-path, C is empty.
struct JoinDecomposition {
  EdgeSet path;
  EdgeSet circuit;
};
/// Throws InputError when |T| > 2 or `join` is not a minimal odd T-join.
JoinDecomposition decompose(const SignedGraft& sg, EdgeSet join);

/// (G, Sigma ^ delta(U), T). Throws InvalidResignError when |U & T| is odd.
SignedGraft resign(const SignedGraft& sg, VertexSet shore);
/// Least Sigma' (by bitmask) among all resignings of sg.
EdgeSet canonical_signature(const SignedGraft& sg);

SignedGraft delete_edge(const SignedGraft& sg, EdgeId e);

enum class OddContraction {
  kReject,      // MustResignFirstError
  kAutoResign,  // resign on the least legal shore that makes e even
};
/// Contracts e, merging its ends into the smaller vertex id; later vertex and
/// edge ids shift down by one. Throws InputError on loops.
SignedGraft contract_edge(const SignedGraft& sg, EdgeId e,
                          OddContraction mode = OddContraction::kReject);

/// Result of deleting, resigning and then contracting.
struct Minor {
  SignedGraft graft;
  /// The resigning applied after the deletions.
  VertexSet resign_shore;
  /// Old vertex id -> minor vertex id.
  std::vector<VertexId> vertex_map;
  /// Minor edge id -> old edge id.
  std::vector<EdgeId> kept_edges;
};

/// (G, Sigma, T) / contract_set \ delete_set.
///
/// Deletions come first, then the least shore U making contract_set even is
/// applied, then contract_set is contracted. Edges of contract_set closing an
/// even circuit turn into loops during contraction and are dropped. Throws
/// NotAValidMinorError when no legal resigning exists, InputError on
/// overlapping sets or loops in contract_set.
Minor take_minor(const SignedGraft& sg, EdgeSet delete_set, EdgeSet contract_set);

enum class EulerianBranch { kOddTerminals, kEvenTerminals };
/// Which clause of the Eulerian definition holds, if any. With T empty both
/// clauses collapse to "every degree is even"; the branch then follows the
/// parity of |Sigma|.
std::optional<EulerianBranch> eulerian_branch(const SignedGraft& sg);
bool is_eulerian(const SignedGraft& sg);

/// U with Sigma ^ B = delta(U) and |U & T| even.
std::optional<VertexSet> signature_shore(const SignedGraft& sg, EdgeSet b);
/// U with B = delta(U) and |U & T| odd.
std::optional<VertexSet> tcut_shore(const SignedGraft& sg, EdgeSet b);
bool is_signature(const SignedGraft& sg, EdgeSet b);
bool is_tcut(const SignedGraft& sg, EdgeSet b);
CoverClass classify_cover(const SignedGraft& sg, EdgeSet b);
/// B meets every odd T-join with odd parity. Vacuously true when there is
/// no odd T-join.
bool is_cover(const SignedGraft& sg, EdgeSet b);

/// Every circuit inside F is even.
bool is_bipartite_set(const SignedGraft& sg, EdgeSet f);
bool is_bipartite(const SignedGraft& sg);

}  // namespace oddjoin
