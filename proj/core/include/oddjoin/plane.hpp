#pragma once

#include <utility>
#include <vector>

#include "oddjoin/multigraph.hpp"

namespace oddjoin {

/// A plane graph given by its facial walks. Each walk lists edge ids in
/// traversal order; every edge occurs exactly twice over all walks (twice in
/// one walk for a bridge).
struct PlaneEmbedding {
  Multigraph graph;
  std::vector<std::vector<EdgeId>> faces;
};

/// Throws InputError unless every walk is closed, every edge is used twice
/// and Euler's formula n - m + f = 1 + c holds.
void validate_embedding(const PlaneEmbedding& emb);

/// Number of Sigma edges on the walk of face f, counted with multiplicity.
int face_parity(const PlaneEmbedding& emb, EdgeSet sigma, int face);
/// Faces whose walk meets sigma an odd number of times.
std::vector<int> odd_faces(const PlaneEmbedding& emb, EdgeSet sigma);

/// Vertices are faces; edge e joins the two faces holding it (a loop when
/// one face holds it twice). Edge ids are shared with the primal.
Multigraph plane_dual(const PlaneEmbedding& emb);

/// Traces the faces of a crossing-free straight-line drawing. Parallel edges
/// are nested in id order; loops are rejected.
PlaneEmbedding embed_straight_line(const Multigraph& g, const std::vector<std::pair<double, double>>& positions);

}  // namespace oddjoin
