#pragma once

#include <vector>

namespace ppr {

using Embedding = std::vector<float>;

/// L2 normalization phi(v) = v / max(||v||, 1e-12). Norm accumulated in
/// double; components stored as float.
Embedding phi(const Embedding& v);

/// dot(a,b) / (||a|| ||b||), accumulated in double. Throws ConfigError on a
/// zero-norm input or dimension mismatch.
double cosine_similarity(const Embedding& a, const Embedding& b);

/// Squared Euclidean distance between two already-normalized embeddings.
double unit_sq_distance(const Embedding& a, const Embedding& b);

} // namespace ppr
