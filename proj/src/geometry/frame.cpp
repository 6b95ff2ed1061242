/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/geometry/frame.hpp"

namespace pcv::geometry {

Frame::Frame(std::vector<std::string> names, std::vector<VectorField> vectors, std::vector<int> signs)
    : names_(std::move(names)), vectors_(std::move(vectors)), signs_(std::move(signs)) {
  const auto n = vectors_.size();
  if (n == 0) throw std::invalid_argument("frame is empty");
  if (names_.size() != n || signs_.size() != n) throw std::invalid_argument("frame names, vectors and signs differ in length");
  for (const auto& v : vectors_)
    if (v.dim() != n) throw std::invalid_argument("frame vector dimension does not match frame size");
  for (int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("frame signs must be +1 or -1");

  // Columns are the frame vectors; rows of the inverse are the coframe.
  Matrix m(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) m[i][a] = vectors_[a](i);
  auto inv = inverse(std::move(m));
  if (!inv) throw DegenerateFrame("frame vectors are linearly dependent");
  coframe_.reserve(n);
  for (std::size_t a = 0; a < n; ++a) coframe_.emplace_back(n, (*inv)[a]);
}

std::vector<RationalFunction> express_in_frame(const VectorField& w, const Frame& frame) {
  std::vector<RationalFunction> c;
  c.reserve(frame.size());
  for (const auto& theta : frame.coframe()) c.push_back(apply(theta, w));
  return c;
}

Tensor02 metric_from_frame(const Frame& frame) {
  const auto n = frame.size();
  Tensor02 g(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto term = outer(frame.coframe()[a], frame.coframe()[a]);
    if (frame.signs()[a] < 0) term = -term;
    g += term;
  }
  return g;
}

ConnectionTable connection_table(const Frame& frame, const Christoffel& gamma) {
  const auto n = frame.size();
  ConnectionTable t(n, std::vector<std::vector<RationalFunction>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = express_in_frame(covariant_derivative(gamma, frame[a], frame[b]), frame);
  return t;
}

CurvatureTable curvature_table(const Frame& frame, const RiemannTensor& r) {
  const auto n = frame.size();
  CurvatureTable t(n, std::vector<std::vector<std::vector<RationalFunction>>>(n, std::vector<std::vector<RationalFunction>>(n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) t[a][b][c] = express_in_frame(apply(r, frame[a], frame[b], frame[c]), frame);
  return t;
}

Inertia signature_at(const Metric& g, std::span<const Rational> p) {
  const auto values = evaluate(g.g().tensor(), p);
  const auto n = g.dim();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = values[i * n + j];
  const Inertia in = inertia(std::move(m));
  if (in.zero > 0) throw DegenerateMetric("metric is degenerate at the evaluation point");
  return in;
}

}  // namespace pcv::geometry
