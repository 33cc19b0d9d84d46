#include "cvxlat/verify/random.hpp"

#include <algorithm>

#include "cvxlat/rational.hpp"

namespace cvxlat::verify {

std::vector<QPoint> random_points(std::mt19937_64& rng, std::size_t count, std::size_t dim, long range, long den) {
  std::uniform_int_distribution<long> coord(-range, range);
  std::vector<QPoint> out;
  for (std::size_t guard = 0; out.size() < count && guard < 100 * count + 100; ++guard) {
    std::vector<Rat> c;
    for (std::size_t k = 0; k < dim; ++k) c.push_back(make_rat(coord(rng), den));
    QPoint p(std::move(c));
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

QPoint random_in_hull(std::mt19937_64& rng, const std::vector<QPoint>& vertices, long den) {
  std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
  std::vector<long> w(vertices.size(), 0);
  for (long k = 0; k < den; ++k) ++w[pick(rng)];
  QPoint q = QPoint::zero(vertices[0].dim());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (w[i]) q += make_rat(w[i], den) * vertices[i];
  }
  return q;
}

std::vector<QPoint> parabola_polygon(std::size_t k) {
  std::vector<QPoint> out;
  for (std::size_t i = 0; i < k; ++i) {
    const long x = static_cast<long>(i);
    out.push_back(QPoint({make_rat(x), make_rat(x * x)}));
  }
  return out;
}

}  // namespace cvxlat::verify
