#include "iwa/sprung.hpp"

namespace iwa {

LambdaMatrix2x2 mat_mul(const LambdaMatrix2x2& x, const LambdaMatrix2x2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

FiniteLevelElt mat_det(const LambdaMatrix2x2& x) {
  return x.a * x.d - x.b * x.c;
}

LambdaMatrix2x2 c_matrix(int n, const PAdicScalar& a_p) {
  if (n < 1) throw std::invalid_argument("c_matrix: n must be >= 1");
  const std::uint64_t p = a_p.prime();
  const int N = a_p.precision();
  std::size_t pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  FiniteLevelElt phi =
      reduce_to_level(cyclo_phi(p, N, static_cast<int>(pn), n), n);
  return {FiniteLevelElt::constant(p, N, n, a_p.value()),
          FiniteLevelElt::constant(p, N, n, 1), -phi, FiniteLevelElt(p, N, n)};
}

SeriesMatrix2x2 h_matrix_series(int n, const PAdicScalar& a_p) {
  if (n < 1) throw std::invalid_argument("h_matrix_series: n must be >= 1");
  const std::uint64_t p = a_p.prime();
  const int N = a_p.precision();
  int D = 1;
  for (int i = 0; i < n; ++i) D *= static_cast<int>(p);
  D -= 1;  // entry degrees stay below p^n
  SeriesElt zero(p, N, D);
  SeriesElt one = SeriesElt::constant(p, N, D, 1);
  SeriesMatrix2x2 h{one, zero, zero, one};
  for (int j = 1; j <= n; ++j) {
    int pj = 1;
    for (int i = 0; i < j; ++i) pj *= static_cast<int>(p);
    SeriesElt phi = cyclo_phi(p, N, pj, j).truncated(D);
    SeriesElt ap = SeriesElt::constant(p, N, D, a_p.value());
    // Left-multiply by C_j = [[a_p, 1], [-Phi_j, 0]].
    SeriesElt ra = ap * h.a + h.c;
    SeriesElt rb = ap * h.b + h.d;
    SeriesElt rc = -(phi * h.a);
    SeriesElt rd = -(phi * h.b);
    h = {ra, rb, rc, rd};
  }
  return h;
}

LambdaMatrix2x2 h_matrix(int n, const PAdicScalar& a_p) {
  SeriesMatrix2x2 h = h_matrix_series(n, a_p);
  return {reduce_to_level(h.a, n), reduce_to_level(h.b, n),
          reduce_to_level(h.c, n), reduce_to_level(h.d, n)};
}

std::pair<FiniteLevelElt, FiniteLevelElt> apply_h(int n,
                                                  const PAdicScalar& a_p,
                                                  const SeriesElt& l_sharp,
                                                  const SeriesElt& l_flat) {
  if (l_sharp.prime() != a_p.prime() || l_sharp.precision() != a_p.precision() ||
      l_flat.prime() != a_p.prime() || l_flat.precision() != a_p.precision())
    throw std::invalid_argument("apply_h: mismatched rings");
  LambdaMatrix2x2 h = h_matrix(n, a_p);
  FiniteLevelElt x = reduce_to_level(l_sharp, n);
  FiniteLevelElt y = reduce_to_level(l_flat, n);
  return {h.a * x + h.b * y, h.c * x + h.d * y};
}

}  // namespace iwa
