#include "dsii/grid.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>

#include "dsii/curve.hpp"

static_assert(std::endian::native == std::endian::little,
              "grid serialization assumes a little-endian host");

namespace dsii {

ComplexGrid::ComplexGrid(int n, double box_half_width)
    : n_(n), L_(box_half_width) {
  if (n < 16 || (n & (n - 1)) != 0)
    throw std::invalid_argument("ComplexGrid: n must be a power of two >= 16");
  if (!(L_ > 0.0))
    throw std::invalid_argument("ComplexGrid: box half-width must be positive");
  v_.assign(static_cast<size_t>(n_) * n_, cplx(0.0, 0.0));
}

std::pair<int, int> ComplexGrid::nearest_index(cplx z) const {
  const double d = spacing();
  const long ix = std::lround((z.real() + L_) / d);
  const long iy = std::lround((z.imag() + L_) / d);
  if (ix < 0 || ix >= n_ || iy < 0 || iy >= n_) {
    std::ostringstream msg;
    msg << "ComplexGrid: probe point (" << z.real() << ", " << z.imag()
        << ") outside the box [-" << L_ << ", " << L_ << ")^2";
    throw std::invalid_argument(msg.str());
  }
  return {static_cast<int>(ix), static_cast<int>(iy)};
}

void ComplexGrid::require_same_layout(const ComplexGrid& o) const {
  if (!same_layout(o)) {
    std::ostringstream msg;
    msg << "ComplexGrid: layout mismatch (n=" << n_ << ", L=" << L_
        << ") vs (n=" << o.n_ << ", L=" << o.L_ << ")";
    throw std::invalid_argument(msg.str());
  }
}

ComplexGrid ComplexGrid::indicator(const ConvexCurve& curve, int n,
                                   double box_half_width) {
  ComplexGrid g(n, box_half_width);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix)
      if (curve.contains(g.z_at(ix, iy))) g.at(ix, iy) = 1.0;
  return g;
}

void ComplexGrid::write_binary(std::ostream& os) const {
  auto put = [&](double x) {
    os.write(reinterpret_cast<const char*>(&x), sizeof(double));
  };
  put(static_cast<double>(n_));
  put(L_);
  for (const cplx& v : v_) {
    put(v.real());
    put(v.imag());
  }
  if (!os) throw std::runtime_error("ComplexGrid: binary write failed");
}

ComplexGrid ComplexGrid::read_binary(std::istream& is) {
  auto get = [&]() {
    double x;
    is.read(reinterpret_cast<char*>(&x), sizeof(double));
    if (!is) throw std::runtime_error("ComplexGrid: truncated binary stream");
    return x;
  };
  const double nf = get();
  const double L = get();
  const int n = static_cast<int>(nf);
  if (static_cast<double>(n) != nf)
    throw std::runtime_error("ComplexGrid: corrupt binary header");
  ComplexGrid g(n, L);
  for (cplx& v : g.v_) {
    const double re = get();
    const double im = get();
    v = {re, im};
  }
  return g;
}

void ComplexGrid::write_binary_file(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("ComplexGrid: cannot open " + path);
  write_binary(os);
}

ComplexGrid ComplexGrid::read_binary_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("ComplexGrid: cannot open " + path);
  return read_binary(is);
}

void ComplexGrid::write_csv(std::ostream& os) const {
  os << "x,y,re,im\n";
  char buf[128];
  for (int iy = 0; iy < n_; ++iy)
    for (int ix = 0; ix < n_; ++ix) {
      const cplx z = z_at(ix, iy);
      const cplx v = at(ix, iy);
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", z.real(),
                    z.imag(), v.real(), v.imag());
      os << buf;
    }
}

double l2_norm(const ComplexGrid& u) {
  double s = 0.0;
  for (const cplx& v : u.values()) s += std::norm(v);
  return std::sqrt(s * u.cell_area());
}

double l2_norm_masked(const ComplexGrid& u, const ComplexGrid& mask) {
  u.require_same_layout(mask);
  double s = 0.0;
  const auto& uv = u.values();
  const auto& mv = mask.values();
  for (size_t i = 0; i < uv.size(); ++i)
    if (mv[i] != cplx(0.0, 0.0)) s += std::norm(uv[i]);
  return std::sqrt(s * u.cell_area());
}

}  // namespace dsii
