#include "dsii/cauchy.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <sstream>
#include <vector>

#include "dsii/curve.hpp"
#include "dsii/quadrature.hpp"

namespace dsii {

cplx solid_cauchy_disk(cplx z, double radius) {
  if (!(radius > 0.0))
    throw std::invalid_argument("solid_cauchy_disk: radius must be positive");
  if (std::abs(z) <= radius) return std::conj(z);
  return radius * radius / z;
}

namespace {

// FFTW planning is not thread-safe; executions on distinct buffers are.
std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  fftw_complex* p = nullptr;
  explicit FftwBuffer(size_t count) {
    p = fftw_alloc_complex(count);
    if (!p) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(p); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  cplx* data() { return reinterpret_cast<cplx*>(p); }
};

cplx polar_rays_oracle(const ConvexCurve& curve, cplx z, int n_theta, int n_rho) {
  // tensor Gauss-Legendre in (rho, theta) about z; the rho-Jacobian cancels
  // the kernel singularity exactly
  const GaussLegendre gth(n_theta, 0.0, 2.0 * pi);
  const GaussLegendre gr(n_rho, 0.0, 1.0);
  cplx acc = 0.0;
  for (int j = 0; j < n_theta; ++j) {
    const double theta = gth.nodes[j];
    const double rho_max = ray_to_boundary(curve, z, theta);
    if (rho_max <= 0.0) continue;
    const cplx dir = std::polar(1.0, theta);
    for (int i = 0; i < n_rho; ++i) {
      const double rho = rho_max * gr.nodes[i];
      const double w = gth.weights[j] * rho_max * gr.weights[i];
      const cplx wpt = z + rho * dir;
      acc += w * rho / (z - wpt);
    }
  }
  return acc / pi;
}

cplx exterior_star_oracle(const ConvexCurve& curve, cplx z, int quad_n) {
  return area_integral_star(
             curve, [&](cplx w) { return 1.0 / (z - w); }, quad_n, quad_n / 2) /
         pi;
}

}  // namespace

QuadResult solid_cauchy_oracle(const ConvexCurve& curve, cplx z, int quad_n) {
  if (quad_n < 64)
    throw std::invalid_argument("solid_cauchy_oracle: quad_n must be >= 64");
  auto eval = [&](int m) {
    if (curve.contains(z)) return polar_rays_oracle(curve, z, m, 16);
    return exterior_star_oracle(curve, z, m);
  };
  const cplx coarse = eval(quad_n / 2);
  const cplx fine = eval(quad_n);
  return {fine, std::abs(fine - coarse)};
}

cplx solid_cauchy_boundary(const ConvexCurve& curve, double t0, int quad_n) {
  if (quad_n < 64)
    throw std::invalid_argument("solid_cauchy_boundary: quad_n must be >= 64");
  const cplx z0 = curve.point(t0);
  const cplx v0 = curve.velocity(t0);
  cplx acc = 0.0;
  for (int j = 0; j < quad_n; ++j) {
    // nodes pass through t0 itself, where the integrand has the removable
    // value -conj(gamma'(t0))
    const double s = t0 + curve.period() * j / quad_n;
    if (j == 0) {
      acc += -std::conj(v0);
      continue;
    }
    const cplx w = curve.point(s);
    acc += (std::conj(w) - std::conj(z0)) / (z0 - w) * curve.velocity(s);
  }
  // (1/2 pi i) * trapezoid with spacing period/quad_n
  return acc * curve.period() / static_cast<double>(quad_n) /
         (2.0 * pi * cplx(0.0, 1.0));
}

struct CauchyKernelTable::Impl {
  int m = 0;  // doubled side length
  std::vector<cplx> kernel_fft;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  ~Impl() {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
  }
};

CauchyKernelTable::CauchyKernelTable(int n, double box_half_width)
    : impl_(std::make_unique<Impl>()), n_(n), L_(box_half_width) {
  ComplexGrid probe(n, box_half_width);  // reuse layout validation
  const int m = 2 * n;
  impl_->m = m;
  const double dz = probe.spacing();

  FftwBuffer buf(static_cast<size_t>(m) * m);
  cplx* k = buf.data();
  for (int q = 0; q < m; ++q) {
    const int sy = (q < n) ? q : q - m;
    for (int p = 0; p < m; ++p) {
      const int sx = (p < n) ? p : p - m;
      cplx val = 0.0;
      // offsets of magnitude n never occur as sample differences
      if (!(sx == 0 && sy == 0) && sx != -n && sy != -n) {
        const cplx zz(sx * dz, sy * dz);
        val = 1.0 / (pi * zz);
      }
      k[static_cast<size_t>(q) * m + p] = val;
    }
  }

  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    impl_->fwd = fftw_plan_dft_2d(m, m, buf.p, buf.p, FFTW_FORWARD, FFTW_ESTIMATE);
    impl_->bwd = fftw_plan_dft_2d(m, m, buf.p, buf.p, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (!impl_->fwd || !impl_->bwd)
    throw std::runtime_error("CauchyKernelTable: FFTW plan creation failed");

  fftw_execute_dft(impl_->fwd, buf.p, buf.p);
  impl_->kernel_fft.assign(k, k + static_cast<size_t>(m) * m);
}

CauchyKernelTable::~CauchyKernelTable() = default;

cplx CauchyKernelTable::kernel_value(int p, int q) const {
  const int m = impl_->m;
  if (p < 0 || p >= m || q < 0 || q >= m)
    throw std::invalid_argument("CauchyKernelTable: index out of range");
  const int sx = (p < n_) ? p : p - m;
  const int sy = (q < n_) ? q : q - m;
  if ((sx == 0 && sy == 0) || sx == -n_ || sy == -n_) return 0.0;
  const double dz = 2.0 * L_ / n_;
  return 1.0 / (pi * cplx(sx * dz, sy * dz));
}

ComplexGrid CauchyKernelTable::convolve(const ComplexGrid& f) const {
  if (f.n() != n_ || f.box_half_width() != L_)
    throw std::invalid_argument("CauchyKernelTable: grid layout mismatch");
  const int m = impl_->m;
  const size_t mm = static_cast<size_t>(m) * m;
  FftwBuffer buf(mm);
  cplx* b = buf.data();
  std::fill(b, b + mm, cplx(0.0, 0.0));
  for (int iy = 0; iy < n_; ++iy)
    for (int ix = 0; ix < n_; ++ix)
      b[static_cast<size_t>(iy) * m + ix] = f.at(ix, iy);

  fftw_execute_dft(impl_->fwd, buf.p, buf.p);
  const double scale = f.cell_area() / static_cast<double>(mm);
  const cplx* kf = impl_->kernel_fft.data();
  for (size_t i = 0; i < mm; ++i) b[i] *= kf[i] * scale;
  fftw_execute_dft(impl_->bwd, buf.p, buf.p);

  ComplexGrid out(n_, L_);
  for (int iy = 0; iy < n_; ++iy)
    for (int ix = 0; ix < n_; ++ix)
      out.at(ix, iy) = b[static_cast<size_t>(iy) * m + ix];
  return out;
}

namespace {

void require_margin(const ComplexGrid& f, const char* who) {
  const double limit = 0.75 * f.box_half_width();
  const int n = f.n();
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      if (f.at(ix, iy) == cplx(0.0, 0.0)) continue;
      const cplx z = f.z_at(ix, iy);
      if (std::abs(z.real()) > limit || std::abs(z.imag()) > limit) {
        std::ostringstream msg;
        msg << who << ": support at (" << z.real() << ", " << z.imag()
            << ") violates the L/4 margin (|x|,|y| <= " << limit << ")";
        throw std::invalid_argument(msg.str());
      }
    }
}

}  // namespace

ComplexGrid dbar_inverse_grid(const ComplexGrid& f, const CauchyKernelTable& table) {
  require_margin(f, "dbar_inverse_grid");
  return table.convolve(f);
}

ComplexGrid dbar_inverse_grid(const ComplexGrid& f) {
  CauchyKernelTable table(f.n(), f.box_half_width());
  return dbar_inverse_grid(f, table);
}

ComplexGrid del_inverse_grid(const ComplexGrid& f, const CauchyKernelTable& table) {
  // 1/(pi conj(z)) = conj(1/(pi z)), so conjugate in, convolve, conjugate out
  require_margin(f, "del_inverse_grid");
  ComplexGrid g(f.n(), f.box_half_width());
  for (size_t i = 0; i < g.values().size(); ++i)
    g.values()[i] = std::conj(f.values()[i]);
  ComplexGrid out = table.convolve(g);
  for (cplx& v : out.values()) v = std::conj(v);
  return out;
}

ComplexGrid del_inverse_grid(const ComplexGrid& f) {
  CauchyKernelTable table(f.n(), f.box_half_width());
  return del_inverse_grid(f, table);
}

ComplexGrid solid_cauchy_grid(const ComplexGrid& mask, const CauchyKernelTable& table) {
  for (const cplx& v : mask.values())
    if (v != cplx(0.0, 0.0) && v != cplx(1.0, 0.0))
      throw std::invalid_argument(
          "solid_cauchy_grid: mask values must be 0 or 1");
  return dbar_inverse_grid(mask, table);
}

ComplexGrid solid_cauchy_grid(const ComplexGrid& mask) {
  CauchyKernelTable table(mask.n(), mask.box_half_width());
  return solid_cauchy_grid(mask, table);
}

}  // namespace dsii
