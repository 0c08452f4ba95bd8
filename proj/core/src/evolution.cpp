#include "gendirac/evolution.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <fftw3.h>

#include <Eigen/Eigenvalues>

#include "gendirac/report.hpp"

namespace gendirac {

namespace {

constexpr Complex kI{0.0, 1.0};

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }
fftw_complex* as_fftw(const Complex* p) { return reinterpret_cast<fftw_complex*>(const_cast<Complex*>(p)); }

// Four interleaved transforms of length n over n x 4 row-major data.
class FftPlans {
 public:
  explicit FftPlans(std::size_t n) : n_(n) {
    std::vector<Complex> a(4 * n), b(4 * n);
    const int len = static_cast<int>(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    std::lock_guard<std::mutex> lock(planner_mutex());
    forward_ = fftw_plan_many_dft(1, &len, 4, as_fftw(a.data()), nullptr, 4, 1, as_fftw(b.data()),
                                  nullptr, 4, 1, FFTW_FORWARD, flags);
    backward_ = fftw_plan_many_dft(1, &len, 4, as_fftw(a.data()), nullptr, 4, 1, as_fftw(b.data()),
                                   nullptr, 4, 1, FFTW_BACKWARD, flags);
    if (forward_ == nullptr || backward_ == nullptr) throw std::runtime_error("FFTW planning failed");
  }
  ~FftPlans() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
  }
  FftPlans(const FftPlans&) = delete;
  FftPlans& operator=(const FftPlans&) = delete;

  void forward(const std::vector<Complex>& in, std::vector<Complex>& out) const {
    out.resize(in.size());
    fftw_execute_dft(forward_, as_fftw(in.data()), as_fftw(out.data()));
  }
  void inverse(const std::vector<Complex>& in, std::vector<Complex>& out) const {
    out.resize(in.size());
    fftw_execute_dft(backward_, as_fftw(in.data()), as_fftw(out.data()));
    const double scale = 1.0 / static_cast<double>(n_);
    for (auto& z : out) z *= scale;
  }

 private:
  std::size_t n_;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

std::shared_ptr<const FftPlans> plans_for(std::size_t n) {
  static std::mutex cache_mutex;
  static std::map<std::size_t, std::shared_ptr<const FftPlans>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const FftPlans>(n);
  return slot;
}

// Compensated summation, so observables do not depend on grid size quirks.
class NeumaierSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Momentum along_z(double k) { return {0.0, 0.0, k}; }

// (1/2)(I +- (alpha.P + m0 beta)/E) for the branch at momentum k z.
ComplexMatrix4 branch_projector(double k, const GeneralizedParams& params, Branch branch) {
  const ComplexMatrix4 h0 = alpha_dot(along_z(k) + p_tilde_vector(params)) + params.m0() * beta();
  const double e = std::sqrt(params.m0() * params.m0() +
                             (along_z(k) + p_tilde_vector(params)).squaredNorm());
  ComplexMatrix4 plus;
  if (e == 0.0) {
    plus.setZero();
    plus.diagonal() << 1.0, 1.0, 0.0, 0.0;
  } else {
    plus = 0.5 * (ComplexMatrix4::Identity() + h0 / e);
  }
  return branch == Branch::positive ? plus : ComplexMatrix4(ComplexMatrix4::Identity() - plus);
}

double packet_norm(const std::vector<Complex>& values, double dx) {
  NeumaierSum s;
  for (const auto& z : values) s.add(std::norm(z));
  return s.value() * dx;
}

}  // namespace

WavePacket::WavePacket(std::size_t n, double length) : n_(n), length_(length), values_(4 * n) {
  if (!is_power_of_two(n) || n < 64) {
    throw std::invalid_argument("grid size must be a power of two >= 64");
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("domain length must be positive");
  }
}

double WavePacket::x(std::size_t i) const {
  return -0.5 * length_ + static_cast<double>(i) * dx();
}

double WavePacket::k(std::size_t i) const {
  const double dk = 2.0 * std::numbers::pi / length_;
  const auto si = static_cast<double>(i);
  return i <= n_ / 2 ? dk * si : dk * (si - static_cast<double>(n_));
}

double WavePacket::nyquist() const {
  return std::numbers::pi * static_cast<double>(n_) / length_;
}

Spinor WavePacket::spinor(std::size_t i) const {
  return Spinor(at(i, 0), at(i, 1), at(i, 2), at(i, 3));
}

void WavePacket::set_spinor(std::size_t i, const Spinor& s) {
  for (int a = 0; a < 4; ++a) at(i, a) = s(a);
}

std::vector<Complex> spectrum(const WavePacket& packet) {
  std::vector<Complex> out;
  plans_for(packet.size())->forward(packet.values(), out);
  return out;
}

WavePacket init_gaussian(const GaussianSpec& spec, const GeneralizedParams& params) {
  WavePacket packet(spec.n, spec.length);
  if (!std::isfinite(spec.x0) || !std::isfinite(spec.k0)) {
    throw std::invalid_argument("packet centre and momentum must be finite");
  }
  if (!(spec.width >= 5.0 * packet.dx())) {
    throw std::invalid_argument("packet width must be at least 5 grid cells");
  }
  if (!(std::abs(spec.k0) + 3.0 / spec.width < packet.nyquist())) {
    throw std::invalid_argument("packet momentum support reaches the grid Nyquist momentum");
  }

  const auto solutions = plane_wave_solve(along_z(spec.k0), params);
  const Spinor& u = solutions[spec.branch == Branch::positive ? 0 : 2].spinor;
  for (std::size_t i = 0; i < packet.size(); ++i) {
    double d = std::remainder(packet.x(i) - spec.x0, spec.length);
    const double envelope = std::exp(-d * d / (2.0 * spec.width * spec.width));
    packet.set_spinor(i, envelope * std::exp(kI * spec.k0 * packet.x(i)) * u);
  }

  const auto plans = plans_for(packet.size());
  std::vector<Complex> modes;
  plans->forward(packet.values(), modes);
  for (std::size_t i = 0; i < packet.size(); ++i) {
    const ComplexMatrix4 p = branch_projector(packet.k(i), params, spec.branch);
    const Spinor s = p * Spinor(modes[4 * i], modes[4 * i + 1], modes[4 * i + 2], modes[4 * i + 3]);
    for (int a = 0; a < 4; ++a) modes[4 * i + static_cast<std::size_t>(a)] = s(a);
  }
  plans->inverse(modes, packet.values());

  const double scale = 1.0 / std::sqrt(packet_norm(packet.values(), packet.dx()));
  for (auto& z : packet.values()) z *= scale;
  return packet;
}

struct SpectralPropagator::Impl {
  std::size_t n;
  double length;
  Complex a;
  ComplexVec4 c;
  std::shared_ptr<const FftPlans> plans;
  std::vector<ComplexMatrix4> vectors;
  std::vector<Eigen::Vector4d> values;

  // Mode unitaries for the most recent duration.
  mutable std::mutex cache_mutex;
  mutable double cached_duration = std::numeric_limits<double>::quiet_NaN();
  mutable std::vector<ComplexMatrix4> unitaries;
};

SpectralPropagator::SpectralPropagator(std::size_t n, double length,
                                       const GeneralizedParams& params)
    : impl_(std::make_unique<Impl>()) {
  const WavePacket grid(n, length);
  impl_->n = n;
  impl_->length = length;
  impl_->a = params.a();
  impl_->c = params.c();
  impl_->plans = plans_for(n);
  impl_->vectors.resize(n);
  impl_->values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix4> solver(hamiltonian_matrix(along_z(grid.k(i)), params));
    if (solver.info() != Eigen::Success) throw std::runtime_error("mode eigensolve failed");
    impl_->vectors[i] = solver.eigenvectors();
    impl_->values[i] = solver.eigenvalues();
  }
}

SpectralPropagator::~SpectralPropagator() = default;

bool SpectralPropagator::matches(std::size_t n, double length,
                                 const GeneralizedParams& params) const {
  return impl_->n == n && impl_->length == length && impl_->a == params.a() &&
         impl_->c == params.c();
}

void SpectralPropagator::advance(WavePacket& packet, double duration) const {
  if (packet.size() != impl_->n || packet.length() != impl_->length) {
    throw std::invalid_argument("packet grid does not match the propagator");
  }
  if (!std::isfinite(duration)) throw std::invalid_argument("duration must be finite");

  std::vector<Complex> modes;
  impl_->plans->forward(packet.values(), modes);
  {
    std::lock_guard<std::mutex> lock(impl_->cache_mutex);
    if (!(impl_->cached_duration == duration)) {
      impl_->unitaries.resize(impl_->n);
      for (std::size_t i = 0; i < impl_->n; ++i) {
        Eigen::Vector4cd phases;
        for (int a = 0; a < 4; ++a) phases(a) = std::exp(-kI * impl_->values[i](a) * duration);
        const ComplexMatrix4& v = impl_->vectors[i];
        impl_->unitaries[i] = v * phases.asDiagonal() * v.adjoint();
      }
      impl_->cached_duration = duration;
    }
    for (std::size_t i = 0; i < impl_->n; ++i) {
      Eigen::Map<Spinor> mode(modes.data() + 4 * i);
      mode = (impl_->unitaries[i] * mode).eval();
    }
  }
  impl_->plans->inverse(modes, packet.values());
  packet.set_time(packet.time() + duration);
}

namespace {

std::shared_ptr<const SpectralPropagator> propagator_for(std::size_t n, double length,
                                                         const GeneralizedParams& params) {
  static std::mutex cache_mutex;
  static std::vector<std::shared_ptr<const SpectralPropagator>> cache;
  constexpr std::size_t kCacheSize = 4;
  std::lock_guard<std::mutex> lock(cache_mutex);
  for (const auto& p : cache) {
    if (p->matches(n, length, params)) return p;
  }
  auto p = std::make_shared<const SpectralPropagator>(n, length, params);
  if (cache.size() == kCacheSize) cache.erase(cache.begin());
  cache.push_back(p);
  return p;
}

}  // namespace

void evolve(WavePacket& packet, const GeneralizedParams& params, double dt, std::size_t steps) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive");
  const auto propagator = propagator_for(packet.size(), packet.length(), params);
  const double t0 = packet.time();
  for (std::size_t s = 0; s < steps; ++s) propagator->advance(packet, dt);
  packet.set_time(t0 + dt * static_cast<double>(steps));
}

Observables observables(const WavePacket& packet) {
  const double dx = packet.dx();
  NeumaierSum norm, first;
  for (std::size_t i = 0; i < packet.size(); ++i) {
    const double w = packet.spinor(i).squaredNorm();
    norm.add(w);
    first.add(w * packet.x(i));
  }
  Observables obs;
  obs.norm = norm.value() * dx;
  obs.mean_x = first.value() / norm.value();
  NeumaierSum second;
  for (std::size_t i = 0; i < packet.size(); ++i) {
    const double d = packet.x(i) - obs.mean_x;
    second.add(packet.spinor(i).squaredNorm() * d * d);
  }
  obs.spread = std::sqrt(second.value() / norm.value());

  const auto modes = spectrum(packet);
  NeumaierSum weight, kw;
  for (std::size_t i = 0; i < packet.size(); ++i) {
    double w = 0.0;
    for (int a = 0; a < 4; ++a) w += std::norm(modes[4 * i + static_cast<std::size_t>(a)]);
    weight.add(w);
    kw.add(w * packet.k(i));
  }
  obs.mean_k = kw.value() / weight.value();
  return obs;
}

double energy_expectation(const WavePacket& packet, const GeneralizedParams& params) {
  const auto modes = spectrum(packet);
  NeumaierSum weight, energy;
  for (std::size_t i = 0; i < packet.size(); ++i) {
    const Spinor s(modes[4 * i], modes[4 * i + 1], modes[4 * i + 2], modes[4 * i + 3]);
    weight.add(s.squaredNorm());
    energy.add(s.dot(hamiltonian_matrix(along_z(packet.k(i)), params) * s).real());
  }
  return energy.value() / weight.value();
}

double analytic_group_velocity(const GeneralizedParams& params, double k0) {
  const Momentum p = along_z(k0) + p_tilde_vector(params);
  return p.z() / std::sqrt(params.m0() * params.m0() + p.squaredNorm());
}

double group_velocity_estimate(const GeneralizedParams& params, double k0, double t_total,
                               const GroupVelocityOptions& options) {
  if (options.samples < 10) throw std::invalid_argument("group velocity fit needs >= 10 samples");
  GaussianSpec spec;
  spec.n = options.n;
  spec.length = options.length;
  spec.x0 = options.x0;
  spec.k0 = k0;
  spec.width = options.width;
  const WavePacket initial = init_gaussian(spec, params);
  if (!(t_total >= initial.dx())) {
    throw std::domain_error("t_total too short to resolve any displacement on this grid");
  }

  const auto propagator = propagator_for(spec.n, spec.length, params);
  NeumaierSum st, sx, stt, stx;
  const double count = static_cast<double>(options.samples + 1);
  for (std::size_t s = 0; s <= options.samples; ++s) {
    const double t = t_total * static_cast<double>(s) / static_cast<double>(options.samples);
    WavePacket packet = initial;
    propagator->advance(packet, t);
    const double x = observables(packet).mean_x;
    st.add(t);
    sx.add(x);
    stt.add(t * t);
    stx.add(t * x);
  }
  const double denom = count * stt.value() - st.value() * st.value();
  return (count * stx.value() - st.value() * sx.value()) / denom;
}

std::vector<TrajectorySample> run_trajectory(WavePacket& packet, const GeneralizedParams& params,
                                             double dt, std::size_t steps,
                                             std::size_t sample_every) {
  if (sample_every == 0) throw std::invalid_argument("sample_every must be positive");
  std::vector<TrajectorySample> samples;
  samples.push_back({packet.time(), observables(packet)});
  std::size_t done = 0;
  while (done < steps) {
    const std::size_t chunk = std::min(sample_every, steps - done);
    evolve(packet, params, dt, chunk);
    done += chunk;
    samples.push_back({packet.time(), observables(packet)});
  }
  return samples;
}

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectorySample>& samples) {
  os << "t,norm,mean_x,spread,mean_k\n";
  for (const auto& s : samples) {
    os << format_double(s.t) << ',' << format_double(s.obs.norm) << ','
       << format_double(s.obs.mean_x) << ',' << format_double(s.obs.spread) << ','
       << format_double(s.obs.mean_k) << '\n';
  }
}

}  // namespace gendirac
