#pragma once

// Spectral evolution of 4-spinor wavepackets on a periodic 1-D grid along
// z. Each Fourier mode k evolves with exp(-i H(k z) t), applied exactly
// through a cached eigendecomposition of the 4x4 Hamiltonian.
//
// Grid: x_i = -L/2 + i L/n. Momenta follow FFT ordering,
// k_i = 2 pi i / L for i <= n/2 and 2 pi (i - n) / L above, so the Nyquist
// mode is +pi n / L and the set is (-pi n/L, pi n/L].

#include <complex>
#include <cstddef>
#include <memory>
#include <ostream>
#include <vector>

#include "gendirac/invariance.hpp"
#include "gendirac/operators.hpp"

namespace gendirac {

class WavePacket {
 public:
  /// Zero packet. Throws std::invalid_argument unless n is a power of two
  /// >= 64 and length > 0.
  WavePacket(std::size_t n, double length);

  std::size_t size() const { return n_; }
  double length() const { return length_; }
  double dx() const { return length_ / static_cast<double>(n_); }
  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  double x(std::size_t i) const;
  double k(std::size_t i) const;
  double nyquist() const;

  /// Component `a` of the spinor at grid point i.
  Complex& at(std::size_t i, int a) { return values_[4 * i + static_cast<std::size_t>(a)]; }
  const Complex& at(std::size_t i, int a) const {
    return values_[4 * i + static_cast<std::size_t>(a)];
  }

  Spinor spinor(std::size_t i) const;
  void set_spinor(std::size_t i, const Spinor& s);

  /// Row-major n x 4 storage.
  std::vector<Complex>& values() { return values_; }
  const std::vector<Complex>& values() const { return values_; }

 private:
  std::size_t n_;
  double length_;
  double time_ = 0.0;
  std::vector<Complex> values_;
};

struct GaussianSpec {
  std::size_t n = 1024;
  double length = 400.0;
  double x0 = 0.0;
  double k0 = 0.0;
  double width = 20.0;
  Branch branch = Branch::positive;
};

/// Gaussian envelope exp(-d^2 / (2 w^2)) e^{i k0 x} times the first spinor of
/// `branch` from plane_wave_solve(k0 z), projected mode by mode onto that
/// branch and normalized to unit norm. d is the periodic distance to x0.
/// Throws std::invalid_argument if width < 5 dx or |k0| + 3/width reaches
/// the Nyquist momentum.
WavePacket init_gaussian(const GaussianSpec& spec, const GeneralizedParams& params);

/// Exact propagator for one (grid, params) pair. Not copyable; FFT plans
/// are created and destroyed under a global lock.
class SpectralPropagator {
 public:
  SpectralPropagator(std::size_t n, double length, const GeneralizedParams& params);
  ~SpectralPropagator();
  SpectralPropagator(const SpectralPropagator&) = delete;
  SpectralPropagator& operator=(const SpectralPropagator&) = delete;

  /// psi(t + duration); any finite sign.
  void advance(WavePacket& packet, double duration) const;

  bool matches(std::size_t n, double length, const GeneralizedParams& params) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Advances by dt * steps, one exact step at a time. dt > 0.
void evolve(WavePacket& packet, const GeneralizedParams& params, double dt, std::size_t steps);

struct Observables {
  double norm = 0.0;
  double mean_x = 0.0;
  double spread = 0.0;
  double mean_k = 0.0;
};

Observables observables(const WavePacket& packet);

/// <psi|H|psi> / <psi|psi> evaluated in momentum space.
double energy_expectation(const WavePacket& packet, const GeneralizedParams& params);

/// Momentum-space amplitudes, n x 4 row-major, unnormalized forward FFT.
std::vector<Complex> spectrum(const WavePacket& packet);

struct GroupVelocityOptions {
  std::size_t n = 1024;
  double length = 400.0;
  double width = 20.0;
  double x0 = -50.0;
  std::size_t samples = 20;
};

/// Slope of a least-squares line through mean_x(t) sampled at `samples`+1
/// equally spaced times in [0, t_total]. Throws std::domain_error when
/// t_total is shorter than one light-crossing of a grid cell, and
/// std::invalid_argument for fewer than 10 samples.
double group_velocity_estimate(const GeneralizedParams& params, double k0, double t_total,
                               const GroupVelocityOptions& options = {});

/// d eps_+/dk_z at k = k0 z: (k0 + p~_z) / sqrt(m0^2 + p~_x^2 + p~_y^2 + (k0 + p~_z)^2).
double analytic_group_velocity(const GeneralizedParams& params, double k0);

struct TrajectorySample {
  double t = 0.0;
  Observables obs;
};

/// Observables at t0 and after every `sample_every` steps (and at the end).
std::vector<TrajectorySample> run_trajectory(WavePacket& packet, const GeneralizedParams& params,
                                             double dt, std::size_t steps,
                                             std::size_t sample_every);

/// Header `t,norm,mean_x,spread,mean_k`, %.17g numbers.
void write_trajectory_csv(std::ostream& os, const std::vector<TrajectorySample>& samples);

}  // namespace gendirac
