#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace bergman {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Error taxonomy. The CLI maps these onto its exit codes: parameter and
// precondition violations are caller mistakes, numeric_guard_error means an
// overflow/indeterminacy guard tripped, resource_cap_error means a configured
// cost cap was exceeded.
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class numeric_guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class resource_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point of the open unit disc. Validates on construction; converts
// implicitly to std::complex for arithmetic.
struct DiscPoint {
  double re = 0.0;
  double im = 0.0;

  DiscPoint() = default;
  DiscPoint(double x, double y) : re(x), im(y) { check(); }
  DiscPoint(cplx z) : re(z.real()), im(z.imag()) { check(); }  // NOLINT(google-explicit-constructor)

  operator cplx() const { return {re, im}; }  // NOLINT(google-explicit-constructor)
  cplx value() const { return {re, im}; }
  double abs() const { return std::abs(value()); }
  double abs2() const { return re * re + im * im; }

 private:
  void check() const {
    if (!(re * re + im * im < 1.0))
      throw parameter_error("DiscPoint outside the open unit disc");
  }
};

// Angle difference wrapped to [-pi, pi].
inline double angle_diff(double a, double b) {
  return std::remainder(a - b, kTwoPi);
}

inline int hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("BERGMAN_LAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0 && v < 1024) n = static_cast<unsigned>(v);
  }
  return n == 0 ? 1 : static_cast<int>(n);
}

// Deterministic parallel reduction: the range is cut into fixed-size chunks,
// each chunk is summed sequentially, and the chunk partials are added in chunk
// order. The result does not depend on the number of worker threads.
double chunked_sum(std::size_t n, const std::function<double(std::size_t, std::size_t)>& chunk_sum,
                   std::size_t chunk = 1 << 14);

// Runs fn(begin, end) over fixed chunks on the worker pool; no reduction.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                     std::size_t chunk = 1 << 12);

}  // namespace bergman
