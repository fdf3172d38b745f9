#ifndef HK_LOWDISC_HPP
#define HK_LOWDISC_HPP

namespace hk {

/// Radical-inverse (van der Corput) value of index i in the given base;
/// Halton points are tuples of these across coprime bases. Deterministic;
/// suites start at index offset 1 (index 0 is the origin).
inline double radical_inverse(unsigned long long i, unsigned base) {
  double inv = 1.0 / base;
  double f = inv;
  double x = 0.0;
  while (i != 0) {
    x += static_cast<double>(i % base) * f;
    i /= base;
    f *= inv;
  }
  return x;
}

}  // namespace hk

#endif
