#pragma once

// Minimal RAII holder for mpfr_t. Arithmetic goes through the C API so the
// rounding direction of each step stays visible at the call site.

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace dioph::detail {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  MpfrValue(mpfr_prec_t bits, const mpz_class& z, mpfr_rnd_t rnd) : MpfrValue(bits) {
    mpfr_set_z(v_, z.get_mpz_t(), rnd);
  }
  MpfrValue(mpfr_prec_t bits, const char* decimal, mpfr_rnd_t rnd) : MpfrValue(bits) {
    mpfr_set_str(v_, decimal, 10, rnd);
  }
  MpfrValue(mpfr_prec_t bits, double d) : MpfrValue(bits) { mpfr_set_d(v_, d, MPFR_RNDN); }
  ~MpfrValue() { mpfr_clear(v_); }

  MpfrValue(const MpfrValue& other) : MpfrValue(mpfr_get_prec(other.v_)) {
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  MpfrValue& operator=(const MpfrValue& other) {
    if (this != &other) mpfr_set(v_, other.v_, MPFR_RNDN);
    return *this;
  }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }

 private:
  mpfr_t v_;
};

}  // namespace dioph::detail
