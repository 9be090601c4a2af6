#include "denum/equation.hpp"

#include <stdexcept>
#include <utility>

#include "denum/errors.hpp"

namespace denum {

EquationSpec EquationSpec::make(std::vector<Int> coefficients,
                                std::optional<Int> modulus_override) {
  if (coefficients.empty()) {
    throw InvalidInputError("equation spec: empty coefficient list");
  }
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] < 1) {
      throw InvalidInputError("equation spec: coefficient a[" +
                              std::to_string(i + 1) + "] = " +
                              coefficients[i].get_str() +
                              " must be positive");
    }
  }

  Int modulus;
  if (modulus_override) {
    modulus = *modulus_override;
    if (modulus < 1) {
      throw InvalidInputError("equation spec: modulus override must be positive");
    }
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      if (modulus % coefficients[i] != 0) {
        throw InvalidInputError(
            "equation spec: modulus override " + modulus.get_str() +
            " is not a multiple of coefficient a[" + std::to_string(i + 1) +
            "] = " + coefficients[i].get_str());
      }
    }
  } else {
    modulus = gcd_lcm_all(coefficients).lcm;
  }

  EquationSpec spec;
  spec.coefficients_ = std::move(coefficients);
  spec.modulus_ = std::move(modulus);
  spec.radices_.reserve(spec.coefficients_.size());
  for (const Int& a : spec.coefficients_) {
    spec.radices_.push_back(spec.modulus_ / a);
  }
  return spec;
}

Count EquationSpec::term_count() const {
  Count product = 1;
  for (const Int& d : radices_) {
    product *= d;
  }
  return product;
}

MixedRadixCursor::MixedRadixCursor(const EquationSpec& spec)
    : spec_(&spec), digits_(spec.n(), Int(0)), running_sum_(0) {}

MixedRadixCursor::MixedRadixCursor(const EquationSpec& spec,
                                   std::vector<Int> digits)
    : spec_(&spec), digits_(std::move(digits)), running_sum_(0) {
  if (digits_.size() != spec.n()) {
    throw InvalidInputError("cursor: digit count does not match the spec");
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] < 0 || digits_[i] >= spec.radices()[i]) {
      throw InvalidInputError("cursor: digit t[" + std::to_string(i + 1) +
                              "] = " + digits_[i].get_str() +
                              " outside [0, " + spec.radices()[i].get_str() +
                              ")");
    }
    running_sum_ += digits_[i] * spec.coefficients()[i];
  }
}

MixedRadixCursor MixedRadixCursor::at_index(const EquationSpec& spec,
                                            const Int& index) {
  if (index < 0) {
    throw InvalidInputError("cursor: negative tuple index");
  }
  std::vector<Int> digits(spec.n());
  Int rest = index;
  for (std::size_t i = 0; i < spec.n(); ++i) {
    mpz_fdiv_qr(rest.get_mpz_t(), digits[i].get_mpz_t(), rest.get_mpz_t(),
                spec.radices()[i].get_mpz_t());
  }
  if (rest != 0) {
    throw InvalidInputError("cursor: tuple index " + index.get_str() +
                            " is not below the term count");
  }
  return MixedRadixCursor(spec, std::move(digits));
}

void MixedRadixCursor::advance() {
  if (exhausted_) {
    throw std::logic_error("cursor: advance past exhaustion");
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] + 1 < spec_->radices()[i]) {
      digits_[i] += 1;
      running_sum_ += spec_->coefficients()[i];
      return;
    }
    // Roll this digit over and carry into the next position.
    running_sum_ -= digits_[i] * spec_->coefficients()[i];
    digits_[i] = 0;
  }
  exhausted_ = true;
}

}  // namespace denum
