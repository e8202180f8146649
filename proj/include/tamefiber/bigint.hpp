#pragma once

#include <gmpxx.h>

namespace tamefiber {

using BigInt = mpz_class;
using BigRat = mpq_class;

}  // namespace tamefiber
