#pragma once
#include <gmpxx.h>
#include <string>

namespace cyclo {

// Exact rational scalar. Everything in the engine computes over Q (or Q[t]);
// there is no floating point anywhere.
using Rat = mpq_class;

// Accepts "p", "-p", "p/q"; result is canonicalized.
Rat rat_from_string(const std::string& s);

std::string rat_to_string(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

} // namespace cyclo
