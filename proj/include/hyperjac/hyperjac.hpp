#ifndef HYPERJAC_HYPERJAC_HPP
#define HYPERJAC_HYPERJAC_HPP

// Exact divisor-class arithmetic on odd-degree hyperelliptic curves
// y^2 = P(x): interpolation-based reduction of arbitrary-degree divisors,
// pair-form addition through minimal-weight rational functions, and the
// classical composition/reduction algorithm as an independent cross-check.

#include "hyperjac/errors.hpp"
#include "hyperjac/fp.hpp"
#include "hyperjac/rational.hpp"
#include "hyperjac/linalg.hpp"
#include "hyperjac/poly.hpp"
#include "hyperjac/curve.hpp"
#include "hyperjac/divisor.hpp"
#include "hyperjac/cantor.hpp"
#include "hyperjac/reduce_explicit.hpp"
#include "hyperjac/reduce_general.hpp"
#include "hyperjac/reduce_iter.hpp"
#include "hyperjac/addition.hpp"
#include "hyperjac/dh.hpp"
#include "hyperjac/io.hpp"

#endif
