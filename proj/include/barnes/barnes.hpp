// Umbrella header: multiple Hurwitz (Barnes) zeta functions with rational
// periods — exact values at non-positive integers, reduction to ordinary
// Hurwitz zeta data, higher s-derivatives, Stieltjes constants, and multiple
// gamma functions.
#pragma once

#include "barnes/bernoulli.hpp"
#include "barnes/brent.hpp"
#include "barnes/context.hpp"
#include "barnes/errors.hpp"
#include "barnes/hurwitz.hpp"
#include "barnes/multigamma.hpp"
#include "barnes/polynomial.hpp"
#include "barnes/rational.hpp"
#include "barnes/rationalize.hpp"
#include "barnes/reduction.hpp"
#include "barnes/serialize.hpp"
#include "barnes/special_values.hpp"
