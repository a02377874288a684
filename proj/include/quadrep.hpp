#pragma once

#include "quadrep/arith.hpp"
#include "quadrep/checked.hpp"
#include "quadrep/claims.hpp"
#include "quadrep/formulas.hpp"
#include "quadrep/harness.hpp"
#include "quadrep/qseries.hpp"
#include "quadrep/rational.hpp"
#include "quadrep/repcount.hpp"
