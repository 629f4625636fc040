#pragma once

#include "algebra.hpp"
#include "commforms.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "int_polynomial.hpp"
#include "matrep.hpp"
#include "qbinom.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "serialize.hpp"
