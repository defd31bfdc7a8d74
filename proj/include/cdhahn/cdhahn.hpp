#pragma once

#include "cdhahn/asymptotics.hpp"
#include "cdhahn/cdh.hpp"
#include "cdhahn/complex_math.hpp"
#include "cdhahn/errors.hpp"
#include "cdhahn/hypergeometric.hpp"
#include "cdhahn/quadrature.hpp"
