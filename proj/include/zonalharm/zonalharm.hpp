#pragma once

#include "bessel.hpp"
#include "gegenbauer.hpp"
#include "harmonic.hpp"
#include "poly_io.hpp"
#include "polynomial.hpp"
#include "quadrature.hpp"
#include "rational.hpp"
#include "transforms.hpp"
#include "zonal.hpp"
