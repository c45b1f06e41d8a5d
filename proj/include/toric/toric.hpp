#ifndef TORIC_TORIC_HPP
#define TORIC_TORIC_HPP

#include <toric/number.hpp>
#include <toric/linalg.hpp>
#include <toric/lp.hpp>
#include <toric/polyhedra.hpp>
#include <toric/fan.hpp>
#include <toric/fan_io.hpp>
#include <toric/divisor.hpp>
#include <toric/certificate.hpp>
#include <toric/certificate_io.hpp>
#include <toric/random.hpp>

#endif  // TORIC_TORIC_HPP
